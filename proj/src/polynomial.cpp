#include "reflecta/polynomial.hpp"

namespace reflecta {

PolyQ gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        PolyQ r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(mpq_class(1) / a.leading());
}

PolyQ to_rational(const PolyC& p) {
    std::vector<mpq_class> c;
    for (const auto& x : p.coefficients()) c.push_back(x.rational());
    return PolyQ(std::move(c));
}

PolyC to_cyclotomic(const PolyQ& p) {
    std::vector<Cyclotomic> c;
    for (const auto& x : p.coefficients()) c.emplace_back(x);
    return PolyC(std::move(c));
}

}  // namespace reflecta
