#include "reflecta/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace reflecta {

RationalFunctionQ::RationalFunctionQ(PolyQ num, PolyQ den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = PolyQ(mpq_class(1));
        return;
    }
    PolyQ g = gcd(num, den);
    if (g.degree() > 0) {
        num = num.divexact(g);
        den = den.divexact(g);
    }
    mpq_class lead = den.leading();
    num_ = num.scaled(mpq_class(1) / lead);
    den_ = den.scaled(mpq_class(1) / lead);
}

PolyQ RationalFunctionQ::as_polynomial() const {
    if (!is_polynomial()) throw std::domain_error("rational function is not a polynomial: " + to_string());
    return num_;
}

RationalFunctionQ RationalFunctionQ::operator+(const RationalFunctionQ& o) const {
    if (den_ == o.den_) return RationalFunctionQ(num_ + o.num_, den_);
    return RationalFunctionQ(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunctionQ RationalFunctionQ::operator-(const RationalFunctionQ& o) const { return *this + (-o); }

RationalFunctionQ RationalFunctionQ::operator*(const RationalFunctionQ& o) const {
    return RationalFunctionQ(num_ * o.num_, den_ * o.den_);
}

RationalFunctionQ RationalFunctionQ::operator/(const RationalFunctionQ& o) const {
    if (o.is_zero()) throw std::domain_error("rational function division by zero");
    return RationalFunctionQ(num_ * o.den_, den_ * o.num_);
}

std::string RationalFunctionQ::to_string(const std::string& var) const {
    if (is_polynomial()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

MultiPoly MultiPoly::constant(int vars, const RationalFunctionQ& c) {
    MultiPoly m(vars);
    m.add_term(Exponents(static_cast<std::size_t>(vars), 0), c);
    return m;
}

MultiPoly MultiPoly::variable(int vars, int i) {
    MultiPoly m(vars);
    Exponents e(static_cast<std::size_t>(vars), 0);
    e[static_cast<std::size_t>(i)] = 1;
    m.add_term(e, RationalFunctionQ(PolyQ(mpq_class(1))));
    return m;
}

MultiPoly MultiPoly::subset_monomial(int vars, unsigned mask, const RationalFunctionQ& c) {
    MultiPoly m(vars);
    Exponents e(static_cast<std::size_t>(vars), 0);
    for (int i = 0; i < vars; ++i) e[static_cast<std::size_t>(i)] = static_cast<int>((mask >> i) & 1u);
    m.add_term(e, c);
    return m;
}

void MultiPoly::add_term(const Exponents& e, const RationalFunctionQ& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

RationalFunctionQ MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? RationalFunctionQ() : it->second;
}

RationalFunctionQ MultiPoly::subset_coeff(unsigned mask) const {
    Exponents e(static_cast<std::size_t>(vars_), 0);
    for (int i = 0; i < vars_; ++i) e[static_cast<std::size_t>(i)] = static_cast<int>((mask >> i) & 1u);
    return coeff(e);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("multivariate polynomials in different variables");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + o.scaled(RationalFunctionQ(PolyQ(mpq_class(-1)))); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("multivariate polynomials in different variables");
    MultiPoly r(vars_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) {
            Exponents e(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] + b[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::scaled(const RationalFunctionQ& c) const {
    MultiPoly r(vars_);
    for (const auto& [e, x] : terms_) r.add_term(e, x * c);
    return r;
}

RationalFunctionQ MultiPoly::at_t(const mpq_class& t) const {
    RationalFunctionQ s;
    for (const auto& [e, c] : terms_) {
        mpq_class w = 1;
        for (int k : e)
            for (int j = 0; j < k; ++j) w *= t;
        s = s + c * RationalFunctionQ(PolyQ(w));
    }
    return s;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << " * t" << i + 1;
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

namespace {

int subgroup_exponent(const GroupTable& t, const Subgroup& h) {
    int e = 1;
    for (int g : h.members()) e = std::lcm(e, t.element_order(g));
    return e;
}

// (1/|H|) sum over H of weight(h)/det(1 - q h), as a rational function.
template <class Weight>
RationalFunctionQ averaged_inverse_det(const LinearGroup& lg, const Subgroup& h, Weight weight) {
    const GroupTable& t = lg.table();
    int e = subgroup_exponent(t, h);
    auto l = static_cast<unsigned>(lg.dim());
    PolyC common = PolyC::one_minus_power(static_cast<std::size_t>(e)).pow(l);
    ConjugacyClasses cl = conjugacy_classes(t, h);
    PolyC num;
    for (std::size_t c = 0; c < cl.count(); ++c) {
        int g = cl.reps[c];
        Cyclotomic w = weight(g);
        if (w.is_zero()) continue;
        PolyC part = common.divexact(lg.det_one_minus(g));
        num += part.scaled(w * Cyclotomic(static_cast<long>(cl.sizes[c])));
    }
    num = num.scaled(Cyclotomic(1) / Cyclotomic(static_cast<long>(h.order())));
    return RationalFunctionQ(to_rational(num), to_rational(common));
}

RationalFunctionQ symmetric_algebra(const LinearGroup& lg) {
    return RationalFunctionQ(PolyQ(mpq_class(1)), PolyQ::one_minus_power(1).pow(static_cast<unsigned>(lg.dim())));
}

Mask interval_mask(int a, int b) {  // generators a..b, 1-indexed, empty when a > b
    Mask m = 0;
    for (int k = a; k <= b; ++k) m |= Mask{1} << (k - 1);
    return m;
}

class HilbertCache {
public:
    explicit HilbertCache(const LinearGroup& lg) : lg_(lg) {}
    const PolyQ& operator()(Mask K) {
        auto it = cache_.find(K);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(K, coinvariant_hilbert(lg_, standard_parabolic(lg_.table(), K))).first->second;
    }

private:
    const LinearGroup& lg_;
    std::unordered_map<Mask, PolyQ> cache_;
};

}  // namespace

RationalFunctionQ molien(const LinearGroup& lg, const Subgroup& h) {
    return averaged_inverse_det(lg, h, [](int) { return Cyclotomic(1); });
}

std::vector<int> degrees(const LinearGroup& lg) {
    RationalFunctionQ m = molien(lg, whole_group(lg.table()));
    if (m.numerator().degree() != 0) throw InvariantViolation("Molien series has a nonconstant numerator");
    PolyQ den = m.denominator().scaled(mpq_class(1) / m.denominator().coeff(0));
    std::vector<int> d;
    while (den.degree() > 0) {
        std::size_t k = 1;
        while (den.coeff(k) == 0) ++k;
        auto [q, r] = den.divmod(PolyQ::one_minus_power(k));
        if (!r.is_zero()) throw InvariantViolation("Molien denominator is not a product of 1 - q^d");
        d.push_back(static_cast<int>(k));
        den = q;
    }
    if (d.size() != lg.dim()) throw InvariantViolation("number of degrees differs from the rank");
    std::sort(d.begin(), d.end());
    return d;
}

PolyQ coinvariant_hilbert(const LinearGroup& lg, const Subgroup& h) {
    return (symmetric_algebra(lg) / molien(lg, h)).as_polynomial();
}

PolyQ graded_multiplicity(const ClassFunction& chi, const LinearGroup& lg) {
    const Subgroup& g = chi.context()->group;
    RationalFunctionQ pairing = averaged_inverse_det(lg, g, [&](int x) { return chi.at(x).conj(); });
    RationalFunctionQ r = pairing / molien(lg, whole_group(lg.table()));
    if (!r.is_polynomial()) throw InvariantViolation("graded multiplicity is not a polynomial: " + r.to_string());
    return r.as_polynomial();
}

MultiPoly ribbon_gf_direct(const LinearGroup& lg) {
    const GroupTable& t = lg.table();
    int l = t.rank();
    Mask full = t.full_mask();
    HilbertCache hilb(lg);
    const PolyQ& w = hilb(full);
    MultiPoly out(l);
    for (Mask T = 0; T <= full; ++T) {
        PolyQ c;
        for (Mask J = T;; J = (J - 1) & T) {
            PolyQ idx = w.divexact(hilb(full & ~J));
            c = popcount(T & ~J) % 2 == 0 ? c + idx : c - idx;
            if (J == 0) break;
        }
        out = out + MultiPoly::subset_monomial(l, T, RationalFunctionQ(c));
    }
    return out;
}

MultiPoly ribbon_gf_characters(const LinearGroup& lg) {
    const GroupTable& t = lg.table();
    int l = t.rank();
    ContextPtr ctx = whole_context(lg.table_ptr());
    MultiPoly out(l);
    for (Mask T = 0; T <= t.full_mask(); ++T)
        out = out + MultiPoly::subset_monomial(l, T, RationalFunctionQ(graded_multiplicity(ribbon_character(ctx, 0, T), lg)));
    return out;
}

MultiPoly ribbon_gf_determinant(const LinearGroup& lg) {
    const GroupTable& t = lg.table();
    if (!t.presentation() || !t.presentation()->is_linear())
        throw std::invalid_argument("determinant route needs a linear diagram");
    int l = t.rank();
    HilbertCache hilb(lg);
    auto inv_w = [&](int a, int b) {
        return RationalFunctionQ(PolyQ(mpq_class(1)), hilb(interval_mask(a, b)));
    };
    MultiPoly one = MultiPoly::constant(l, RationalFunctionQ(PolyQ(mpq_class(1))));

    // Rows 0..l, columns 1..l+1 stored at index j - 1.
    auto n = static_cast<std::size_t>(l + 1);
    std::vector<std::vector<MultiPoly>> a(n, std::vector<MultiPoly>(n, MultiPoly(l)));
    for (int j = 1; j <= l + 1; ++j) a[0][static_cast<std::size_t>(j - 1)] = one.scaled(inv_w(1, j - 1));
    for (int i = 1; i <= l; ++i) {
        MultiPoly ti = MultiPoly::variable(l, i - 1);
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i - 1)] = ti - one;
        for (int j = i + 1; j <= l + 1; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] = ti.scaled(inv_w(i + 1, j - 1));
    }

    // Determinant by dynamic programming over sets of used columns.
    std::unordered_map<unsigned, MultiPoly> dp{{0u, one}};
    for (std::size_t row = 0; row < n; ++row) {
        std::unordered_map<unsigned, MultiPoly> next;
        for (const auto& [used, val] : dp)
            for (std::size_t c = 0; c < n; ++c) {
                if ((used >> c) & 1u || a[row][c].terms().empty()) continue;
                int above = popcount(used >> (c + 1));
                MultiPoly term = val * a[row][c];
                if (above % 2) term = term.scaled(RationalFunctionQ(PolyQ(mpq_class(-1))));
                unsigned key = used | (1u << c);
                auto it = next.find(key);
                if (it == next.end())
                    next.emplace(key, term);
                else
                    it->second = it->second + term;
            }
        dp = std::move(next);
    }
    MultiPoly det = dp.count((1u << n) - 1) ? dp.at((1u << n) - 1) : MultiPoly(l);
    return det.scaled(RationalFunctionQ(hilb(t.full_mask())));
}

MultiPoly eulerian_distribution(const GroupTable& t) {
    for (int i = 0; i < t.rank(); ++i)
        if (t.generator_order(i) != 2) throw std::invalid_argument("Eulerian distribution needs involutive generators");
    int l = t.rank();
    std::vector<std::vector<mpq_class>> tally(std::size_t{1} << l);
    for (std::size_t g = 0; g < t.order(); ++g) {
        int x = static_cast<int>(g);
        Mask des = 0;
        for (int i = 0; i < l; ++i)
            if (t.length(t.rmul(x, i)) < t.length(x)) des |= Mask{1} << i;
        auto& v = tally[des];
        auto len = static_cast<std::size_t>(t.length(x));
        if (v.size() <= len) v.resize(len + 1, mpq_class(0));
        v[len] += 1;
    }
    MultiPoly out(l);
    for (std::size_t T = 0; T < tally.size(); ++T)
        if (!tally[T].empty())
            out = out + MultiPoly::subset_monomial(l, static_cast<unsigned>(T), RationalFunctionQ(PolyQ(tally[T])));
    return out;
}

}  // namespace reflecta
