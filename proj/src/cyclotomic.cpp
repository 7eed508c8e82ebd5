#include "reflecta/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace reflecta {

namespace {

int canonical_conductor(long n) {
    return static_cast<int>(n % 4 == 2 ? n / 2 : n);
}

std::vector<long> prime_divisors(long n) {
    std::vector<long> ps;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Arithmetic tables for one canonical conductor.
struct FieldData {
    int n = 1;
    int phi = 1;
    // xpow[k] = z^k reduced mod Phi_n, for 0 <= k < n.
    std::vector<std::vector<long>> xpow;
};

// Data to recognise elements of Q(zeta_m) inside Q(zeta_n).
struct SubfieldData {
    std::vector<std::vector<long>> embed;  // embed[j] = image of zeta_m^j, length phi(n)
    std::vector<int> pivot_rows;
    std::vector<std::vector<mpq_class>> inv;  // phi(m) x phi(m)
};

std::mutex g_cache_mutex;
std::map<long, std::vector<long>> g_cyclo_polys;
std::map<int, std::unique_ptr<FieldData>> g_fields;
std::map<std::pair<int, int>, std::unique_ptr<SubfieldData>> g_subfields;

const std::vector<long>& cyclo_poly_locked(long n) {
    auto it = g_cyclo_polys.find(n);
    if (it != g_cyclo_polys.end()) return it->second;
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<long> num(static_cast<std::size_t>(n) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(n)] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const std::vector<long> den = cyclo_poly_locked(d);
        // exact division by a monic polynomial
        std::size_t dn = num.size() - 1, dd = den.size() - 1;
        std::vector<long> q(dn - dd + 1, 0);
        for (std::size_t k = dn + 1; k-- > dd;) {
            long coef = num[k];
            q[k - dd] = coef;
            if (coef == 0) continue;
            for (std::size_t t = 0; t <= dd; ++t) num[k - dd + t] -= coef * den[t];
        }
        num = std::move(q);
    }
    return g_cyclo_polys.emplace(n, std::move(num)).first->second;
}

const FieldData& field_data(int n) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_fields.find(n);
    if (it != g_fields.end()) return *it->second;
    auto fd = std::make_unique<FieldData>();
    fd->n = n;
    const std::vector<long>& phi_poly = cyclo_poly_locked(n);
    fd->phi = static_cast<int>(phi_poly.size()) - 1;
    std::size_t phi = static_cast<std::size_t>(fd->phi);
    std::vector<long> cur(phi, 0);
    cur[0] = 1;
    fd->xpow.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        fd->xpow.push_back(cur);
        // multiply by x and reduce the x^phi term
        long top = cur[phi - 1];
        for (std::size_t t = phi - 1; t > 0; --t) cur[t] = cur[t - 1];
        cur[0] = 0;
        if (top != 0)
            for (std::size_t t = 0; t < phi; ++t) cur[t] -= top * phi_poly[t];
    }
    return *g_fields.emplace(n, std::move(fd)).first->second;
}

const SubfieldData& subfield_data(int n, int m) {
    const FieldData& big = field_data(n);
    const FieldData& small = field_data(m);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto key = std::make_pair(n, m);
    auto it = g_subfields.find(key);
    if (it != g_subfields.end()) return *it->second;
    auto sd = std::make_unique<SubfieldData>();
    std::size_t pn = static_cast<std::size_t>(big.phi), pm = static_cast<std::size_t>(small.phi);
    long step = n / m;
    for (std::size_t j = 0; j < pm; ++j)
        sd->embed.push_back(big.xpow[static_cast<std::size_t>((static_cast<long>(j) * step) % n)]);
    // Pick independent rows of the pn x pm embedding matrix.
    std::vector<std::vector<mpq_class>> rows;  // reduced copies of chosen rows
    std::vector<int> pivcol;
    for (std::size_t r = 0; r < pn && sd->pivot_rows.size() < pm; ++r) {
        std::vector<mpq_class> v(pm);
        for (std::size_t j = 0; j < pm; ++j) v[j] = sd->embed[j][r];
        for (std::size_t t = 0; t < rows.size(); ++t) {
            const mpq_class f = v[static_cast<std::size_t>(pivcol[t])];
            if (f != 0)
                for (std::size_t j = 0; j < pm; ++j) v[j] -= f * rows[t][j];
        }
        std::size_t p = 0;
        while (p < pm && v[p] == 0) ++p;
        if (p == pm) continue;
        mpq_class lead = v[p];
        for (auto& e : v) e /= lead;
        for (auto& row : rows) {
            const mpq_class f = row[p];
            if (f != 0)
                for (std::size_t j = 0; j < pm; ++j) row[j] -= f * v[j];
        }
        rows.push_back(std::move(v));
        pivcol.push_back(static_cast<int>(p));
        sd->pivot_rows.push_back(static_cast<int>(r));
    }
    if (sd->pivot_rows.size() != pm) throw std::logic_error("cyclotomic: degenerate subfield embedding");
    // Invert the square submatrix A[a][j] = embed[j][pivot_rows[a]] by Gauss-Jordan.
    std::vector<std::vector<mpq_class>> a(pm, std::vector<mpq_class>(2 * pm));
    for (std::size_t r = 0; r < pm; ++r) {
        for (std::size_t j = 0; j < pm; ++j)
            a[r][j] = sd->embed[j][static_cast<std::size_t>(sd->pivot_rows[r])];
        a[r][pm + r] = 1;
    }
    for (std::size_t col = 0; col < pm; ++col) {
        std::size_t piv = col;
        while (a[piv][col] == 0) ++piv;
        std::swap(a[piv], a[col]);
        mpq_class lead = a[col][col];
        for (auto& e : a[col]) e /= lead;
        for (std::size_t r = 0; r < pm; ++r) {
            if (r == col || a[r][col] == 0) continue;
            mpq_class f = a[r][col];
            for (std::size_t j = 0; j < 2 * pm; ++j) a[r][j] -= f * a[col][j];
        }
    }
    sd->inv.assign(pm, std::vector<mpq_class>(pm));
    for (std::size_t r = 0; r < pm; ++r)
        for (std::size_t j = 0; j < pm; ++j) sd->inv[r][j] = a[r][pm + j];
    return *g_subfields.emplace(key, std::move(sd)).first->second;
}

// Coefficients of x (conductor m) re-expressed over conductor n, m | n.
std::vector<mpq_class> promote(const std::vector<mpq_class>& c, int m, int n) {
    if (m == n) return c;
    const FieldData& big = field_data(n);
    std::vector<mpq_class> out(static_cast<std::size_t>(big.phi));
    long step = n / m;
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        const auto& img = big.xpow[static_cast<std::size_t>((static_cast<long>(j) * step) % n)];
        for (std::size_t t = 0; t < out.size(); ++t)
            if (img[t] != 0) out[t] += c[j] * img[t];
    }
    return out;
}

// Tries to write c (over n) as an element of Q(zeta_m).
bool restrict_to(const std::vector<mpq_class>& c, int n, int m, std::vector<mpq_class>& out) {
    const SubfieldData& sd = subfield_data(n, m);
    std::size_t pm = sd.inv.size();
    std::vector<mpq_class> y(pm);
    for (std::size_t r = 0; r < pm; ++r)
        for (std::size_t a = 0; a < pm; ++a) {
            const mpq_class& v = c[static_cast<std::size_t>(sd.pivot_rows[a])];
            if (v != 0 && sd.inv[r][a] != 0) y[r] += sd.inv[r][a] * v;
        }
    std::vector<mpq_class> back(c.size());
    for (std::size_t j = 0; j < pm; ++j) {
        if (y[j] == 0) continue;
        for (std::size_t t = 0; t < c.size(); ++t)
            if (sd.embed[j][t] != 0) back[t] += y[j] * sd.embed[j][t];
    }
    if (back != c) return false;
    out = std::move(y);
    return true;
}

std::size_t hash_mpz(const mpz_class& z) {
    std::size_t h = static_cast<std::size_t>(mpz_size(z.get_mpz_t()));
    if (mpz_size(z.get_mpz_t()) > 0) h = h * 1000003u ^ static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0));
    return h * 31u + static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1);
}

}  // namespace

long euler_phi(long n) {
    long r = n;
    for (long p : prime_divisors(n)) r = r / p * (p - 1);
    return r;
}

const std::vector<long>& cyclotomic_polynomial(long n) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return cyclo_poly_locked(n);
}

Cyclotomic::Cyclotomic() : n_(1), c_(1, mpq_class(0)) {}
Cyclotomic::Cyclotomic(long v) : n_(1), c_(1, mpq_class(v)) {}
Cyclotomic::Cyclotomic(const mpq_class& v) : n_(1), c_(1, v) { c_[0].canonicalize(); }

Cyclotomic Cyclotomic::from_coefficients(int n, std::vector<mpq_class> c) {
    if (n <= 0) throw std::invalid_argument("cyclotomic: conductor must be positive");
    for (auto& e : c) e.canonicalize();
    int cn = canonical_conductor(n);
    if (cn != n) {
        // reinterpret over the full 2m-th roots: z_{2m}^j = (-1)^j z_m^{j(m+1)/2}
        Cyclotomic acc;
        for (std::size_t j = 0; j < c.size(); ++j)
            if (c[j] != 0) acc += Cyclotomic(c[j]) * root_of_unity(n, static_cast<long>(j));
        return acc;
    }
    const FieldData& fd = field_data(cn);
    Cyclotomic x;
    x.n_ = cn;
    x.c_.assign(static_cast<std::size_t>(fd.phi), mpq_class(0));
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        const auto& img = fd.xpow[j % static_cast<std::size_t>(cn)];
        for (std::size_t t = 0; t < x.c_.size(); ++t)
            if (img[t] != 0) x.c_[t] += c[j] * img[t];
    }
    x.normalize();
    return x;
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
    if (n <= 0) throw std::invalid_argument("cyclotomic: root of unity order must be positive");
    k %= n;
    if (k < 0) k += n;
    long g = std::gcd(k, n);
    if (k == 0) return Cyclotomic(1);
    n /= g;
    k /= g;
    bool negate = false;
    if (n % 4 == 2) {
        long m = n / 2;
        negate = (k % 2) != 0;
        k = (k * ((m + 1) / 2)) % m;
        n = m;
    }
    Cyclotomic x;
    if (n == 1) {
        x = Cyclotomic(1);
    } else {
        const FieldData& fd = field_data(static_cast<int>(n));
        x.n_ = static_cast<int>(n);
        const auto& img = fd.xpow[static_cast<std::size_t>(k)];
        x.c_.assign(img.size(), mpq_class(0));
        for (std::size_t t = 0; t < img.size(); ++t) x.c_[t] = img[t];
        x.normalize();
    }
    return negate ? -x : x;
}

Cyclotomic Cyclotomic::two_cos(long n, long k) {
    return root_of_unity(n, k) + root_of_unity(n, -k);
}

Cyclotomic Cyclotomic::i() { return root_of_unity(4, 1); }

bool Cyclotomic::is_zero() const { return n_ == 1 && c_[0] == 0; }
bool Cyclotomic::is_one() const { return n_ == 1 && c_[0] == 1; }
bool Cyclotomic::is_integer() const { return n_ == 1 && c_[0].get_den() == 1; }

mpq_class Cyclotomic::rational() const {
    if (n_ != 1) throw std::domain_error("cyclotomic: value " + to_string() + " is not rational");
    return c_[0];
}

void Cyclotomic::normalize() {
    if (n_ == 1) return;
    bool rat = true;
    for (std::size_t t = 1; t < c_.size(); ++t)
        if (c_[t] != 0) {
            rat = false;
            break;
        }
    if (rat) {
        c_.resize(1);
        n_ = 1;
        return;
    }
    bool changed = true;
    while (changed && n_ > 1) {
        changed = false;
        for (long p : prime_divisors(n_)) {
            long m = n_ / p;
            if (m % 4 == 2) m /= 2;
            if (m == 1) continue;  // rational case handled above
            std::vector<mpq_class> out;
            if (restrict_to(c_, n_, static_cast<int>(m), out)) {
                c_ = std::move(out);
                n_ = static_cast<int>(m);
                changed = true;
                break;
            }
        }
    }
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (n_ == o.n_) {
        for (std::size_t t = 0; t < c_.size(); ++t) c_[t] += o.c_[t];
    } else {
        int l = std::lcm(n_, o.n_);
        std::vector<mpq_class> a = promote(c_, n_, l);
        std::vector<mpq_class> b = promote(o.c_, o.n_, l);
        for (std::size_t t = 0; t < a.size(); ++t) a[t] += b[t];
        c_ = std::move(a);
        n_ = l;
    }
    normalize();
    return *this;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic x = *this;
    for (auto& e : x.c_) e = -e;
    return x;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    if (o.n_ == 1) {
        if (o.c_[0] == 0) return *this = Cyclotomic();
        for (auto& e : c_) e *= o.c_[0];
        return *this;
    }
    if (n_ == 1) {
        mpq_class s = c_[0];
        *this = o;
        if (s == 0) return *this = Cyclotomic();
        for (auto& e : c_) e *= s;
        return *this;
    }
    int l = std::lcm(n_, o.n_);
    std::vector<mpq_class> a = promote(c_, n_, l);
    std::vector<mpq_class> b = promote(o.c_, o.n_, l);
    const FieldData& fd = field_data(l);
    std::size_t phi = static_cast<std::size_t>(fd.phi);
    std::vector<mpq_class> conv(2 * phi - 1);
    for (std::size_t s = 0; s < phi; ++s) {
        if (a[s] == 0) continue;
        for (std::size_t t = 0; t < phi; ++t)
            if (b[t] != 0) conv[s + t] += a[s] * b[t];
    }
    std::vector<mpq_class> out(conv.begin(), conv.begin() + static_cast<long>(phi));
    for (std::size_t k = phi; k < conv.size(); ++k) {
        if (conv[k] == 0) continue;
        const auto& img = fd.xpow[k % static_cast<std::size_t>(l)];
        for (std::size_t t = 0; t < phi; ++t)
            if (img[t] != 0) out[t] += conv[k] * img[t];
    }
    c_ = std::move(out);
    n_ = l;
    normalize();
    return *this;
}

Cyclotomic Cyclotomic::galois(long k) const {
    if (n_ == 1) return *this;
    k %= n_;
    if (k < 0) k += n_;
    if (std::gcd(k, static_cast<long>(n_)) != 1) throw std::invalid_argument("cyclotomic: galois exponent not a unit");
    std::vector<mpq_class> img(static_cast<std::size_t>(n_));
    for (std::size_t j = 0; j < c_.size(); ++j) img[(j * static_cast<std::size_t>(k)) % static_cast<std::size_t>(n_)] += c_[j];
    return from_coefficients(n_, std::move(img));
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("cyclotomic: division by zero");
    if (n_ == 1) return Cyclotomic(mpq_class(1) / c_[0]);
    // x^{-1} = prod_{k != 1} sigma_k(x) / N(x)
    Cyclotomic prod(1);
    for (long k = 2; k < n_; ++k)
        if (std::gcd(k, static_cast<long>(n_)) == 1) prod *= galois(k);
    Cyclotomic norm = prod * *this;
    return prod * Cyclotomic(mpq_class(1) / norm.rational());
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

Cyclotomic Cyclotomic::real_part() const {
    if (n_ == 1) return *this;
    return (*this + conj()) * Cyclotomic(mpq_class(1, 2));
}

Cyclotomic Cyclotomic::imag_part() const {
    if (n_ == 1) return Cyclotomic();
    return (*this - conj()) * i() * Cyclotomic(mpq_class(-1, 2));
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> z = 0;
    const double two_pi = 2.0 * std::acos(-1.0);
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        double ang = two_pi * static_cast<double>(j) / n_;
        z += c_[j].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return z;
}

std::string Cyclotomic::to_string() const {
    if (n_ == 1) return c_[0].get_str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        if (!first) os << (c_[j] < 0 ? " - " : " + ");
        else if (c_[j] < 0) os << "-";
        mpq_class a = abs(c_[j]);
        if (j == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "E(" << n_ << ")";
            if (j > 1) os << "^" << j;
        }
        first = false;
    }
    return os.str();
}

std::size_t Cyclotomic::hash() const {
    std::size_t h = static_cast<std::size_t>(n_);
    for (const auto& e : c_) {
        h = h * 1315423911u ^ hash_mpz(e.get_num());
        h = h * 2654435761u ^ hash_mpz(e.get_den());
    }
    return h;
}

}  // namespace reflecta
