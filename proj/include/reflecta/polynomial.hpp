#pragma once

#include <gmpxx.h>

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "reflecta/matrix.hpp"

namespace reflecta {

inline std::string field_to_string(const mpq_class& x) { return x.get_str(); }
inline std::string field_to_string(const Cyclotomic& x) { return x.to_string(); }

// Dense univariate polynomial with coefficients in an exact field.
template <class K>
class Poly {
public:
    Poly() = default;
    Poly(const K& c) {  // NOLINT(google-explicit-constructor)
        if (!field_is_zero(c)) c_.push_back(c);
    }
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly monomial(const K& c, std::size_t deg) {
        std::vector<K> v(deg + 1, K(0));
        v[deg] = c;
        return Poly(std::move(v));
    }
    // 1 - q^k
    static Poly one_minus_power(std::size_t k) {
        std::vector<K> v(k + 1, K(0));
        v[0] = K(1);
        v[k] -= K(1);
        return Poly(std::move(v));
    }
    // 1 + q + ... + q^{k-1}
    static Poly q_integer(std::size_t k) { return Poly(std::vector<K>(k, K(1))); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<K>& coefficients() const { return c_; }
    K coeff(std::size_t k) const { return k < c_.size() ? c_[k] : K(0); }
    K leading() const { return c_.empty() ? K(0) : c_.back(); }

    Poly operator+(const Poly& o) const {
        std::vector<K> v(std::max(c_.size(), o.c_.size()), K(0));
        for (std::size_t k = 0; k < c_.size(); ++k) v[k] += c_[k];
        for (std::size_t k = 0; k < o.c_.size(); ++k) v[k] += o.c_[k];
        return Poly(std::move(v));
    }
    Poly operator-() const {
        Poly p = *this;
        for (auto& x : p.c_) x = -x;
        return p;
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<K> v(c_.size() + o.c_.size() - 1, K(0));
        for (std::size_t a = 0; a < c_.size(); ++a) {
            if (field_is_zero(c_[a])) continue;
            for (std::size_t b = 0; b < o.c_.size(); ++b)
                if (!field_is_zero(o.c_[b])) v[a + b] += c_[a] * o.c_[b];
        }
        return Poly(std::move(v));
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const K& s) const {
        Poly p = *this;
        for (auto& x : p.c_) x *= s;
        p.trim();
        return p;
    }
    Poly pow(unsigned k) const {
        Poly r(K(1));
        for (unsigned t = 0; t < k; ++t) r *= *this;
        return r;
    }
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Euclidean division; returns (quotient, remainder).
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<K> r = c_;
        std::size_t dd = d.c_.size() - 1;
        if (r.size() < d.c_.size()) return {Poly(), *this};
        std::vector<K> q(r.size() - dd, K(0));
        K inv = K(1) / d.c_.back();
        for (std::size_t k = r.size(); k-- > dd;) {
            if (field_is_zero(r[k])) continue;
            K f = r[k] * inv;
            q[k - dd] = f;
            for (std::size_t t = 0; t <= dd; ++t)
                if (!field_is_zero(d.c_[t])) r[k - dd + t] -= f * d.c_[t];
        }
        return {Poly(std::move(q)), Poly(std::move(r))};
    }
    // Exact quotient; throws if the division leaves a remainder.
    Poly divexact(const Poly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
        return q;
    }
    // Power series quotient this / d truncated to terms below `terms`; d(0) != 0.
    Poly series_div(const Poly& d, std::size_t terms) const {
        if (field_is_zero(d.coeff(0))) throw std::domain_error("series division needs a unit constant term");
        K inv = K(1) / d.coeff(0);
        std::vector<K> out(terms, K(0));
        for (std::size_t k = 0; k < terms; ++k) {
            K acc = coeff(k);
            for (std::size_t t = 1; t <= k && t < d.c_.size(); ++t)
                if (!field_is_zero(d.c_[t]) && !field_is_zero(out[k - t])) acc -= d.c_[t] * out[k - t];
            out[k] = acc * inv;
        }
        return Poly(std::move(out));
    }
    K eval(const K& x) const {
        K acc(0);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
        return acc;
    }

    std::string to_string(const std::string& var = "q") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (field_is_zero(c_[k])) continue;
            if (!first) os << " + ";
            std::string coef = field_to_string(c_[k]);
            bool compound = coef.find_first_of("+E") != std::string::npos ||
                            (coef.find('-', 1) != std::string::npos);
            if (k == 0) {
                os << (compound ? "(" + coef + ")" : coef);
            } else {
                if (coef != "1") os << (compound ? "(" + coef + ")" : coef) << "*";
                os << var;
                if (k > 1) os << "^" << k;
            }
            first = false;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && field_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<K> c_;
};

using PolyQ = Poly<mpq_class>;
using PolyC = Poly<Cyclotomic>;

// Monic gcd over Q.
PolyQ gcd(PolyQ a, PolyQ b);
// Converts a polynomial whose coefficients are all rational.
PolyQ to_rational(const PolyC& p);
PolyC to_cyclotomic(const PolyQ& p);

}  // namespace reflecta
