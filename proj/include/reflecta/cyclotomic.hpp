#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace reflecta {

// Element of a cyclotomic field Q(zeta_n), stored in the power basis
// 1, z, ..., z^(phi(n)-1) modulo the n-th cyclotomic polynomial.
// Values are always kept at their minimal conductor, which is never
// congruent to 2 mod 4, so equal numbers have identical encodings.
class Cyclotomic {
public:
    Cyclotomic();
    Cyclotomic(long v);  // NOLINT(google-explicit-constructor)
    Cyclotomic(const mpq_class& v);  // NOLINT(google-explicit-constructor)

    // zeta_n^k = exp(2 pi i k / n)
    static Cyclotomic root_of_unity(long n, long k);
    // 2 cos(2 pi k / n)
    static Cyclotomic two_cos(long n, long k);
    static Cyclotomic i();

    int conductor() const { return n_; }
    const std::vector<mpq_class>& coefficients() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return n_ == 1; }
    bool is_integer() const;
    // Throws std::domain_error unless the value is rational.
    mpq_class rational() const;

    Cyclotomic conj() const;
    Cyclotomic inverse() const;
    // Image under zeta_n -> zeta_n^k for k coprime to the conductor.
    Cyclotomic galois(long k) const;
    Cyclotomic real_part() const;
    Cyclotomic imag_part() const;

    std::complex<double> to_complex() const;
    std::string to_string() const;
    std::size_t hash() const;

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o);
    Cyclotomic operator-() const;

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Raw constructor from coefficients over an arbitrary conductor; reduces.
    static Cyclotomic from_coefficients(int n, std::vector<mpq_class> c);

private:
    void normalize();

    int n_ = 1;
    std::vector<mpq_class> c_;
};

struct CyclotomicHash {
    std::size_t operator()(const Cyclotomic& x) const { return x.hash(); }
};

// Euler phi and integer coefficients of the n-th cyclotomic polynomial.
long euler_phi(long n);
const std::vector<long>& cyclotomic_polynomial(long n);

}  // namespace reflecta
