#pragma once

#include <map>
#include <string>
#include <vector>

#include "reflecta/characters.hpp"
#include "reflecta/polynomial.hpp"
#include "reflecta/reflection_rep.hpp"

namespace reflecta {

// num/den over Q in lowest terms with monic denominator.
class RationalFunctionQ {
public:
    RationalFunctionQ() : den_(mpq_class(1)) {}
    RationalFunctionQ(const PolyQ& num) : num_(num), den_(mpq_class(1)) {}  // NOLINT(google-explicit-constructor)
    RationalFunctionQ(PolyQ num, PolyQ den);

    const PolyQ& numerator() const { return num_; }
    const PolyQ& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    // Throws std::domain_error unless the denominator is constant.
    PolyQ as_polynomial() const;

    RationalFunctionQ operator+(const RationalFunctionQ& o) const;
    RationalFunctionQ operator-(const RationalFunctionQ& o) const;
    RationalFunctionQ operator*(const RationalFunctionQ& o) const;
    RationalFunctionQ operator/(const RationalFunctionQ& o) const;
    RationalFunctionQ operator-() const { return RationalFunctionQ(-num_, den_); }
    bool operator==(const RationalFunctionQ& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunctionQ& o) const { return !(*this == o); }
    std::string to_string(const std::string& var = "q") const;

private:
    PolyQ num_, den_;
};

// Polynomial in t_1..t_n with rational-function coefficients in q.
class MultiPoly {
public:
    using Exponents = std::vector<int>;

    MultiPoly() = default;
    explicit MultiPoly(int vars) : vars_(vars) {}
    static MultiPoly constant(int vars, const RationalFunctionQ& c);
    static MultiPoly variable(int vars, int i);  // t_{i+1}
    // t^T for a subset T of the variables.
    static MultiPoly subset_monomial(int vars, unsigned mask, const RationalFunctionQ& c);

    int vars() const { return vars_; }
    const std::map<Exponents, RationalFunctionQ>& terms() const { return terms_; }
    RationalFunctionQ coeff(const Exponents& e) const;
    RationalFunctionQ subset_coeff(unsigned mask) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const RationalFunctionQ& c) const;
    bool operator==(const MultiPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }
    // Sets every t_i to the given value.
    RationalFunctionQ at_t(const mpq_class& t) const;
    // Sorted terms "c * q^a * t1^e1 ..." joined by " + ".
    std::string to_string() const;

private:
    void add_term(const Exponents& e, const RationalFunctionQ& c);
    int vars_ = 0;
    std::map<Exponents, RationalFunctionQ> terms_;
};

// (1/|H|) sum over H of 1/det(1 - q h).
RationalFunctionQ molien(const LinearGroup& lg, const Subgroup& h);
// Degrees read off the Molien series of the whole group, increasing.
std::vector<int> degrees(const LinearGroup& lg);
// Hilb(S)/Hilb(S^H); throws std::domain_error when not a polynomial.
PolyQ coinvariant_hilbert(const LinearGroup& lg, const Subgroup& h);
// <chi, S/S_+^W>(q) for chi on W or on a subgroup of W.
PolyQ graded_multiplicity(const ClassFunction& chi, const LinearGroup& lg);

// Variables t_1..t_l index the generators in diagram order.
MultiPoly ribbon_gf_direct(const LinearGroup& lg);
// Graded multiplicities of the ribbon characters computed from class sums.
MultiPoly ribbon_gf_characters(const LinearGroup& lg);
// W(q) times a determinant in the t_i; requires a linear diagram.
MultiPoly ribbon_gf_determinant(const LinearGroup& lg);
// Sum over g of t^Des(g) q^length(g); requires involutive generators.
MultiPoly eulerian_distribution(const GroupTable& t);

}  // namespace reflecta
