#pragma once

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "reflecta/group.hpp"
#include "reflecta/matrix.hpp"
#include "reflecta/polynomial.hpp"

namespace reflecta {

class RepVerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using TablePtr = std::shared_ptr<const GroupTable>;

// Generator matrices acting on column vectors, together with a Gram matrix G
// of the invariant Hermitian form <x, y> = y^* G x, so g^* G g = G.
struct ReflectionRep {
    std::vector<CycloMatrix> generators;
    CycloMatrix gram;
    std::string description;

    std::size_t dim() const { return gram.rows(); }
};

// Representation in the basis of root vectors a_i with <a_j, a_i> = M(j, i)
// and r_i a_j = a_j - (1 - omega_i) M(j, i) / M(i, i) a_i.
ReflectionRep root_basis_rep(const std::vector<Cyclotomic>& omegas, const CycloMatrix& m, const std::string& description);

// Real Cartan construction with M(i, j) = -cos(pi / q_ij).
ReflectionRep coxeter_rep(const GroupPresentation& pres);
// Hermitian tridiagonal construction for linear Shephard diagrams.
ReflectionRep shephard_rep(const GroupPresentation& pres);
// Dispatches on the presentation; throws ParseError for unsupported input.
ReflectionRep catalog_rep(const GroupPresentation& pres);

// Dihedral group of order 2m generated by two reflections whose mirrors meet
// at angle k*pi/m (k coprime to m; k = 1 is the simple system).
ReflectionRep dihedral_rep(int m, int k);
// The order-6 dihedral group in orthonormal coordinates with mirrors
// C(sqrt3, -1) for r_1 and C(0, 1) for r_2.
ReflectionRep triangle_rep();
// S_{n+1} on the sum-zero hyperplane, basis e_j - e_{n+1}, generated by the
// star transpositions (j, n+1).
ReflectionRep star_rep(int n);

// Matrix closure size of a finite set of invertible matrices, stopping once
// the count exceeds cap.
std::size_t matrix_closure_order(const std::vector<CycloMatrix>& gens, std::size_t cap);

// A group table together with a verified faithful reflection representation.
class LinearGroup {
public:
    // Throws RepVerificationError when the rep does not realize the table.
    LinearGroup(TablePtr table, ReflectionRep rep);

    const GroupTable& table() const { return *table_; }
    const TablePtr& table_ptr() const { return table_; }
    const ReflectionRep& rep() const { return rep_; }
    std::size_t dim() const { return rep_.dim(); }
    const CycloMatrix& matrix(int g) const { return mats_[static_cast<std::size_t>(g)]; }

    Cyclotomic inner(const CycloVector& x, const CycloVector& y) const;  // y^* G x
    Subspace fixed_subspace(const std::vector<int>& elements) const;
    // Elements acting as reflections, in increasing index order.
    const std::vector<int>& reflections() const;
    // Closure of the reflecting hyperplanes under intersection, V first, then
    // by decreasing dimension.
    std::vector<Subspace> intersection_lattice() const;
    PolyC det_one_minus(int g) const;  // det(1 - q g)
    PolyC det_one_plus(int g) const;   // det(1 + t g)

private:
    TablePtr table_;
    ReflectionRep rep_;
    std::vector<CycloMatrix> mats_;
    mutable std::once_flag refl_once_;
    mutable std::vector<int> reflections_;
};

// Elementary symmetric functions of the eigenvalues: e_k(M) is the sum of the
// principal k x k minors.
std::vector<Cyclotomic> principal_minor_sums(const CycloMatrix& m);

}  // namespace reflecta
