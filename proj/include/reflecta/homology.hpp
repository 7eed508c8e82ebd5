#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

#include "reflecta/complexes.hpp"
#include "reflecta/matrix.hpp"

namespace reflecta {

// Column-sparse integer matrix: column j lists (row, coefficient).
struct SparseIntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<std::pair<int, long>>> columns;
};

// Augmented chain complex. Degrees run from -1 (the empty face) to top;
// boundary[d + 1] maps C_d to C_{d-1} and boundary[0] is empty.
struct ChainComplex {
    std::vector<std::size_t> ranks;  // ranks[d + 1] = rank of C_d
    std::vector<SparseIntMatrix> boundary;

    int top() const { return static_cast<int>(ranks.size()) - 2; }
    std::size_t rank(int d) const { return ranks[static_cast<std::size_t>(d + 1)]; }
};

ChainComplex chain_complex(const CosetComplex& cx);
ChainComplex chain_complex(const SimplicialComplex& sc);
bool boundary_squares_to_zero(const ChainComplex& cc);

// Nonzero invariant factors d_1 | d_2 | ... of an integer matrix.
std::vector<mpz_class> smith_normal_form(const std::vector<std::vector<mpz_class>>& dense);
std::vector<mpz_class> smith_normal_form(const SparseIntMatrix& m);

struct HomologyGroup {
    std::size_t betti = 0;
    std::vector<mpz_class> torsion;  // invariant factors > 1
    bool is_zero() const { return betti == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup& o) const { return betti == o.betti && torsion == o.torsion; }
};

// Reduced homology, indexed by degree + 1 (degree -1 first).
std::vector<HomologyGroup> reduced_homology(const ChainComplex& cc);
template <class C>
std::vector<HomologyGroup> reduced_homology_of(const C& complex) {
    return reduced_homology(chain_complex(complex));
}
// Betti numbers for degrees 0..top with trailing zero degrees kept.
std::vector<std::size_t> betti_numbers(const std::vector<HomologyGroup>& h);
// True when every reduced group below the top degree vanishes.
bool top_concentrated(const std::vector<HomologyGroup>& h);

// Image index and sign for every top-dimensional simplex.
using SignedPermutation = std::vector<std::pair<int, int>>;

SignedPermutation coset_action(const CosetComplex& cx, int g);
// vertex_image maps vertex ids; simplices are re-sorted with the sign of the sort.
SignedPermutation simplicial_action(const SimplicialComplex& sc, const std::vector<int>& vertex_image);

// Top cycles ker d_top over Q with the basis normalised on free columns, so
// the coordinates of a cycle are its entries on those columns.
class TopCycleSpace {
public:
    explicit TopCycleSpace(const ChainComplex& cc);
    std::size_t dim() const { return basis_.size(); }
    const std::vector<std::vector<mpq_class>>& basis() const { return basis_; }
    QMatrix action(const SignedPermutation& p) const;
    mpq_class trace(const SignedPermutation& p) const;

private:
    std::vector<std::vector<mpq_class>> basis_;
    std::vector<std::size_t> free_;
};

struct TopAction {
    std::vector<QMatrix> generators;
    std::size_t dim = 0;
};

}  // namespace reflecta
