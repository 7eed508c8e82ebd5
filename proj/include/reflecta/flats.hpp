#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "reflecta/complexes.hpp"
#include "reflecta/homology.hpp"

namespace reflecta {

// Finite poset on 0..n-1 given by its order relation.
struct Poset {
    std::vector<std::vector<char>> le;  // le[a][b]: a <= b

    std::size_t size() const { return le.size(); }
    bool leq(int a, int b) const { return le[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0; }
    bool is_partial_order() const;
    // Induced subposet on the given elements, in that order.
    Poset induced(const std::vector<int>& elements) const;
    std::vector<std::pair<int, int>> hasse_edges() const;
};

// Chains as simplices, vertices numbered as poset elements.
SimplicialComplex order_complex(const Poset& p);
// Mobius function mu(bottom, top).
long mobius(const Poset& p, int bottom, int top);

// Support of a face: the conjugated parabolic g W_{R\J} g^{-1}.
Subgroup support(const CosetComplex& cx, const Face& f);

// Distinct supports of all faces of the full complex, sorted by stabilizer
// order and then by members. Flats are compared as subgroups.
class FlatIndex {
public:
    explicit FlatIndex(const CosetComplex& full);

    std::size_t size() const { return flats_.size(); }
    const Subgroup& flat(int x) const { return flats_[static_cast<std::size_t>(x)]; }
    int flat_of(const Face& f) const;
    // Stab(a) within Stab(b), i.e. a contains b as a subspace.
    bool leq(int a, int b) const { return le_.leq(a, b); }
    int top() const { return top_; }  // the flat with stabilizer W
    const CosetComplex& complex() const { return full_; }
    int conjugate(int g, int x) const;  // g X g^{-1}

private:
    CosetComplex full_;
    std::vector<Subgroup> flats_;
    std::vector<std::vector<int>> face_flat_;  // per type, per coset id
    Poset le_;
    int top_ = -1;
    std::vector<std::vector<int>> conj_;  // per generator: image of each flat
};

// Supports of the faces of a subcomplex, with the induced order.
struct FlatsPoset {
    std::vector<int> flats;  // flat ids, increasing
    Poset order;
    int top = -1;            // position of the flat with stabilizer W, or -1

    // Poset without the top element, with the surviving flat ids.
    std::pair<Poset, std::vector<int>> without_top() const;
};

FlatsPoset flats_poset(const FlatIndex& ix, const CosetComplex& sub);

// Faces of cx whose support lies inside flat x (Stab(x) within their stabilizer).
CosetComplex quillen_fiber(const FlatIndex& ix, const CosetComplex& cx, int x);
// Lowest vertex lying in every facet, if any.
std::optional<Face> cone_point(const CosetComplex& cx);

struct ConicalWitness {
    Mask U = 0;
    Mask T = 0;
    int flat = -1;
    std::size_t stabilizer_order = 0;
    std::vector<std::size_t> fiber_f_vector;
};

struct ConicalReport {
    bool pass = true;
    std::size_t fibers_checked = 0;
    std::vector<ConicalWitness> witnesses;
};

// Sweeps nonempty U and X in the supports of the star at U (without the top
// flat). With abstract set, also sweeps T and uses fibers of the pointed
// complexes.
ConicalReport locally_conical_check(const FlatIndex& ix, bool abstract = false);

// Stab(Fix(H)) == H for every flat and order agreement with subspace inclusion.
struct GaloisReport {
    bool pass = true;
    std::string witness;
};
GaloisReport galois_check(const LinearGroup& lg, const FlatIndex& ix);
// Subgroup fixing the subspace pointwise.
Subgroup pointwise_stabilizer(const LinearGroup& lg, const Subspace& x);

}  // namespace reflecta
