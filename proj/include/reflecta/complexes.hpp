#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "reflecta/group.hpp"
#include "reflecta/reflection_rep.hpp"

namespace reflecta {

class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Coset g W_{R\type}; coset indexes the parabolic coset list of that type.
struct Face {
    Mask type = 0;
    int coset = 0;

    int dim() const { return popcount(type) - 1; }
    bool operator==(const Face& o) const { return type == o.type && coset == o.coset; }
    bool operator!=(const Face& o) const { return !(*this == o); }
    bool operator<(const Face& o) const { return type != o.type ? type < o.type : coset < o.coset; }
};

// Subcomplex of the coset complex of a group with distinguished generators.
// Faces are listed by type mask and then coset id; that order also fixes the
// orientation of every simplex (vertices sorted by type).
class CosetComplex {
public:
    static CosetComplex full(TablePtr table);
    // Faces of `base` satisfying keep; the result must be closed under faces.
    static CosetComplex filtered(const CosetComplex& base, const std::function<bool(const Face&)>& keep);

    const GroupTable& table() const { return *shared_->table; }
    const TablePtr& table_ptr() const { return shared_->table; }
    int rank() const { return table().rank(); }
    // Partition of W into cosets of W_{R\J}.
    const CosetPartition& partition(Mask J) const { return shared_->parts[J]; }

    const std::vector<int>& cosets_of_type(Mask J) const { return present_[J]; }
    bool contains(const Face& f) const;
    std::size_t size() const;
    bool empty() const { return size() == 0; }
    int dim() const;
    std::vector<Face> faces() const;
    std::vector<Face> faces_of_dim(int d) const;
    std::vector<Face> facets() const;
    std::vector<Face> vertices() const;
    // Face counts for dimensions 0..dim (the empty face is not counted).
    std::vector<std::size_t> f_vector() const;

    int representative(const Face& f) const { return partition(f.type).cosets[static_cast<std::size_t>(f.coset)][0]; }
    const std::vector<int>& elements(const Face& f) const { return partition(f.type).cosets[static_cast<std::size_t>(f.coset)]; }
    // Face of type J of the facet g (not checked for membership).
    Face face_of(int g, Mask J) const { return {J, partition(J).coset_of[static_cast<std::size_t>(g)]}; }
    Face subface(const Face& f, Mask K) const { return face_of(representative(f), K); }
    bool leq(const Face& a, const Face& b) const;
    Face act(int h, const Face& f) const;
    std::vector<Face> face_vertices(const Face& f) const;

    bool is_pure() const;
    // Distinct faces have distinct vertex sets.
    bool vertex_determined() const;
    bool operator==(const CosetComplex& o) const { return shared_ == o.shared_ && present_ == o.present_; }

private:
    struct Shared {
        TablePtr table;
        std::vector<CosetPartition> parts;  // indexed by J, cosets of W_{R\J}
    };
    std::shared_ptr<const Shared> shared_;
    std::vector<std::vector<int>> present_;  // per type, sorted coset ids
    std::vector<std::vector<char>> has_;
};

CosetComplex build_complex(TablePtr table);
CosetComplex type_select(const CosetComplex& cx, Mask T);
// Faces of cx lying in a common facet of the full complex with the type-U
// face of the identity coset.
CosetComplex star(const CosetComplex& cx, Mask U);
// Pointed complex built as the type-T part of the star at U and, separately,
// as the cosets g W_{R\J} with g in W_{R\U}, J in T; throws
// InvariantViolation when the two disagree.
CosetComplex pointed(const CosetComplex& full, Mask U, Mask T);
// Faces disjoint from f whose join with f lies in cx.
CosetComplex link(const CosetComplex& cx, const Face& f);

// Abstract simplicial complex on vertices 0..n-1, faces as sorted vertex
// lists grouped by dimension (dimension -1 holds the empty face).
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    static SimplicialComplex from_facets(int vertex_count, std::vector<std::vector<int>> facets);

    int vertex_count() const { return n_; }
    int dim() const { return static_cast<int>(faces_.size()) - 2; }
    // faces of dimension d (d >= -1)
    const std::vector<std::vector<int>>& faces(int d) const { return faces_[static_cast<std::size_t>(d + 1)]; }
    std::vector<std::size_t> f_vector() const;
    int index_of(const std::vector<int>& face) const;

private:
    int n_ = 0;
    std::vector<std::vector<std::vector<int>>> faces_;
};

// Vertex-set model of a coset complex (vertices numbered in face order).
SimplicialComplex to_simplicial(const CosetComplex& cx);

struct Shelling {
    std::vector<Face> order;
    std::vector<Mask> restriction;  // per step: types of the minimal new face
};

inline constexpr std::size_t kDefaultShellingBudget = 10000000;

// Breadth-first facet order with depth-first backtracking. Throws
// BudgetExceeded when the step budget runs out.
Shelling find_shelling(const CosetComplex& cx, std::size_t budget = kDefaultShellingBudget);
// Independent check of the shelling condition for every step.
bool verify_shelling(const CosetComplex& cx, const std::vector<Face>& order);

}  // namespace reflecta
