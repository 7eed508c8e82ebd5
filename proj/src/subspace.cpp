#include "reflecta/matrix.hpp"

namespace reflecta {

namespace {

CycloMatrix nonzero_rows(const CycloMatrix& m, std::size_t rank) {
    CycloMatrix b(rank, m.cols());
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) b(i, j) = m(i, j);
    return b;
}

}  // namespace

Subspace Subspace::span(std::size_t ambient, const std::vector<CycloVector>& vectors) {
    CycloMatrix m(vectors.size(), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient) throw std::invalid_argument("subspace: vector length mismatch");
        for (std::size_t j = 0; j < ambient; ++j) m(i, j) = vectors[i][j];
    }
    std::size_t r = m.rref_in_place().size();
    Subspace s(ambient);
    s.basis_ = nonzero_rows(m, r);
    return s;
}

Subspace Subspace::whole(std::size_t ambient) {
    Subspace s(ambient);
    s.basis_ = CycloMatrix::identity(ambient);
    return s;
}

Subspace Subspace::kernel(const CycloMatrix& m) { return span(m.cols(), m.nullspace()); }

std::vector<CycloVector> Subspace::vectors() const {
    std::vector<CycloVector> out;
    for (std::size_t i = 0; i < basis_.rows(); ++i) out.push_back(basis_.row(i));
    return out;
}

bool Subspace::contains(const CycloVector& v) const {
    std::vector<CycloVector> vs = vectors();
    vs.push_back(v);
    return span(n_, vs).dim() == dim();
}

bool Subspace::contains(const Subspace& o) const { return join(o).dim() == dim(); }

Subspace Subspace::join(const Subspace& o) const {
    std::vector<CycloVector> vs = vectors();
    for (auto& v : o.vectors()) vs.push_back(v);
    return span(n_, vs);
}

Subspace Subspace::intersect(const Subspace& o) const {
    // X ∩ Y = annihilator of (ann X + ann Y), using the bilinear pairing.
    auto annihilator = [this](const Subspace& s) {
        CycloMatrix m = s.basis_;
        if (m.rows() == 0) return Subspace::whole(n_);
        return Subspace::kernel(m);
    };
    Subspace a = annihilator(*this).join(annihilator(o));
    if (a.dim() == 0) return Subspace::whole(n_);
    return Subspace::kernel(a.basis_);
}

}  // namespace reflecta
