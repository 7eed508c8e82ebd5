#include "reflecta/reflection_rep.hpp"

#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace reflecta {

namespace {

CycloMatrix matrix_power(const CycloMatrix& m, int k) {
    CycloMatrix r = CycloMatrix::identity(m.rows());
    for (int t = 0; t < k; ++t) r = r * m;
    return r;
}

bool is_positive_real(const Cyclotomic& x) {
    if (x.is_zero() || x != x.conj()) return false;
    return x.to_complex().real() > 0;
}

// Leading principal minors are all positive.
bool positive_definite(const CycloMatrix& g) {
    for (std::size_t k = 1; k <= g.rows(); ++k) {
        CycloMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub(i, j) = g(i, j);
        if (!is_positive_real(sub.det())) return false;
    }
    return true;
}

CycloMatrix tridiagonal_gram(const std::vector<Cyclotomic>& kappas) {
    std::size_t n = kappas.size() + 1;
    CycloMatrix m(n, n);
    Cyclotomic h(1);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = h;
        if (i + 1 < n) {
            m(i, i + 1) = -h;
            m(i + 1, i) = -h;
            h = h / kappas[i];
        }
    }
    return m;
}

bool braid_holds(const CycloMatrix& a, const CycloMatrix& b, int q) {
    CycloMatrix x = CycloMatrix::identity(a.rows()), y = x;
    for (int k = 0; k < q; ++k) {
        x = x * (k % 2 == 0 ? a : b);
        y = y * (k % 2 == 0 ? b : a);
    }
    return x == y;
}

// Admissible values of |<a_1,a_2>|^2 / (|a_1|^2 |a_2|^2) for a rank-two link
// p1[q]p2, in a fixed order.
std::vector<Cyclotomic> link_candidates(int p1, int q, int p2) {
    GroupTable sub = GroupTable::enumerate(linear_presentation({p1, p2}, {q}, ""));
    long n = sub.exponent();
    Cyclotomic w1 = Cyclotomic::root_of_unity(p1, 1), w2 = Cyclotomic::root_of_unity(p2, 1);
    Cyclotomic prod = w1 * w2;
    Cyclotomic denom = (Cyclotomic(1) - w1) * (Cyclotomic(1) - w2);
    std::vector<Cyclotomic> out;
    std::unordered_set<Cyclotomic, CyclotomicHash> seen;
    for (long j = 0; j < n; ++j) {
        Cyclotomic a = Cyclotomic::root_of_unity(n, j);
        Cyclotomic b = prod / a;
        Cyclotomic kappa = (a + b - w1 - w2) / denom;
        if (!seen.insert(kappa).second) continue;
        if (!is_positive_real(kappa) || kappa.to_complex().real() >= 1) continue;
        ReflectionRep rep = root_basis_rep({w1, w2}, tridiagonal_gram({kappa}), "");
        if (!braid_holds(rep.generators[0], rep.generators[1], q)) continue;
        if (matrix_closure_order(rep.generators, sub.order()) != sub.order()) continue;
        out.push_back(kappa);
    }
    return out;
}

}  // namespace

ReflectionRep root_basis_rep(const std::vector<Cyclotomic>& omegas, const CycloMatrix& m,
                             const std::string& description) {
    std::size_t n = m.rows();
    ReflectionRep rep;
    rep.description = description;
    for (std::size_t i = 0; i < n; ++i) {
        CycloMatrix r = CycloMatrix::identity(n);
        Cyclotomic f = (Cyclotomic(1) - omegas[i]) / m(i, i);
        for (std::size_t j = 0; j < n; ++j) r(i, j) -= f * m(j, i);
        rep.generators.push_back(std::move(r));
    }
    rep.gram = m.transpose();
    return rep;
}

ReflectionRep coxeter_rep(const GroupPresentation& pres) {
    if (!pres.is_real()) throw ParseError("not a Coxeter presentation: " + pres.label);
    std::size_t n = static_cast<std::size_t>(pres.rank);
    CycloMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = i == j ? Cyclotomic(1)
                             : Cyclotomic::two_cos(2L * pres.braid[i][j], 1) * Cyclotomic(mpq_class(-1, 2));
    return root_basis_rep(std::vector<Cyclotomic>(n, Cyclotomic(-1)), m, "Cartan " + pres.label);
}

ReflectionRep shephard_rep(const GroupPresentation& pres) {
    if (!pres.is_linear()) throw ParseError("not a linear diagram: " + pres.label);
    std::size_t links = static_cast<std::size_t>(pres.rank - 1);
    std::vector<Cyclotomic> omegas;
    for (int p : pres.orders) omegas.push_back(Cyclotomic::root_of_unity(p, 1));
    if (links == 0) {
        CycloMatrix m = CycloMatrix::identity(1);
        return root_basis_rep(omegas, m, "cyclic " + pres.label);
    }
    std::vector<std::vector<Cyclotomic>> cands;
    for (std::size_t i = 0; i < links; ++i) {
        cands.push_back(link_candidates(pres.orders[i], pres.braid[i][i + 1], pres.orders[i + 1]));
        if (cands.back().empty()) throw RepVerificationError("no unitary realization for a link of " + pres.label);
    }
    // first combination (odometer order) with a positive definite form
    std::vector<std::size_t> idx(links, 0);
    while (true) {
        std::vector<Cyclotomic> kappas;
        for (std::size_t i = 0; i < links; ++i) kappas.push_back(cands[i][idx[i]]);
        CycloMatrix m = tridiagonal_gram(kappas);
        if (positive_definite(m)) return root_basis_rep(omegas, m, "Hermitian tridiagonal " + pres.label);
        std::size_t k = 0;
        while (k < links && ++idx[k] == cands[k].size()) idx[k++] = 0;
        if (k == links) break;
    }
    throw RepVerificationError("no positive definite realization for " + pres.label);
}

ReflectionRep catalog_rep(const GroupPresentation& pres) {
    pres.validate();
    if (pres.is_real()) return coxeter_rep(pres);
    if (pres.is_linear()) return shephard_rep(pres);
    throw ParseError("no catalog representation for " + pres.label);
}

ReflectionRep dihedral_rep(int m, int k) {
    if (m < 2 || k < 1 || std::gcd(m, k) != 1) throw std::invalid_argument("dihedral_rep: need gcd(m, k) = 1");
    CycloMatrix g(2, 2);
    g(0, 0) = 1;
    g(1, 1) = 1;
    g(0, 1) = g(1, 0) = Cyclotomic::two_cos(2L * m, k) * Cyclotomic(mpq_class(-1, 2));
    return root_basis_rep({Cyclotomic(-1), Cyclotomic(-1)}, g,
                          "dihedral order " + std::to_string(2 * m) + " mirror angle " + std::to_string(k) + "pi/" +
                              std::to_string(m));
}

ReflectionRep triangle_rep() {
    Cyclotomic s3 = Cyclotomic::two_cos(12, 1);  // sqrt 3
    Cyclotomic half(mpq_class(1, 2));
    ReflectionRep rep;
    CycloMatrix r1(2, 2), r2(2, 2);
    r1(0, 0) = half;
    r1(0, 1) = -s3 * half;
    r1(1, 0) = -s3 * half;
    r1(1, 1) = -half;
    r2(0, 0) = -1;
    r2(1, 1) = 1;
    rep.generators = {r1, r2};
    rep.gram = CycloMatrix::identity(2);
    rep.description = "orthonormal dihedral order 6";
    return rep;
}

ReflectionRep star_rep(int n) {
    if (n < 1) throw std::invalid_argument("star_rep: n must be positive");
    std::size_t d = static_cast<std::size_t>(n);
    ReflectionRep rep;
    for (std::size_t i = 0; i < d; ++i) {
        // (i, n+1): b_i -> -b_i, b_j -> b_j - b_i
        CycloMatrix r = CycloMatrix::identity(d);
        for (std::size_t j = 0; j < d; ++j) r(i, j) = -1;
        rep.generators.push_back(std::move(r));
    }
    rep.gram = CycloMatrix(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) rep.gram(i, j) = i == j ? 2 : 1;
    rep.description = "star transpositions of S" + std::to_string(n + 1);
    return rep;
}

std::size_t matrix_closure_order(const std::vector<CycloMatrix>& gens, std::size_t cap) {
    if (gens.empty()) return 1;
    std::unordered_set<CycloMatrix, CycloMatrixHash> seen;
    std::vector<CycloMatrix> frontier{CycloMatrix::identity(gens[0].rows())};
    seen.insert(frontier[0]);
    while (!frontier.empty() && seen.size() <= cap) {
        std::vector<CycloMatrix> next;
        for (const auto& m : frontier)
            for (const auto& g : gens) {
                CycloMatrix x = m * g;
                if (seen.insert(x).second) next.push_back(std::move(x));
            }
        frontier = std::move(next);
    }
    return seen.size();
}

std::vector<Cyclotomic> principal_minor_sums(const CycloMatrix& m) {
    std::size_t n = m.rows();
    std::vector<Cyclotomic> e(n + 1, Cyclotomic(0));
    for (unsigned s = 0; s < (1u << n); ++s) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (s >> i & 1u) idx.push_back(i);
        if (idx.empty()) {
            e[0] += Cyclotomic(1);
            continue;
        }
        CycloMatrix sub(idx.size(), idx.size());
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b) sub(a, b) = m(idx[a], idx[b]);
        e[idx.size()] += sub.det();
    }
    return e;
}

LinearGroup::LinearGroup(TablePtr table, ReflectionRep rep) : table_(std::move(table)), rep_(std::move(rep)) {
    const GroupTable& t = *table_;
    std::size_t n = rep_.dim();
    auto fail = [&](const std::string& why) {
        throw RepVerificationError(t.label() + " / " + rep_.description + ": " + why);
    };
    if (rep_.generators.size() != static_cast<std::size_t>(t.rank())) fail("generator count differs from rank");
    CycloMatrix id = CycloMatrix::identity(n);
    for (const auto& g : rep_.generators) {
        if (g.rows() != n || g.cols() != n) fail("generator shape");
        if ((g - id).rank() != 1) fail("generator is not a reflection");
        if (g.adjoint() * rep_.gram * g != rep_.gram) fail("form is not invariant");
    }
    if (rep_.gram.adjoint() != rep_.gram) fail("form is not Hermitian");
    if (!positive_definite(rep_.gram)) fail("form is not positive definite");

    if (t.presentation()) {
        std::vector<CycloMatrix> letters;
        for (int i = 0; i < t.rank(); ++i) {
            letters.push_back(rep_.generators[static_cast<std::size_t>(i)]);
            letters.push_back(matrix_power(rep_.generators[static_cast<std::size_t>(i)], t.generator_order(i) - 1));
        }
        for (const auto& rel : relators(*t.presentation())) {
            CycloMatrix x = id;
            for (int l : rel) x = x * letters[static_cast<std::size_t>(l)];
            if (x != id) fail("relator does not hold");
        }
    }

    // matrices along shortest words, then the homomorphism and faithfulness checks
    mats_.resize(t.order());
    mats_[0] = id;
    for (std::size_t g = 1; g < t.order(); ++g) {
        const auto& w = t.word(static_cast<int>(g));
        int parent = t.from_word(std::vector<int>(w.begin(), w.end() - 1));
        mats_[g] = mats_[static_cast<std::size_t>(parent)] * rep_.generators[static_cast<std::size_t>(w.back())];
    }
    std::unordered_set<CycloMatrix, CycloMatrixHash> distinct;
    for (std::size_t g = 0; g < t.order(); ++g) {
        if (!distinct.insert(mats_[g]).second) fail("representation is not faithful");
        for (int i = 0; i < t.rank(); ++i)
            if (mats_[g] * rep_.generators[static_cast<std::size_t>(i)] !=
                mats_[static_cast<std::size_t>(t.rmul(static_cast<int>(g), i))])
                fail("matrices do not follow the multiplication table");
    }
}

Cyclotomic LinearGroup::inner(const CycloVector& x, const CycloVector& y) const {
    CycloVector gx = rep_.gram * x;
    Cyclotomic s(0);
    for (std::size_t i = 0; i < gx.size(); ++i) s += y[i].conj() * gx[i];
    return s;
}

Subspace LinearGroup::fixed_subspace(const std::vector<int>& elements) const {
    std::size_t n = dim();
    CycloMatrix stack(elements.size() * n, n);
    CycloMatrix id = CycloMatrix::identity(n);
    for (std::size_t k = 0; k < elements.size(); ++k) {
        CycloMatrix d = matrix(elements[k]) - id;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) stack(k * n + i, j) = d(i, j);
    }
    if (elements.empty()) return Subspace::whole(n);
    return Subspace::kernel(stack);
}

const std::vector<int>& LinearGroup::reflections() const {
    std::call_once(refl_once_, [this] {
        CycloMatrix id = CycloMatrix::identity(dim());
        for (std::size_t g = 1; g < table_->order(); ++g)
            if ((mats_[g] - id).rank() == 1) reflections_.push_back(static_cast<int>(g));
    });
    return reflections_;
}

std::vector<Subspace> LinearGroup::intersection_lattice() const {
    std::vector<Subspace> out{Subspace::whole(dim())};
    std::unordered_set<Subspace, SubspaceHash> seen{out[0]};
    std::vector<Subspace> layer;
    for (int r : reflections()) {
        Subspace h = fixed_subspace({r});
        if (seen.insert(h).second) layer.push_back(h);
    }
    std::vector<Subspace> hyperplanes = layer;
    while (!layer.empty()) {
        out.insert(out.end(), layer.begin(), layer.end());
        std::vector<Subspace> next;
        for (const auto& x : layer)
            for (const auto& h : hyperplanes) {
                if (h.contains(x)) continue;
                Subspace y = x.intersect(h);
                if (seen.insert(y).second) next.push_back(std::move(y));
            }
        layer = std::move(next);
    }
    return out;
}

PolyC LinearGroup::det_one_minus(int g) const {
    std::vector<Cyclotomic> e = principal_minor_sums(matrix(g));
    for (std::size_t k = 1; k < e.size(); k += 2) e[k] = -e[k];
    return PolyC(std::move(e));
}

PolyC LinearGroup::det_one_plus(int g) const { return PolyC(principal_minor_sums(matrix(g))); }

}  // namespace reflecta
