#include "reflecta/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace reflecta {

namespace {

bool is_zero_vector(const CycloVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Cyclotomic& x) { return x.is_zero(); });
}

double real_value(const Cyclotomic& x) { return x.to_complex().real(); }

bool is_real_matrix(const CycloMatrix& m) {
    return std::all_of(m.data().begin(), m.data().end(), [](const Cyclotomic& x) { return x.imag_part().is_zero(); });
}

CycloVector scale(const CycloVector& v, const Cyclotomic& s) {
    CycloVector out(v);
    for (auto& x : out) x *= s;
    return out;
}

// ---- dense two-phase simplex with Bland's rule ----

inline bool positive(double x, double eps) { return x > eps; }
inline bool positive(const mpq_class& x, const mpq_class&) { return sgn(x) > 0; }
inline bool negative(double x, double eps) { return x < -eps; }
inline bool negative(const mpq_class& x, const mpq_class&) { return sgn(x) < 0; }
inline bool nonzero(double x, double eps) { return std::fabs(x) > eps; }
inline bool nonzero(const mpq_class& x, const mpq_class&) { return sgn(x) != 0; }

template <class K>
class Tableau {
public:
    // maximize c.x subject to A x = b, x >= 0
    Tableau(const std::vector<std::vector<K>>& a, const std::vector<K>& b, K eps)
        : m_(a.size()), n_(a.empty() ? 0 : a[0].size()), eps_(eps) {
        cols_ = n_ + m_;
        t_.assign(m_ + 1, std::vector<K>(cols_ + 1, K(0)));
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            bool flip = negative(b[i], K(0));
            for (std::size_t j = 0; j < n_; ++j) t_[i][j] = flip ? K(-a[i][j]) : a[i][j];
            t_[i][n_ + i] = K(1);
            t_[i][cols_] = flip ? K(-b[i]) : b[i];
            basis_[i] = n_ + i;
        }
    }

    K phase_one() {
        auto& z = t_[m_];
        std::fill(z.begin(), z.end(), K(0));
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = 0; j <= cols_; ++j)
                if (j < n_ || j == cols_) z[j] -= t_[i][j];
        run(cols_);
        K infeas = -z[cols_];
        // Drive remaining artificials out where a structural pivot exists.
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) continue;
            for (std::size_t j = 0; j < n_; ++j)
                if (nonzero(t_[i][j], eps_)) {
                    pivot(i, j);
                    break;
                }
        }
        return infeas;
    }

    K phase_two(const std::vector<K>& c) {
        auto& z = t_[m_];
        std::fill(z.begin(), z.end(), K(0));
        for (std::size_t j = 0; j < n_; ++j) z[j] = -c[j];
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] >= n_) continue;
            K f = z[basis_[i]];
            if (!nonzero(f, K(0))) continue;
            for (std::size_t j = 0; j <= cols_; ++j) z[j] -= f * t_[i][j];
        }
        run(n_);
        return z[cols_];
    }

private:
    void pivot(std::size_t r, std::size_t c) {
        K p = t_[r][c];
        for (auto& x : t_[r]) x /= p;
        for (std::size_t i = 0; i <= m_; ++i) {
            if (i == r) continue;
            K f = t_[i][c];
            if (!nonzero(f, K(0))) continue;
            for (std::size_t j = 0; j <= cols_; ++j) t_[i][j] -= f * t_[r][j];
        }
        basis_[r] = c;
    }

    // Bland's rule over columns [0, limit); the objective is bounded here.
    void run(std::size_t limit) {
        for (;;) {
            std::size_t enter = limit;
            for (std::size_t j = 0; j < limit; ++j)
                if (negative(t_[m_][j], eps_)) {
                    enter = j;
                    break;
                }
            if (enter == limit) return;
            std::size_t leave = m_;
            K best(0);
            for (std::size_t i = 0; i < m_; ++i) {
                if (!positive(t_[i][enter], eps_)) continue;
                K ratio = t_[i][cols_] / t_[i][enter];
                if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m_) return;
            pivot(leave, enter);
        }
    }

    std::size_t m_, n_, cols_;
    K eps_;
    std::vector<std::vector<K>> t_;
    std::vector<std::size_t> basis_;
};

struct PairOutcome {
    Verdict verdict = Verdict::Pass;
    std::string reason;
};

// Maximize the weight on vertices outside the common face over the
// intersection of the two realized simplices.
template <class K>
PairOutcome pair_test(const std::vector<std::vector<K>>& pts, const std::vector<int>& f, const std::vector<int>& g,
                      const std::vector<int>& shared, const WellFramedOptions& opt, K eps) {
    std::size_t d = pts.empty() ? 0 : pts[0].size();
    std::size_t p = f.size(), q = g.size();
    std::vector<std::vector<K>> a(d + 2, std::vector<K>(p + q, K(0)));
    std::vector<K> b(d + 2, K(0));
    std::vector<K> c(p + q, K(0));
    auto in_shared = [&](int v) { return std::binary_search(shared.begin(), shared.end(), v); };
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t k = 0; k < d; ++k) a[k][i] = pts[static_cast<std::size_t>(f[i])][k];
        a[d][i] = K(1);
        if (!in_shared(f[i])) c[i] = K(1);
    }
    for (std::size_t j = 0; j < q; ++j) {
        for (std::size_t k = 0; k < d; ++k) a[k][p + j] = -pts[static_cast<std::size_t>(g[j])][k];
        a[d + 1][p + j] = K(1);
        if (!in_shared(g[j])) c[p + j] = K(1);
    }
    b[d] = K(1);
    b[d + 1] = K(1);

    Tableau<K> tab(a, b, eps);
    K infeas = tab.phase_one();
    if constexpr (std::is_same_v<K, double>) {
        if (infeas > opt.band) return {};
        if (infeas > opt.tol) return {Verdict::Indeterminate, "separation within the tolerance band"};
    } else {
        if (sgn(infeas) != 0) return {};
    }
    K value = tab.phase_two(c);
    if constexpr (std::is_same_v<K, double>) {
        if (value <= opt.tol) return {};
        if (value <= opt.band) return {Verdict::Indeterminate, "overlap weight within the tolerance band"};
    } else {
        if (sgn(value) == 0) return {};
    }
    return {Verdict::Fail, "realized simplices meet outside their common face"};
}

}  // namespace

void validate_frame(const LinearGroup& lg, const Frame& frame) {
    int rank = lg.table().rank();
    if (static_cast<int>(frame.vectors.size()) != rank) throw FrameError("frame: need one vector per generator");
    for (int i = 0; i < rank; ++i) {
        const auto& v = frame.vectors[static_cast<std::size_t>(i)];
        if (v.size() != lg.dim()) throw FrameError("frame: vector of wrong length");
        if (is_zero_vector(v)) throw FrameError("frame: lambda_" + std::to_string(i + 1) + " is zero");
        for (int j = 0; j < rank; ++j) {
            bool fixed = lg.matrix(lg.table().generator(j)) * v == v;
            if (j != i && !fixed)
                throw FrameError("frame: lambda_" + std::to_string(i + 1) + " is moved by r_" + std::to_string(j + 1));
            if (j == i && fixed)
                throw FrameError("frame: lambda_" + std::to_string(i + 1) + " is fixed by its own reflection");
        }
    }
}

Frame axis_frame(const LinearGroup& lg) {
    int rank = lg.table().rank();
    Frame fr;
    for (int i = 0; i < rank; ++i) {
        std::vector<int> others;
        for (int j = 0; j < rank; ++j)
            if (j != i) others.push_back(lg.table().generator(j));
        Subspace line = lg.fixed_subspace(others);
        if (line.dim() != 1) throw FrameError("frame: intersection of the other hyperplanes is not a line");
        fr.vectors.push_back(line.vectors()[0]);
    }
    validate_frame(lg, fr);
    return fr;
}

Frame weyl_frame(const LinearGroup& lg) {
    const GroupTable& t = lg.table();
    int rank = t.rank();
    if (!is_real_matrix(lg.rep().gram)) throw FrameError("weyl_frame: representation is not real");
    for (int i = 0; i < rank; ++i) {
        if (t.generator_order(i) != 2) throw FrameError("weyl_frame: generator of order other than 2");
        if (!is_real_matrix(lg.matrix(t.generator(i)))) throw FrameError("weyl_frame: representation is not real");
    }
    // Roots from the images of 1 - r_i, signs propagated along the diagram.
    std::vector<CycloVector> roots;
    CycloMatrix id = CycloMatrix::identity(lg.dim());
    for (int i = 0; i < rank; ++i) {
        CycloMatrix d = id - lg.matrix(t.generator(i));
        CycloVector root;
        for (std::size_t j = 0; j < d.cols() && root.empty(); ++j)
            if (!is_zero_vector(d.col(j))) root = d.col(j);
        roots.push_back(root);
    }
    std::vector<char> fixed(static_cast<std::size_t>(rank), 0);
    for (int s = 0; s < rank; ++s) {
        if (fixed[static_cast<std::size_t>(s)]) continue;
        std::vector<int> stack{s};
        fixed[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < rank; ++j) {
                if (fixed[static_cast<std::size_t>(j)]) continue;
                Cyclotomic ip = lg.inner(roots[static_cast<std::size_t>(i)], roots[static_cast<std::size_t>(j)]);
                if (ip.is_zero()) continue;
                if (real_value(ip) > 0) roots[static_cast<std::size_t>(j)] = scale(roots[static_cast<std::size_t>(j)], -1);
                fixed[static_cast<std::size_t>(j)] = 1;
                stack.push_back(j);
            }
        }
    }
    Frame fr = axis_frame(lg);
    for (int i = 0; i < rank; ++i) {
        auto& v = fr.vectors[static_cast<std::size_t>(i)];
        if (real_value(lg.inner(v, roots[static_cast<std::size_t>(i)])) < 0) v = scale(v, -1);
    }
    return fr;
}

Frame scaled(const Frame& frame, const std::vector<Cyclotomic>& scalars) {
    if (scalars.size() != frame.vectors.size()) throw FrameError("frame: one scalar per vector");
    Frame out;
    for (std::size_t i = 0; i < scalars.size(); ++i) out.vectors.push_back(scale(frame.vectors[i], scalars[i]));
    return out;
}

int EmbeddedComplex::vertex_index(const Face& v) const {
    auto it = std::lower_bound(vertex_faces.begin(), vertex_faces.end(), v);
    if (it == vertex_faces.end() || *it != v) return -1;
    return static_cast<int>(it - vertex_faces.begin());
}

std::vector<Cyclotomic> EmbeddedComplex::real_coords(int v) const {
    const auto& x = coords[static_cast<std::size_t>(v)];
    std::vector<Cyclotomic> out;
    for (const auto& c : x) out.push_back(c.real_part());
    for (const auto& c : x) out.push_back(c.imag_part());
    return out;
}

bool EmbeddedComplex::rational() const {
    for (const auto& x : coords)
        for (const auto& c : x)
            if (!c.real_part().is_rational() || !c.imag_part().is_rational()) return false;
    return true;
}

EmbeddedComplex embed(const CosetComplex& cx, const LinearGroup& lg, const Frame& frame) {
    if (cx.table().order() != lg.table().order() || cx.rank() != lg.table().rank())
        throw FrameError("embed: complex and representation use different groups");
    validate_frame(lg, frame);
    EmbeddedComplex e{cx, cx.vertices(), {}, {}, {}};
    std::sort(e.vertex_faces.begin(), e.vertex_faces.end());
    for (const auto& v : e.vertex_faces) {
        int i = __builtin_ctz(v.type);
        e.coords.push_back(lg.matrix(cx.representative(v)) * frame.vectors[static_cast<std::size_t>(i)]);
    }
    for (const auto& f : cx.facets()) {
        std::vector<int> s;
        for (const auto& v : cx.face_vertices(f)) s.push_back(e.vertex_index(v));
        std::sort(s.begin(), s.end());
        e.simplices.push_back(std::move(s));
        e.simplex_faces.push_back(f);
    }
    return e;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Indeterminate: return "INDETERMINATE";
    }
    return "?";
}

WellFramedReport well_framed_check(const EmbeddedComplex& ecx, const WellFramedOptions& opt) {
    WellFramedReport rep;
    rep.exact = ecx.rational();
    auto fail = [&](const Face& a, const Face& b, std::string why) {
        rep.verdict = Verdict::Fail;
        rep.witness = std::make_pair(a, b);
        rep.reason = std::move(why);
        return rep;
    };

    // Exact checks: distinct vertex images, distinct vertex sets, affinely
    // independent vertices in every simplex.
    auto vec_hash = [](const CycloVector& v) {
        std::size_t h = v.size();
        for (const auto& x : v) h = h * 1000003u ^ x.hash();
        return h;
    };
    std::unordered_map<CycloVector, int, decltype(vec_hash)> seen(16, vec_hash);
    for (std::size_t v = 0; v < ecx.coords.size(); ++v) {
        auto [it, inserted] = seen.emplace(ecx.coords[v], static_cast<int>(v));
        if (!inserted)
            return fail(ecx.vertex_faces[static_cast<std::size_t>(it->second)], ecx.vertex_faces[v],
                        "two vertices have the same image");
    }
    std::map<std::vector<int>, std::size_t> sets;
    for (std::size_t s = 0; s < ecx.simplices.size(); ++s) {
        auto [it, inserted] = sets.emplace(ecx.simplices[s], s);
        if (!inserted) return fail(ecx.simplex_faces[it->second], ecx.simplex_faces[s], "two faces have the same vertices");
    }
    std::vector<std::vector<Cyclotomic>> exact_pts;
    for (std::size_t v = 0; v < ecx.coords.size(); ++v) exact_pts.push_back(ecx.real_coords(static_cast<int>(v)));
    for (std::size_t s = 0; s < ecx.simplices.size(); ++s) {
        const auto& sv = ecx.simplices[s];
        if (sv.size() < 2) continue;
        std::vector<CycloVector> diffs;
        const auto& base = exact_pts[static_cast<std::size_t>(sv[0])];
        for (std::size_t k = 1; k < sv.size(); ++k) {
            CycloVector d = exact_pts[static_cast<std::size_t>(sv[k])];
            for (std::size_t c = 0; c < d.size(); ++c) d[c] -= base[c];
            diffs.push_back(std::move(d));
        }
        if (Subspace::span(base.size(), diffs).dim() != diffs.size())
            return fail(ecx.simplex_faces[s], ecx.simplex_faces[s], "realized simplex is degenerate");
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < ecx.simplices.size(); ++a)
        for (std::size_t b = a + 1; b < ecx.simplices.size(); ++b) pairs.emplace_back(a, b);
    rep.pairs_checked = pairs.size();

    std::vector<std::vector<mpq_class>> qpts;
    std::vector<std::vector<double>> dpts;
    for (const auto& p : exact_pts) {
        if (rep.exact) {
            std::vector<mpq_class> row;
            for (const auto& c : p) row.push_back(c.rational());
            qpts.push_back(std::move(row));
        } else {
            std::vector<double> row;
            for (const auto& c : p) row.push_back(real_value(c));
            dpts.push_back(std::move(row));
        }
    }

    auto test_range = [&](std::size_t lo, std::size_t hi) {
        std::vector<PairOutcome> out;
        for (std::size_t k = lo; k < hi; ++k) {
            const auto& f = ecx.simplices[pairs[k].first];
            const auto& g = ecx.simplices[pairs[k].second];
            std::vector<int> shared;
            std::set_intersection(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(shared));
            if (rep.exact)
                out.push_back(pair_test<mpq_class>(qpts, f, g, shared, opt, mpq_class(0)));
            else
                out.push_back(pair_test<double>(dpts, f, g, shared, opt, 1e-12));
        }
        return out;
    };

    std::vector<PairOutcome> outcomes;
    unsigned jobs = std::max(1u, opt.jobs);
    if (jobs == 1 || pairs.size() < 64) {
        outcomes = test_range(0, pairs.size());
    } else {
        std::vector<std::future<std::vector<PairOutcome>>> futs;
        std::size_t chunk = (pairs.size() + jobs - 1) / jobs;
        for (std::size_t lo = 0; lo < pairs.size(); lo += chunk)
            futs.push_back(std::async(std::launch::async, test_range, lo, std::min(pairs.size(), lo + chunk)));
        for (auto& f : futs) {
            auto part = f.get();
            outcomes.insert(outcomes.end(), part.begin(), part.end());
        }
    }

    std::optional<std::size_t> first_indet;
    for (std::size_t k = 0; k < outcomes.size(); ++k) {
        if (outcomes[k].verdict == Verdict::Fail)
            return fail(ecx.simplex_faces[pairs[k].first], ecx.simplex_faces[pairs[k].second], outcomes[k].reason);
        if (outcomes[k].verdict == Verdict::Indeterminate) {
            ++rep.indeterminate;
            if (!first_indet) first_indet = k;
        }
    }
    if (first_indet) {
        rep.verdict = Verdict::Indeterminate;
        rep.witness = std::make_pair(ecx.simplex_faces[pairs[*first_indet].first],
                                     ecx.simplex_faces[pairs[*first_indet].second]);
        rep.reason = outcomes[*first_indet].reason;
    }
    return rep;
}

StratificationReport strongly_stratified_check(const LinearGroup& lg, const CosetComplex& cx, const Frame& frame) {
    validate_frame(lg, frame);
    StratificationReport rep;
    std::size_t n = lg.dim();
    // span of a face image, keyed by dimension of the face
    std::unordered_set<Subspace, SubspaceHash> spans;
    std::map<int, std::vector<Subspace>> by_face_dim;
    auto add = [&](int face_dim, const Subspace& s) {
        if (spans.insert(s).second) by_face_dim[face_dim].push_back(s);
    };
    add(-1, Subspace(n));
    for (const auto& f : cx.faces()) {
        std::vector<CycloVector> pts;
        int g = cx.representative(f);
        for (int i = 0; i < lg.table().rank(); ++i)
            if ((f.type >> i) & 1u) pts.push_back(lg.matrix(g) * frame.vectors[static_cast<std::size_t>(i)]);
        add(f.dim(), Subspace::span(n, pts));
    }
    auto lattice = lg.intersection_lattice();
    std::unordered_set<Subspace, SubspaceHash> lat(lattice.begin(), lattice.end());
    if (!lat.count(Subspace(n))) lat.insert(Subspace(n));
    rep.lattice_size = lat.size();
    rep.face_spans = spans.size();
    for (const auto& x : lat) {
        bool found = false;
        auto it = by_face_dim.find(static_cast<int>(x.dim()) - 1);
        if (it != by_face_dim.end())
            for (const auto& s : it->second)
                if (x.contains(s)) {
                    found = true;
                    break;
                }
        if (!found) rep.missing.push_back(x);
    }
    for (const auto& s : spans)
        if (!lat.count(s)) rep.extra.push_back(s);
    auto by_dim = [](const Subspace& a, const Subspace& b) { return a.dim() > b.dim(); };
    std::stable_sort(rep.missing.begin(), rep.missing.end(), by_dim);
    std::stable_sort(rep.extra.begin(), rep.extra.end(), by_dim);
    rep.pass = rep.missing.empty();
    return rep;
}

TablePtr star_table(int n) {
    if (n < 1) throw std::invalid_argument("star_table: n must be positive");
    std::vector<std::vector<int>> gens;
    for (int i = 0; i < n; ++i) {
        std::vector<int> p(static_cast<std::size_t>(n + 1));
        for (int k = 0; k <= n; ++k) p[static_cast<std::size_t>(k)] = k;
        std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(n)]);
        gens.push_back(p);
    }
    return std::make_shared<const GroupTable>(GroupTable::from_permutations(gens, "S" + std::to_string(n + 1) + "*"));
}

std::vector<Cyclotomic> default_star_alphas(int n) {
    std::vector<Cyclotomic> out;
    for (int j = 0; j < n; ++j) out.push_back(Cyclotomic::root_of_unity(2L * n, j));
    return out;
}

StarSystem star_system(int n, const std::vector<Cyclotomic>& alphas) {
    if (static_cast<int>(alphas.size()) != n) throw FrameError("star_system: need n scalars");
    for (int i = 0; i < n; ++i) {
        const auto& a = alphas[static_cast<std::size_t>(i)];
        if (a.is_zero()) throw FrameError("star_system: zero scalar");
        for (int j = 0; j < i; ++j)
            if ((a * alphas[static_cast<std::size_t>(j)].conj()).imag_part().is_zero())
                throw FrameError("star_system: alpha_" + std::to_string(j + 1) + " and alpha_" + std::to_string(i + 1) +
                                 " are real multiples");
    }
    StarSystem s;
    s.n = n;
    s.group = std::make_shared<const LinearGroup>(star_table(n), star_rep(n));
    mpq_class c(1, n + 1);
    for (int i = 0; i < n; ++i) {
        CycloVector v(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = Cyclotomic(mpq_class((i == j ? 1 : 0) - c));
        s.frame.vectors.push_back(scale(v, alphas[static_cast<std::size_t>(i)]));
    }
    validate_frame(*s.group, s.frame);
    return s;
}

}  // namespace reflecta
