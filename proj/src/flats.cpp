#include "reflecta/flats.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace reflecta {

bool Poset::is_partial_order() const {
    std::size_t n = size();
    for (std::size_t a = 0; a < n; ++a) {
        if (!le[a][a]) return false;
        for (std::size_t b = 0; b < n; ++b) {
            if (a != b && le[a][b] && le[b][a]) return false;
            if (!le[a][b]) continue;
            for (std::size_t c = 0; c < n; ++c)
                if (le[b][c] && !le[a][c]) return false;
        }
    }
    return true;
}

Poset Poset::induced(const std::vector<int>& elements) const {
    Poset p;
    p.le.assign(elements.size(), std::vector<char>(elements.size(), 0));
    for (std::size_t a = 0; a < elements.size(); ++a)
        for (std::size_t b = 0; b < elements.size(); ++b) p.le[a][b] = leq(elements[a], elements[b]);
    return p;
}

std::vector<std::pair<int, int>> Poset::hasse_edges() const {
    std::vector<std::pair<int, int>> edges;
    int n = static_cast<int>(size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !leq(a, b)) continue;
            bool cover = true;
            for (int c = 0; c < n && cover; ++c)
                if (c != a && c != b && leq(a, c) && leq(c, b)) cover = false;
            if (cover) edges.emplace_back(a, b);
        }
    return edges;
}

SimplicialComplex order_complex(const Poset& p) {
    int n = static_cast<int>(p.size());
    std::vector<std::vector<int>> up(static_cast<std::size_t>(n));
    std::vector<bool> minimal(static_cast<std::size_t>(n), true);
    for (auto [a, b] : p.hasse_edges()) {
        up[static_cast<std::size_t>(a)].push_back(b);
        minimal[static_cast<std::size_t>(b)] = false;
    }
    std::vector<std::vector<int>> chains;
    std::vector<int> chain;
    std::function<void(int)> extend = [&](int a) {
        chain.push_back(a);
        if (up[static_cast<std::size_t>(a)].empty()) chains.push_back(chain);
        for (int b : up[static_cast<std::size_t>(a)]) extend(b);
        chain.pop_back();
    };
    for (int a = 0; a < n; ++a)
        if (minimal[static_cast<std::size_t>(a)]) extend(a);
    if (chains.empty()) chains.emplace_back();
    return SimplicialComplex::from_facets(n, std::move(chains));
}

long mobius(const Poset& p, int bottom, int top) {
    if (!p.leq(bottom, top)) return 0;
    int n = static_cast<int>(p.size());
    std::vector<long> mu(static_cast<std::size_t>(n), 0);
    // elements of the interval in a linear extension (by number of elements below)
    std::vector<int> interval;
    for (int z = 0; z < n; ++z)
        if (p.leq(bottom, z) && p.leq(z, top)) interval.push_back(z);
    std::vector<int> below(static_cast<std::size_t>(n), 0);
    for (int z : interval)
        for (int y : interval) below[static_cast<std::size_t>(z)] += p.leq(y, z);
    std::stable_sort(interval.begin(), interval.end(), [&](int a, int b) {
        return below[static_cast<std::size_t>(a)] < below[static_cast<std::size_t>(b)];
    });
    for (int z : interval) {
        if (z == bottom) {
            mu[static_cast<std::size_t>(z)] = 1;
            continue;
        }
        long s = 0;
        for (int y : interval)
            if (y != z && p.leq(y, z)) s += mu[static_cast<std::size_t>(y)];
        mu[static_cast<std::size_t>(z)] = -s;
    }
    return mu[static_cast<std::size_t>(top)];
}

Subgroup support(const CosetComplex& cx, const Face& f) {
    const GroupTable& t = cx.table();
    return conjugate_subgroup(t, standard_parabolic(t, t.full_mask() & ~f.type), cx.representative(f));
}

FlatIndex::FlatIndex(const CosetComplex& full) : full_(full) {
    const GroupTable& t = full.table();
    std::unordered_map<Subgroup, int, SubgroupHash> seen;
    std::vector<std::pair<Face, int>> assignment;
    std::vector<Subgroup> found;
    std::vector<Subgroup> parabolic;
    for (Mask J = 0; J <= t.full_mask(); ++J) parabolic.push_back(standard_parabolic(t, t.full_mask() & ~J));
    for (const Face& f : full.faces()) {
        Subgroup s = conjugate_subgroup(t, parabolic[f.type], full.representative(f));
        auto [it, inserted] = seen.emplace(s, static_cast<int>(found.size()));
        if (inserted) found.push_back(s);
        assignment.emplace_back(f, it->second);
    }
    std::vector<int> perm(found.size());
    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = static_cast<int>(k);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        const Subgroup& x = found[static_cast<std::size_t>(a)];
        const Subgroup& y = found[static_cast<std::size_t>(b)];
        if (x.order() != y.order()) return x.order() < y.order();
        return x.members() < y.members();
    });
    std::vector<int> rank_of(found.size());
    for (std::size_t k = 0; k < perm.size(); ++k) {
        rank_of[static_cast<std::size_t>(perm[k])] = static_cast<int>(k);
        flats_.push_back(found[static_cast<std::size_t>(perm[k])]);
    }
    face_flat_.resize(static_cast<std::size_t>(t.full_mask()) + 1);
    for (Mask J = 0; J <= t.full_mask(); ++J) face_flat_[J].assign(full.partition(J).count(), -1);
    for (const auto& [f, id] : assignment)
        face_flat_[f.type][static_cast<std::size_t>(f.coset)] = rank_of[static_cast<std::size_t>(id)];
    std::size_t n = flats_.size();
    le_.le.assign(n, std::vector<char>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            le_.le[a][b] = flats_[a].order() <= flats_[b].order() && flats_[a].is_subset_of(flats_[b]);
    for (std::size_t a = 0; a < n; ++a)
        if (flats_[a].order() == t.order()) top_ = static_cast<int>(a);
    std::unordered_map<Subgroup, int, SubgroupHash> where;
    for (std::size_t a = 0; a < n; ++a) where.emplace(flats_[a], static_cast<int>(a));
    for (int i = 0; i < t.rank(); ++i) {
        std::vector<int> img;
        for (const auto& x : flats_) img.push_back(where.at(conjugate_subgroup(t, x, t.generator(i))));
        conj_.push_back(std::move(img));
    }
}

int FlatIndex::flat_of(const Face& f) const { return face_flat_[f.type][static_cast<std::size_t>(f.coset)]; }

int FlatIndex::conjugate(int g, int x) const {
    const auto& w = full_.table().word(g);
    for (auto it = w.rbegin(); it != w.rend(); ++it) x = conj_[static_cast<std::size_t>(*it)][static_cast<std::size_t>(x)];
    return x;
}

std::pair<Poset, std::vector<int>> FlatsPoset::without_top() const {
    std::vector<int> keep, ids;
    for (std::size_t k = 0; k < flats.size(); ++k)
        if (static_cast<int>(k) != top) {
            keep.push_back(static_cast<int>(k));
            ids.push_back(flats[k]);
        }
    return {order.induced(keep), ids};
}

FlatsPoset flats_poset(const FlatIndex& ix, const CosetComplex& sub) {
    std::vector<char> present(ix.size(), 0);
    for (const Face& f : sub.faces()) present[static_cast<std::size_t>(ix.flat_of(f))] = 1;
    FlatsPoset fp;
    for (std::size_t x = 0; x < ix.size(); ++x)
        if (present[x]) {
            if (static_cast<int>(x) == ix.top()) fp.top = static_cast<int>(fp.flats.size());
            fp.flats.push_back(static_cast<int>(x));
        }
    std::size_t n = fp.flats.size();
    fp.order.le.assign(n, std::vector<char>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) fp.order.le[a][b] = ix.leq(fp.flats[a], fp.flats[b]);
    return fp;
}

CosetComplex quillen_fiber(const FlatIndex& ix, const CosetComplex& cx, int x) {
    if (x == ix.top()) throw std::invalid_argument("quillen_fiber: the top flat has no fiber");
    return CosetComplex::filtered(cx, [&](const Face& f) { return ix.leq(x, ix.flat_of(f)); });
}

std::optional<Face> cone_point(const CosetComplex& cx) {
    auto facets = cx.facets();
    for (const Face& v : cx.vertices()) {
        bool all = true;
        for (const Face& f : facets)
            if (!cx.leq(v, f)) {
                all = false;
                break;
            }
        if (all) return v;
    }
    return std::nullopt;
}

ConicalReport locally_conical_check(const FlatIndex& ix, bool abstract) {
    ConicalReport rep;
    const CosetComplex& full = ix.complex();
    Mask all = full.table().full_mask();
    for (Mask U = 1; U <= all; ++U) {
        CosetComplex st = star(full, U);
        for (Mask T = abstract ? 0 : all;; ++T) {
            CosetComplex cx = abstract ? type_select(st, T) : st;
            FlatsPoset fp = flats_poset(ix, cx);
            for (std::size_t k = 0; k < fp.flats.size(); ++k) {
                if (static_cast<int>(k) == fp.top) continue;
                int x = fp.flats[k];
                CosetComplex fiber = quillen_fiber(ix, cx, x);
                ++rep.fibers_checked;
                if (!cone_point(fiber)) {
                    rep.pass = false;
                    rep.witnesses.push_back({U, T, x, ix.flat(x).order(), fiber.f_vector()});
                }
            }
            if (T == all) break;
        }
    }
    return rep;
}

Subgroup pointwise_stabilizer(const LinearGroup& lg, const Subspace& x) {
    std::vector<int> members;
    auto basis = x.vectors();
    for (std::size_t g = 0; g < lg.table().order(); ++g) {
        bool fixes = true;
        for (const auto& v : basis)
            if (lg.matrix(static_cast<int>(g)) * v != v) {
                fixes = false;
                break;
            }
        if (fixes) members.push_back(static_cast<int>(g));
    }
    return Subgroup(lg.table().order(), std::move(members), {});
}

GaloisReport galois_check(const LinearGroup& lg, const FlatIndex& ix) {
    GaloisReport rep;
    std::vector<Subspace> fixed;
    for (std::size_t x = 0; x < ix.size(); ++x) {
        const Subgroup& h = ix.flat(static_cast<int>(x));
        Subspace f = lg.fixed_subspace(h.generators().empty() ? h.members() : h.generators());
        if (pointwise_stabilizer(lg, f) != h) {
            rep.pass = false;
            rep.witness = "flat " + std::to_string(x) + ": stabilizer of its fixed space differs";
            return rep;
        }
        fixed.push_back(std::move(f));
    }
    for (std::size_t a = 0; a < ix.size(); ++a)
        for (std::size_t b = 0; b < ix.size(); ++b)
            if (ix.leq(static_cast<int>(a), static_cast<int>(b)) != fixed[a].contains(fixed[b])) {
                rep.pass = false;
                rep.witness = "flats " + std::to_string(a) + ", " + std::to_string(b) + ": order disagrees with inclusion";
                return rep;
            }
    // Fix(Stab(X)) == X for the supports of faces: distinct flats give distinct subspaces
    for (std::size_t a = 0; a < ix.size(); ++a)
        for (std::size_t b = a + 1; b < ix.size(); ++b)
            if (fixed[a] == fixed[b]) {
                rep.pass = false;
                rep.witness = "flats " + std::to_string(a) + ", " + std::to_string(b) + " share a fixed space";
                return rep;
            }
    return rep;
}

}  // namespace reflecta
