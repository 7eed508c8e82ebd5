#include "reflecta/complexes.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace reflecta {

CosetComplex CosetComplex::full(TablePtr table) {
    auto shared = std::make_shared<Shared>();
    Mask full = table->full_mask();
    shared->parts.resize(static_cast<std::size_t>(full) + 1);
    for (Mask J = 0; J <= full; ++J) shared->parts[J] = parabolic_cosets(*table, full & ~J);
    shared->table = std::move(table);
    CosetComplex cx;
    cx.present_.resize(shared->parts.size());
    cx.has_.resize(shared->parts.size());
    for (Mask J = 0; J <= full; ++J) {
        std::size_t k = shared->parts[J].count();
        cx.present_[J].resize(k);
        std::iota(cx.present_[J].begin(), cx.present_[J].end(), 0);
        cx.has_[J].assign(k, 1);
    }
    cx.shared_ = std::move(shared);
    return cx;
}

CosetComplex CosetComplex::filtered(const CosetComplex& base, const std::function<bool(const Face&)>& keep) {
    CosetComplex cx;
    cx.shared_ = base.shared_;
    cx.present_.resize(base.present_.size());
    cx.has_.resize(base.present_.size());
    for (Mask J = 0; J < base.present_.size(); ++J) {
        cx.has_[J].assign(base.partition(J).count(), 0);
        for (int c : base.present_[J])
            if (keep(Face{J, c})) {
                cx.present_[J].push_back(c);
                cx.has_[J][static_cast<std::size_t>(c)] = 1;
            }
    }
    // closure under faces
    for (Mask J = 0; J < cx.present_.size(); ++J)
        for (int c : cx.present_[J]) {
            Face f{J, c};
            for (Mask K = J; K; K = (K - 1) & J) {
                Mask sub = J & ~K;
                if (!cx.contains(cx.subface(f, sub))) throw InvariantViolation("filtered complex is not closed under faces");
            }
        }
    return cx;
}

bool CosetComplex::contains(const Face& f) const {
    if (f.type >= has_.size() || f.coset < 0 || static_cast<std::size_t>(f.coset) >= has_[f.type].size()) return false;
    return has_[f.type][static_cast<std::size_t>(f.coset)] != 0;
}

std::size_t CosetComplex::size() const {
    std::size_t n = 0;
    for (const auto& v : present_) n += v.size();
    return n;
}

int CosetComplex::dim() const {
    int d = -2;
    for (Mask J = 0; J < present_.size(); ++J)
        if (!present_[J].empty()) d = std::max(d, popcount(J) - 1);
    return d;
}

std::vector<Face> CosetComplex::faces() const {
    std::vector<Face> out;
    for (Mask J = 0; J < present_.size(); ++J)
        for (int c : present_[J]) out.push_back({J, c});
    return out;
}

std::vector<Face> CosetComplex::faces_of_dim(int d) const {
    std::vector<Face> out;
    for (Mask J = 0; J < present_.size(); ++J)
        if (popcount(J) == d + 1)
            for (int c : present_[J]) out.push_back({J, c});
    return out;
}

std::vector<Face> CosetComplex::vertices() const { return faces_of_dim(0); }

std::vector<Face> CosetComplex::facets() const {
    std::vector<Face> out;
    for (Mask J = 0; J < present_.size(); ++J)
        for (int c : present_[J]) {
            Face f{J, c};
            bool maximal = true;
            for (Mask K = 0; K < present_.size() && maximal; ++K) {
                if (K == J || (K & J) != J) continue;
                // a present coset of type K inside f lies above it
                for (int x : elements(f))
                    if (contains(face_of(x, K))) {
                        maximal = false;
                        break;
                    }
            }
            if (maximal) out.push_back(f);
        }
    return out;
}

std::vector<std::size_t> CosetComplex::f_vector() const {
    int d = dim();
    std::vector<std::size_t> f(static_cast<std::size_t>(std::max(d + 1, 0)), 0);
    for (Mask J = 1; J < present_.size(); ++J)
        if (!present_[J].empty()) f[static_cast<std::size_t>(popcount(J) - 1)] += present_[J].size();
    return f;
}

bool CosetComplex::leq(const Face& a, const Face& b) const {
    if ((a.type & b.type) != a.type) return false;
    return face_of(representative(b), a.type) == a;
}

Face CosetComplex::act(int h, const Face& f) const { return face_of(table().mul(h, representative(f)), f.type); }

std::vector<Face> CosetComplex::face_vertices(const Face& f) const {
    std::vector<Face> out;
    int g = representative(f);
    for (int i = 0; i < rank(); ++i)
        if (f.type >> i & 1u) out.push_back(face_of(g, Mask{1} << i));
    return out;
}

bool CosetComplex::is_pure() const {
    auto fs = facets();
    for (const auto& f : fs)
        if (f.dim() != fs.front().dim()) return false;
    return true;
}

bool CosetComplex::vertex_determined() const {
    std::map<std::vector<Face>, Face> seen;
    for (const auto& f : faces()) {
        auto vs = face_vertices(f);
        auto [it, inserted] = seen.emplace(vs, f);
        if (!inserted) return false;
    }
    return true;
}

CosetComplex build_complex(TablePtr table) { return CosetComplex::full(std::move(table)); }

CosetComplex type_select(const CosetComplex& cx, Mask T) {
    return CosetComplex::filtered(cx, [T](const Face& f) { return (f.type & T) == f.type; });
}

CosetComplex star(const CosetComplex& cx, Mask U) {
    if (U == 0) throw std::invalid_argument("star: U must be nonempty");
    const GroupTable& t = cx.table();
    Subgroup pointer = standard_parabolic(t, t.full_mask() & ~U);
    return CosetComplex::filtered(cx, [&](const Face& f) {
        for (int g : cx.elements(f))
            if (pointer.contains(g)) return true;
        return false;
    });
}

CosetComplex pointed(const CosetComplex& full, Mask U, Mask T) {
    CosetComplex a = type_select(star(full, U), T);
    const GroupTable& t = full.table();
    Subgroup pointer = standard_parabolic(t, t.full_mask() & ~U);
    std::vector<std::vector<char>> mark(static_cast<std::size_t>(t.full_mask()) + 1);
    for (Mask J = 0; J <= t.full_mask(); ++J) {
        mark[J].assign(full.partition(J).count(), 0);
        if ((J & T) != J) continue;
        for (int g : pointer.members()) mark[J][static_cast<std::size_t>(full.face_of(g, J).coset)] = 1;
    }
    CosetComplex b = CosetComplex::filtered(
        full, [&](const Face& f) { return mark[f.type][static_cast<std::size_t>(f.coset)] != 0; });
    if (!(a == b)) throw InvariantViolation("pointed complex constructions disagree");
    return a;
}

CosetComplex link(const CosetComplex& cx, const Face& f) {
    if (!cx.contains(f)) throw std::invalid_argument("link: face not in complex");
    return CosetComplex::filtered(cx, [&](const Face& g) {
        if (g.type & f.type) return false;
        // some common element gives a join present in cx
        for (int x : cx.elements(g))
            if (cx.face_of(x, f.type) == f && cx.contains(cx.face_of(x, g.type | f.type))) return true;
        return false;
    });
}

SimplicialComplex SimplicialComplex::from_facets(int vertex_count, std::vector<std::vector<int>> facets) {
    SimplicialComplex s;
    s.n_ = vertex_count;
    std::size_t top = 0;
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        top = std::max(top, f.size());
    }
    std::vector<std::vector<std::vector<int>>> byd(top + 1);
    for (const auto& f : facets) {
        std::size_t k = f.size();
        for (unsigned s2 = 0; s2 < (1u << k); ++s2) {
            std::vector<int> sub;
            for (std::size_t i = 0; i < k; ++i)
                if (s2 >> i & 1u) sub.push_back(f[i]);
            byd[sub.size()].push_back(std::move(sub));
        }
    }
    if (facets.empty()) byd.clear();
    for (auto& v : byd) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    s.faces_ = std::move(byd);
    return s;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> f;
    for (std::size_t d = 1; d < faces_.size(); ++d) f.push_back(faces_[d].size());
    return f;
}

int SimplicialComplex::index_of(const std::vector<int>& face) const {
    const auto& v = faces_[face.size()];
    auto it = std::lower_bound(v.begin(), v.end(), face);
    if (it == v.end() || *it != face) return -1;
    return static_cast<int>(it - v.begin());
}

SimplicialComplex to_simplicial(const CosetComplex& cx) {
    auto verts = cx.vertices();
    std::map<Face, int> id;
    for (std::size_t k = 0; k < verts.size(); ++k) id[verts[k]] = static_cast<int>(k);
    std::vector<std::vector<int>> facets;
    for (const auto& f : cx.facets()) {
        std::vector<int> vs;
        for (const auto& v : cx.face_vertices(f)) vs.push_back(id.at(v));
        facets.push_back(vs);
    }
    return SimplicialComplex::from_facets(static_cast<int>(verts.size()), std::move(facets));
}

namespace {

struct FacetIndex {
    std::vector<Face> facets;
    std::vector<int> reps;
    std::vector<std::vector<int>> neighbors;  // facets sharing a vertex
    Mask top = 0;
};

FacetIndex index_facets(const CosetComplex& cx) {
    FacetIndex ix;
    ix.facets = cx.facets();
    if (ix.facets.empty()) return ix;
    ix.top = ix.facets.front().type;
    for (const auto& f : ix.facets)
        if (f.type != ix.top) throw std::invalid_argument("shelling: complex is not pure of a single type");
    std::map<Face, std::vector<int>> by_vertex;
    for (std::size_t k = 0; k < ix.facets.size(); ++k) {
        ix.reps.push_back(cx.representative(ix.facets[k]));
        for (const auto& v : cx.face_vertices(ix.facets[k])) by_vertex[v].push_back(static_cast<int>(k));
    }
    ix.neighbors.resize(ix.facets.size());
    for (const auto& [v, fs] : by_vertex)
        for (int a : fs)
            for (int b : fs)
                if (a != b) ix.neighbors[static_cast<std::size_t>(a)].push_back(b);
    for (auto& n : ix.neighbors) {
        std::sort(n.begin(), n.end());
        n.erase(std::unique(n.begin(), n.end()), n.end());
    }
    return ix;
}

// Bitmask over subsets J of `top` with face_J(a) == face_J(b).
std::uint64_t shared_faces(const CosetComplex& cx, int a, int b, Mask top) {
    std::uint64_t s = 0;
    for (Mask J = top;; J = (J - 1) & top) {
        if (cx.partition(J).coset_of[static_cast<std::size_t>(a)] == cx.partition(J).coset_of[static_cast<std::size_t>(b)])
            s |= std::uint64_t{1} << J;
        if (J == 0) break;
    }
    return s;
}

// Maximal members of the down-set all have |top| - 1 elements.
bool pure_codim_one(std::uint64_t down, Mask top) {
    int want = popcount(top) - 1;
    for (Mask J = top;; J = (J - 1) & top) {
        if (down >> J & 1u) {
            bool maximal = true;
            for (int i = 0; i < 32 && maximal; ++i) {
                Mask b = Mask{1} << i;
                if ((top & b) && !(J & b) && (down >> (J | b) & 1u)) maximal = false;
            }
            if (maximal && popcount(J) != want) return false;
        }
        if (J == 0) break;
    }
    return true;
}

Mask restriction_of(std::uint64_t down, Mask top) {
    Mask r = 0;
    for (int i = 0; i < 32; ++i) {
        Mask b = Mask{1} << i;
        if ((top & b) && (down >> (top & ~b) & 1u)) r |= b;
    }
    return r;
}

}  // namespace

Shelling find_shelling(const CosetComplex& cx, std::size_t budget) {
    FacetIndex ix = index_facets(cx);
    std::size_t n = ix.facets.size();
    Shelling out;
    if (n == 0) return out;
    Mask top = ix.top;
    if (popcount(top) > 6) throw std::invalid_argument("shelling: rank too large");
    int codim1 = popcount(top) - 1;

    // breadth-first priority over the ridge graph, starting at facet 0
    std::vector<int> prio(n, -1), bfs;
    std::deque<int> queue{0};
    prio[0] = 0;
    while (!queue.empty()) {
        int a = queue.front();
        queue.pop_front();
        bfs.push_back(a);
        for (int b : ix.neighbors[static_cast<std::size_t>(a)]) {
            if (prio[static_cast<std::size_t>(b)] >= 0) continue;
            std::uint64_t s = shared_faces(cx, ix.reps[static_cast<std::size_t>(a)], ix.reps[static_cast<std::size_t>(b)], top);
            bool ridge = false;
            for (Mask J = top;; J = (J - 1) & top) {
                if ((s >> J & 1u) && popcount(J) == codim1) ridge = true;
                if (J == 0) break;
            }
            if (!ridge) continue;
            prio[static_cast<std::size_t>(b)] = static_cast<int>(bfs.size() + queue.size());
            queue.push_back(b);
        }
    }
    for (std::size_t k = 0; k < n; ++k)
        if (prio[k] < 0) bfs.push_back(static_cast<int>(k));

    std::vector<char> placed(n, 0);
    std::vector<int> order;
    std::vector<std::size_t> cursor{0};  // next bfs position to try at each depth
    std::vector<Mask> restr;
    std::size_t steps = 0;
    order.reserve(n);
    while (order.size() < n) {
        std::size_t depth = order.size();
        bool advanced = false;
        for (std::size_t& pos = cursor[depth]; pos < n; ++pos) {
            int c = bfs[pos];
            if (placed[static_cast<std::size_t>(c)]) continue;
            std::uint64_t down = 0;
            if (depth > 0) {
                for (int b : ix.neighbors[static_cast<std::size_t>(c)])
                    if (placed[static_cast<std::size_t>(b)])
                        down |= shared_faces(cx, ix.reps[static_cast<std::size_t>(c)], ix.reps[static_cast<std::size_t>(b)], top);
                down |= 1u;  // the empty face is shared with every earlier facet
                if (++steps > budget) throw BudgetExceeded("shelling search exceeded its step budget");
                if (!pure_codim_one(down, top)) continue;
            }
            placed[static_cast<std::size_t>(c)] = 1;
            order.push_back(c);
            restr.push_back(depth == 0 ? 0 : restriction_of(down, top));
            ++pos;
            cursor.push_back(0);
            advanced = true;
            break;
        }
        if (advanced) continue;
        // backtrack
        cursor.pop_back();
        if (order.empty()) throw InvariantViolation("shelling search exhausted without an order");
        placed[static_cast<std::size_t>(order.back())] = 0;
        order.pop_back();
        restr.pop_back();
    }
    for (int k : order) out.order.push_back(ix.facets[static_cast<std::size_t>(k)]);
    out.restriction = std::move(restr);
    return out;
}

bool verify_shelling(const CosetComplex& cx, const std::vector<Face>& order) {
    auto facets = cx.facets();
    std::vector<Face> sorted_order = order;
    std::sort(sorted_order.begin(), sorted_order.end());
    std::sort(facets.begin(), facets.end());
    if (sorted_order != facets) return false;
    for (std::size_t j = 1; j < order.size(); ++j) {
        Mask top = order[j].type;
        int d = popcount(top);
        // faces of F_j found in some earlier facet
        std::vector<Mask> covered;
        for (Mask J = top;; J = (J - 1) & top) {
            Face fj = cx.subface(order[j], J);
            for (std::size_t i = 0; i < j; ++i)
                if ((order[i].type & J) == J && cx.subface(order[i], J) == fj) {
                    covered.push_back(J);
                    break;
                }
            if (J == 0) break;
        }
        for (Mask J : covered) {
            bool maximal = true;
            for (Mask K : covered)
                if (K != J && (K & J) == J) maximal = false;
            if (maximal && popcount(J) != d - 1) return false;
        }
    }
    return true;
}

}  // namespace reflecta
