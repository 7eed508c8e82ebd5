#include "reflecta/pointed_a.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "reflecta/characters.hpp"

namespace reflecta {

namespace {

Block full_block(int n) { return n >= 32 ? ~Block{0} : (Block{1} << n) - 1; }

std::string block_to_string(std::uint64_t b) {
    if (b == 0) return "_";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 64; ++i)
        if ((b >> i) & 1u) {
            if (!first) os << ' ';
            first = false;
            os << i + 1;
        }
    return os.str();
}

template <class B>
B permute_block(const std::vector<int>& perm, B b) {
    B out = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        if ((b >> i) & 1u) out |= B{1} << perm[i];
    return out;
}

// Images of 0..m-1 under each element of S_m given by the standard
// presentation, composed along the stored words.
std::vector<std::vector<int>> element_permutations(const GroupTable& t, int m) {
    std::vector<std::vector<int>> perms(t.order());
    for (std::size_t g = 0; g < t.order(); ++g) {
        std::vector<int> p(static_cast<std::size_t>(m));
        std::iota(p.begin(), p.end(), 0);
        const auto& w = t.word(static_cast<int>(g));
        for (std::size_t k = w.size(); k-- > 0;) {
            int i = w[k];
            for (int& x : p) {
                if (x == i)
                    x = i + 1;
                else if (x == i + 1)
                    x = i;
            }
        }
        perms[g] = p;
    }
    return perms;
}

TablePtr symmetric_table(int points) {
    return std::make_shared<const GroupTable>(
        GroupTable::enumerate(parse_symbol("A" + std::to_string(points - 1))));
}

void enumerate_ordered(Block remaining, const Composition& c, std::size_t part, Block prefix,
                       std::vector<Block>& chain, std::vector<std::vector<Block>>& out) {
    if (part + 1 == c.size()) {
        out.push_back(chain);
        return;
    }
    int want = c[part];
    // Subsets of `remaining` with `want` elements.
    std::vector<int> elems;
    for (int i = 0; i < 32; ++i)
        if ((remaining >> i) & 1u) elems.push_back(i);
    std::vector<char> pick(elems.size(), 0);
    std::fill(pick.begin(), pick.begin() + want, 1);
    do {
        Block b = 0;
        for (std::size_t k = 0; k < elems.size(); ++k)
            if (pick[k]) b |= Block{1} << elems[k];
        chain.push_back(prefix | b);
        enumerate_ordered(remaining & ~b, c, part + 1, prefix | b, chain, out);
        chain.pop_back();
    } while (std::prev_permutation(pick.begin(), pick.end()));
}

}  // namespace

bool valid_composition(int n, const Composition& c) {
    if (n < 1 || c.empty()) return false;
    int sum = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 0 || (c[i] == 0 && i + 1 < c.size())) return false;
        sum += c[i];
    }
    return sum == n;
}

std::vector<Composition> pointed_compositions(int n) {
    std::vector<Composition> out;
    for (unsigned cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
        Composition c;
        int run = 1;
        for (int i = 1; i < n; ++i) {
            if ((cuts >> (i - 1)) & 1u) {
                c.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        c.push_back(run);
        out.push_back(c);
        c.push_back(0);
        out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Mask descent_mask(const Composition& c) {
    Mask m = 0;
    int s = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        s += c[i];
        m |= Mask{1} << (s - 1);
    }
    return m;
}

std::string composition_to_string(const Composition& c) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ')';
    return os.str();
}

Composition PointedSetComposition::type() const {
    Composition c;
    for (Block b : blocks) c.push_back(popcount(b));
    return c;
}

std::vector<Block> PointedSetComposition::prefixes() const {
    std::vector<Block> p;
    Block acc = 0;
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
        acc |= blocks[i];
        p.push_back(acc);
    }
    return p;
}

bool PointedSetComposition::coarsens(const PointedSetComposition& o) const {
    auto mine = prefixes();
    auto theirs = o.prefixes();
    return std::includes(theirs.begin(), theirs.end(), mine.begin(), mine.end(),
                         [](Block a, Block b) { return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b; });
}

std::string PointedSetComposition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < blocks.size(); ++i) s += (i ? " - " : "") + block_to_string(blocks[i]);
    return s;
}

std::vector<std::uint64_t> PointedPartition::unpointed(int n) const {
    std::vector<std::uint64_t> out(blocks.begin(), blocks.end());
    out.push_back(std::uint64_t{pointed} | (std::uint64_t{1} << n));
    std::sort(out.begin(), out.end());
    return out;
}

bool PointedPartition::refines(const PointedPartition& o, int n) const {
    auto mine = unpointed(n);
    auto theirs = o.unpointed(n);
    for (auto b : mine) {
        bool inside = false;
        for (auto c : theirs) inside = inside || (b & ~c) == 0;
        if (!inside) return false;
    }
    return true;
}

std::string PointedPartition::to_string() const {
    std::string s;
    for (Block b : blocks) s += block_to_string(b) + " | ";
    return s + block_to_string(pointed);
}

PointedPartition support(const PointedSetComposition& f) {
    PointedPartition p;
    p.blocks.assign(f.blocks.begin(), f.blocks.end() - 1);
    std::sort(p.blocks.begin(), p.blocks.end());
    p.pointed = f.blocks.back();
    return p;
}

PointedSetComposition permute(const std::vector<int>& perm, const PointedSetComposition& f) {
    PointedSetComposition g;
    for (Block b : f.blocks) g.blocks.push_back(permute_block(perm, b));
    return g;
}

PointedPartition permute(const std::vector<int>& perm, const PointedPartition& p) {
    PointedPartition q;
    for (Block b : p.blocks) q.blocks.push_back(permute_block(perm, b));
    std::sort(q.blocks.begin(), q.blocks.end());
    q.pointed = permute_block(perm, p.pointed);
    return q;
}

PointedSetComposition DeltaC::face(const std::vector<int>& simplex) const {
    std::vector<Block> pre;
    for (int v : simplex) pre.push_back(vertices[static_cast<std::size_t>(v)]);
    std::sort(pre.begin(), pre.end(), [](Block a, Block b) { return popcount(a) < popcount(b); });
    PointedSetComposition f;
    Block prev = 0;
    for (Block p : pre) {
        f.blocks.push_back(p & ~prev);
        prev = p;
    }
    f.blocks.push_back(full_block(n) & ~prev);
    return f;
}

std::vector<PointedSetComposition> DeltaC::faces() const {
    std::vector<PointedSetComposition> out;
    for (int d = -1; d <= complex.dim(); ++d)
        for (const auto& s : complex.faces(d)) out.push_back(face(s));
    return out;
}

DeltaC build_delta_c(int n, const Composition& c) {
    if (!valid_composition(n, c)) throw std::invalid_argument("invalid pointed composition " + composition_to_string(c));
    if (n > 20) throw std::invalid_argument("pointed compositions limited to n <= 20");
    DeltaC dc;
    dc.n = n;
    dc.c = c;
    std::vector<std::vector<Block>> chains;
    std::vector<Block> chain;
    enumerate_ordered(full_block(n), c, 0, 0, chain, chains);
    std::map<Block, int> id;
    for (const auto& ch : chains)
        for (Block p : ch) id.emplace(p, 0);
    for (auto& [b, v] : id) {
        v = static_cast<int>(dc.vertices.size());
        dc.vertices.push_back(b);
    }
    std::vector<std::vector<int>> facets;
    for (const auto& ch : chains) {
        std::vector<int> f;
        for (Block p : ch) f.push_back(id.at(p));
        std::sort(f.begin(), f.end());
        facets.push_back(f);
    }
    dc.complex = SimplicialComplex::from_facets(static_cast<int>(dc.vertices.size()), facets);
    return dc;
}

SimplicialComplex PiC::proper_part() const {
    std::vector<int> keep;
    for (int i = 0; i < static_cast<int>(elements.size()); ++i)
        if (i != top) keep.push_back(i);
    return order_complex(order.induced(keep));
}

PiC build_pi_c(int n, const Composition& c) {
    DeltaC dc = build_delta_c(n, c);
    std::set<PointedPartition> seen;
    for (const auto& f : dc.faces()) seen.insert(support(f));
    PiC pc;
    pc.n = n;
    pc.c = c;
    pc.elements.assign(seen.begin(), seen.end());
    std::size_t m = pc.elements.size();
    pc.order.le.assign(m, std::vector<char>(m, 0));
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) pc.order.le[a][b] = pc.elements[a].refines(pc.elements[b], n);
        if (pc.elements[a].blocks.empty()) pc.top = static_cast<int>(a);
    }
    return pc;
}

PartitionLattice divisible_partition_lattice(int m, int d) {
    if (m < 1 || d < 1 || m > 16) throw std::invalid_argument("partition lattice size out of range");
    PartitionLattice pl;
    if (d > 1) pl.partitions.emplace_back();  // bottom
    // Restricted growth strings.
    std::vector<int> a(static_cast<std::size_t>(m), 0);
    std::function<void(int, int)> rec = [&](int i, int maxb) {
        if (i == m) {
            std::vector<std::uint64_t> blocks(static_cast<std::size_t>(maxb + 1), 0);
            for (int k = 0; k < m; ++k) blocks[static_cast<std::size_t>(a[static_cast<std::size_t>(k)])] |= std::uint64_t{1} << k;
            for (auto b : blocks)
                if (__builtin_popcountll(b) % d != 0) return;
            std::sort(blocks.begin(), blocks.end());
            pl.partitions.push_back(blocks);
            return;
        }
        for (int b = 0; b <= maxb + 1; ++b) {
            a[static_cast<std::size_t>(i)] = b;
            rec(i + 1, std::max(maxb, b));
        }
    };
    a[0] = 0;
    rec(1, 0);
    std::size_t k = pl.partitions.size();
    pl.order.le.assign(k, std::vector<char>(k, 0));
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y) {
            bool le = true;
            if (d > 1 && x == 0) {
                le = true;
            } else if (d > 1 && y == 0) {
                le = x == 0;
            } else {
                for (auto b : pl.partitions[x]) {
                    bool inside = false;
                    for (auto c : pl.partitions[y]) inside = inside || (b & ~c) == 0;
                    le = le && inside;
                }
            }
            pl.order.le[x][y] = le;
        }
    for (std::size_t x = 0; x < k; ++x) {
        if (pl.partitions[x].size() == 1) pl.top = static_cast<int>(x);
        if (d == 1 && pl.partitions[x].size() == static_cast<std::size_t>(m)) pl.bottom = static_cast<int>(x);
    }
    if (d > 1) pl.bottom = 0;
    return pl;
}

long ribbon_specht_dim(const Composition& c) {
    int n = std::accumulate(c.begin(), c.end(), 0);
    if (!valid_composition(n, c)) throw std::invalid_argument("invalid pointed composition " + composition_to_string(c));
    if (c.back() == 0) return 0;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    long count = 0;
    do {
        Composition runs;
        int run = 1;
        for (int i = 1; i < n; ++i) {
            if (p[static_cast<std::size_t>(i - 1)] > p[static_cast<std::size_t>(i)]) {
                runs.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        runs.push_back(run);
        if (runs == c) ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

ConversionReport conversion_check(int n, const Composition& c) {
    ConversionReport rep;
    auto fail = [&](const std::string& why) {
        rep.pass = false;
        if (rep.witnesses.size() < 20) rep.witnesses.push_back(why);
    };
    DeltaC dc = build_delta_c(n, c);
    PiC pc = build_pi_c(n, c);

    TablePtr table = symmetric_table(n + 1);
    const GroupTable& t = *table;
    auto perms = element_permutations(t, n + 1);
    CosetComplex full = build_complex(table);
    Mask U = Mask{1} << (n - 1);
    CosetComplex cx = pointed(full, U, descent_mask(c));

    // Coset face -> composition of {1..n+1} -> pointed composition of {1..n}.
    auto convert = [&](const Face& f) -> std::optional<PointedSetComposition> {
        const auto& perm = perms[static_cast<std::size_t>(cx.representative(f))];
        std::vector<std::uint64_t> blocks;
        std::uint64_t cur = 0;
        for (int pos = 0; pos <= n; ++pos) {
            cur |= std::uint64_t{1} << pos;
            if (pos == n || ((f.type >> pos) & 1u)) {
                blocks.push_back(permute_block(perm, cur));
                cur = 0;
            }
        }
        std::uint64_t last = std::uint64_t{1} << n;
        if (!(blocks.back() & last)) return std::nullopt;
        blocks.back() &= ~last;
        PointedSetComposition pc2;
        for (auto b : blocks) pc2.blocks.push_back(static_cast<Block>(b));
        return pc2;
    };

    std::vector<Face> faces;
    for (const auto& f : cx.faces())
        if (f.type != 0) faces.push_back(f);
    std::vector<PointedSetComposition> image;
    for (const auto& f : faces) {
        auto p = convert(f);
        if (!p) {
            fail("face of type " + std::to_string(f.type) + " misses the last point in its last block");
            return rep;
        }
        image.push_back(*p);
    }
    rep.faces_checked = faces.size();

    std::set<PointedSetComposition> native;
    for (const auto& f : dc.faces())
        if (f.blocks.size() > 1) native.insert(f);
    std::set<PointedSetComposition> imgset(image.begin(), image.end());
    if (imgset.size() != image.size()) fail("conversion is not injective");
    if (imgset != native) fail("converted faces differ from the pointed compositions");

    for (std::size_t a = 0; a < faces.size(); ++a)
        for (std::size_t b = 0; b < faces.size(); ++b)
            if (cx.leq(faces[a], faces[b]) != image[a].coarsens(image[b]))
                fail("incidence differs at " + image[a].to_string() + " and " + image[b].to_string());

    // Equivariance under S_n, generated by r_1..r_{n-1}.
    for (int i = 0; i + 1 < n; ++i) {
        int g = t.generator(i);
        std::vector<int> sigma(perms[static_cast<std::size_t>(g)].begin(), perms[static_cast<std::size_t>(g)].end() - 1);
        for (std::size_t a = 0; a < faces.size(); ++a) {
            auto moved = convert(cx.act(g, faces[a]));
            if (!moved || !(*moved == permute(sigma, image[a])))
                fail("action of r_" + std::to_string(i + 1) + " differs at " + image[a].to_string());
        }
    }

    // Supports: flat subgroup -> orbit partition -> pointed partition.
    FlatIndex ix(full);
    auto orbit_partition = [&](int x) {
        const Subgroup& h = ix.flat(x);
        std::vector<int> parent(static_cast<std::size_t>(n + 1));
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int v) {
            return parent[static_cast<std::size_t>(v)] == v ? v : parent[static_cast<std::size_t>(v)] = find(parent[static_cast<std::size_t>(v)]);
        };
        for (int g : h.members()) {
            const auto& p = perms[static_cast<std::size_t>(g)];
            for (int v = 0; v <= n; ++v) parent[static_cast<std::size_t>(find(v))] = find(p[static_cast<std::size_t>(v)]);
        }
        std::map<int, std::uint64_t> blocks;
        for (int v = 0; v <= n; ++v) blocks[find(v)] |= std::uint64_t{1} << v;
        PointedPartition pp;
        for (const auto& [root, b] : blocks) {
            if ((b >> n) & 1u)
                pp.pointed = static_cast<Block>(b & ~(std::uint64_t{1} << n));
            else
                pp.blocks.push_back(static_cast<Block>(b));
        }
        std::sort(pp.blocks.begin(), pp.blocks.end());
        return pp;
    };

    std::map<int, PointedPartition> psi;
    for (std::size_t a = 0; a < faces.size(); ++a) {
        int x = ix.flat_of(faces[a]);
        auto it = psi.find(x);
        if (it == psi.end()) it = psi.emplace(x, orbit_partition(x)).first;
        if (!(it->second == support(image[a])))
            fail("supports differ at " + image[a].to_string() + ": " + it->second.to_string());
    }
    psi.emplace(ix.top(), orbit_partition(ix.top()));
    std::set<PointedPartition> psi_image;
    for (const auto& [x, p] : psi) psi_image.insert(p);
    if (psi_image.size() != psi.size()) fail("flat conversion is not injective");
    if (psi_image != std::set<PointedPartition>(pc.elements.begin(), pc.elements.end()))
        fail("converted flats differ from the pointed partitions");
    for (const auto& [x, p] : psi)
        for (const auto& [y, q] : psi)
            if (ix.leq(x, y) != p.refines(q, n)) fail("flat order differs at " + p.to_string() + " and " + q.to_string());
    for (int i = 0; i + 1 < n; ++i) {
        int g = t.generator(i);
        std::vector<int> sigma(perms[static_cast<std::size_t>(g)].begin(), perms[static_cast<std::size_t>(g)].end() - 1);
        for (const auto& [x, p] : psi) {
            auto it = psi.find(ix.conjugate(g, x));
            if (it == psi.end() || !(it->second == permute(sigma, p)))
                fail("flat action of r_" + std::to_string(i + 1) + " differs at " + p.to_string());
        }
    }
    rep.flats_checked = psi.size();
    return rep;
}

EJReport verify_ej(int n, const Composition& c) {
    EJReport rep;
    auto fail = [&](const std::string& why) {
        rep.pass = false;
        rep.witnesses.push_back(why);
    };
    DeltaC dc = build_delta_c(n, c);
    PiC pc = build_pi_c(n, c);
    SimplicialComplex pi = pc.proper_part();
    ChainComplex dcc = chain_complex(dc.complex);
    ChainComplex pcc = chain_complex(pi);
    rep.delta_homology = reduced_homology(dcc);
    rep.pi_homology = reduced_homology(pcc);
    rep.ribbon_dim = ribbon_specht_dim(c);

    auto padded = [](std::vector<HomologyGroup> h, std::size_t len) {
        h.resize(len);
        return h;
    };
    std::size_t len = std::max(rep.delta_homology.size(), rep.pi_homology.size());
    if (padded(rep.delta_homology, len) != padded(rep.pi_homology, len))
        fail("homology of the complex differs from the poset proper part");
    if (!top_concentrated(rep.delta_homology)) fail("homology is not concentrated in the top degree");
    std::size_t top_betti = rep.delta_homology.back().betti;
    if (static_cast<long>(top_betti) != rep.ribbon_dim)
        fail("top Betti number " + std::to_string(top_betti) + " differs from the ribbon count " +
             std::to_string(rep.ribbon_dim));
    if (n > 5 || !rep.pass) return rep;

    // S_n characters on both top homologies against the ribbon character.
    TopCycleSpace dtop(dcc), ptop(pcc);
    std::map<Block, int> vid;
    for (std::size_t v = 0; v < dc.vertices.size(); ++v) vid[dc.vertices[v]] = static_cast<int>(v);
    std::vector<int> keep;
    for (int i = 0; i < static_cast<int>(pc.elements.size()); ++i)
        if (i != pc.top) keep.push_back(i);
    std::map<PointedPartition, int> pid;
    for (std::size_t k = 0; k < keep.size(); ++k) pid[pc.elements[static_cast<std::size_t>(keep[k])]] = static_cast<int>(k);

    std::vector<std::vector<int>> reps;
    std::optional<ClassFunction> ribbon;
    if (n == 1) {
        reps.push_back({0});
    } else {
        TablePtr sn = symmetric_table(n);
        auto perms = element_permutations(*sn, n);
        ContextPtr ctx = whole_context(sn);
        if (c.back() != 0) ribbon = ribbon_character(ctx, 0, descent_mask(c));
        for (int g : ctx->classes.reps) reps.push_back(perms[static_cast<std::size_t>(g)]);
    }
    for (std::size_t k = 0; k < reps.size(); ++k) {
        const auto& sigma = reps[k];
        std::vector<int> dimg(dc.vertices.size()), pimg(keep.size());
        for (std::size_t v = 0; v < dc.vertices.size(); ++v) dimg[v] = vid.at(permute_block(sigma, dc.vertices[v]));
        for (std::size_t v = 0; v < keep.size(); ++v)
            pimg[v] = pid.at(permute(sigma, pc.elements[static_cast<std::size_t>(keep[v])]));
        mpq_class a = dtop.trace(simplicial_action(dc.complex, dimg));
        mpq_class b = ptop.trace(simplicial_action(pi, pimg));
        mpq_class want = ribbon ? ribbon->values()[k].rational() : mpq_class(c.back() == 0 ? 0 : 1);
        if (a != b || a != want) {
            std::ostringstream os;
            os << "class " << k << ": complex " << a << ", poset " << b << ", ribbon " << want;
            fail(os.str());
        }
    }
    rep.characters_checked = true;
    return rep;
}

}  // namespace reflecta
