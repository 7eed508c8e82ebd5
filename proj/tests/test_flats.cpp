#include <catch_amalgamated.hpp>

#include <set>

#include "reflecta/flats.hpp"

using namespace reflecta;

namespace {

TablePtr table(const std::string& sym) {
    return std::make_shared<const GroupTable>(GroupTable::enumerate(parse_symbol(sym)));
}

TablePtr star_table(int n) {
    std::vector<std::vector<int>> gens;
    for (int i = 0; i < n; ++i) {
        std::vector<int> p(static_cast<std::size_t>(n + 1));
        for (int k = 0; k <= n; ++k) p[static_cast<std::size_t>(k)] = k;
        std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(n)]);
        gens.push_back(p);
    }
    return std::make_shared<const GroupTable>(GroupTable::from_permutations(gens, "S*"));
}

Poset chain(int n) {
    Poset p;
    p.le.assign(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) p.le[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    return p;
}

Poset boolean(int n) {
    Poset p;
    std::size_t m = std::size_t{1} << n;
    p.le.assign(m, std::vector<char>(m, 0));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) p.le[a][b] = (a & b) == a;
    return p;
}

std::vector<std::size_t> reduced_betti(const std::vector<HomologyGroup>& h, std::size_t len) {
    std::vector<std::size_t> b;
    for (const auto& g : h) b.push_back(g.betti);
    b.resize(len, 0);
    return b;
}

}  // namespace

TEST_CASE("posets, order complexes and Mobius", "[flats]") {
    Poset anti;
    anti.le = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(order_complex(anti).f_vector() == std::vector<std::size_t>{3});
    CHECK(order_complex(chain(3)).f_vector() == std::vector<std::size_t>{3, 3, 1});
    CHECK(mobius(chain(2), 0, 1) == -1);
    CHECK(mobius(boolean(3), 0, 7) == -1);
    CHECK(boolean(3).is_partial_order());
    CHECK(chain(4).hasse_edges().size() == 3);
    CHECK(order_complex(Poset{}).dim() == -1);
}

TEST_CASE("supports", "[flats]") {
    auto a3 = table("A3");
    CosetComplex cx = build_complex(a3);
    CHECK(support(cx, Face{7, 0}).order() == 1);
    CHECK(support(cx, Face{1, 0}) == standard_parabolic(*a3, 6));
    CHECK(support(cx, Face{0, 0}).order() == 24);
    FlatIndex ix(cx);
    CHECK(ix.size() == 15);  // matches the intersection lattice of A3
    CHECK(ix.flat(ix.top()).order() == 24);
    // equivariance and order reversal
    for (const Face& f : cx.faces())
        for (std::size_t g = 0; g < a3->order(); g += 5) {
            Face gf = cx.act(static_cast<int>(g), f);
            CHECK(ix.flat_of(gf) == ix.conjugate(static_cast<int>(g), ix.flat_of(f)));
        }
    for (const Face& a : cx.faces())
        for (const Face& b : cx.faces())
            if (cx.leq(a, b)) CHECK(ix.leq(ix.flat_of(b), ix.flat_of(a)));
}

TEST_CASE("flats posets", "[flats]") {
    CosetComplex a2 = build_complex(table("A2"));
    FlatIndex ia2(a2);
    FlatsPoset p = flats_poset(ia2, star(a2, 0b01));
    CHECK(p.flats.size() == 5);  // top, three lines, V
    CHECK(p.top >= 0);
    CHECK(p.order.is_partial_order());

    CosetComplex i25 = build_complex(table("I2(5)"));
    FlatIndex ii(i25);
    CHECK(flats_poset(ii, i25).flats.size() == 7);

    // vertex supports of star systems
    for (int n : {3, 4}) {
        CosetComplex sx = build_complex(star_table(n));
        FlatIndex is(sx);
        std::set<int> lines;
        for (const Face& v : sx.vertices()) lines.insert(is.flat_of(v));
        CHECK(lines.size() == static_cast<std::size_t>(n + 1));
    }
}

TEST_CASE("fibers and cone points", "[flats]") {
    auto a3 = table("A3");
    CosetComplex cx = build_complex(a3);
    FlatIndex ix(cx);
    CosetComplex st = star(cx, 0b001);
    CHECK(quillen_fiber(ix, st, ix.flat_of(Face{7, 0})) == st);
    int line = ix.flat_of(Face{0b001, 0});
    CosetComplex fib = quillen_fiber(ix, st, line);
    REQUIRE(cone_point(fib));
    CHECK(*cone_point(fib) == Face{0b001, 0});
    CHECK_THROWS(quillen_fiber(ix, st, ix.top()));

    CosetComplex hex = build_complex(table("A2"));
    CHECK_FALSE(cone_point(hex));
    CHECK(*cone_point(star(hex, 0b01)) == Face{0b01, 0});
    CosetComplex facet = CosetComplex::filtered(hex, [&](const Face& f) { return hex.leq(f, Face{3, 0}); });
    CHECK(*cone_point(facet) == Face{0b01, 0});
}

TEST_CASE("locally conical sweeps", "[flats]") {
    for (const char* sym : {"A2", "A3", "B3", "G4", "G(3,1,2)"}) {
        INFO(sym);
        FlatIndex ix(build_complex(table(sym)));
        CHECK(locally_conical_check(ix).pass);
        CHECK(locally_conical_check(ix, true).pass);
    }
    FlatIndex s5(build_complex(star_table(4)));
    ConicalReport r = locally_conical_check(s5);
    CHECK_FALSE(r.pass);
    REQUIRE_FALSE(r.witnesses.empty());
    CHECK_FALSE(locally_conical_check(FlatIndex(build_complex(star_table(3)))).pass);
}

TEST_CASE("Galois correspondence", "[flats]") {
    for (const char* sym : {"A2", "I2(5)", "G4", "A3", "G(3,1,2)"}) {
        INFO(sym);
        GroupPresentation p = parse_symbol(sym);
        auto t = std::make_shared<const GroupTable>(GroupTable::enumerate(p));
        LinearGroup lg(t, catalog_rep(p));
        CHECK(galois_check(lg, FlatIndex(build_complex(t))).pass);
        // standard parabolics are pointwise stabilizers of their fixed spaces
        for (Mask J = 0; J <= t->full_mask(); ++J) {
            Subgroup w = standard_parabolic(*t, J);
            CHECK(pointwise_stabilizer(lg, lg.fixed_subspace(w.members())) == w);
        }
    }
}

TEST_CASE("pointed complexes and flats have equal homology", "[flats]") {
    for (const char* sym : {"A3", "G4"}) {
        INFO(sym);
        CosetComplex cx = build_complex(table(sym));
        FlatIndex ix(cx);
        for (Mask U = 1; U <= cx.table().full_mask(); ++U)
            for (Mask T = 0; T <= cx.table().full_mask(); ++T) {
                CosetComplex p = pointed(cx, U, T);
                Poset q = flats_poset(ix, p).without_top().first;
                auto a = reduced_betti(reduced_homology_of(p), 5);
                auto b = reduced_betti(reduced_homology_of(order_complex(q)), 5);
                CHECK(a == b);
            }
    }
}

TEST_CASE("star system counterexample", "[flats]") {
    CosetComplex cx = build_complex(star_table(4));
    FlatIndex ix(cx);
    CosetComplex p = pointed(cx, 0b1000, 0b0111);
    auto a = reduced_betti(reduced_homology_of(p), 4);
    auto b = reduced_betti(reduced_homology_of(order_complex(flats_poset(ix, p).without_top().first)), 4);
    CHECK(a == std::vector<std::size_t>{0, 0, 2, 1});  // torus
    CHECK(b == std::vector<std::size_t>{0, 0, 0, 1});  // sphere
}
