#include <catch_amalgamated.hpp>

#include "reflecta/homology.hpp"

using namespace reflecta;

namespace {

TablePtr table(const std::string& sym) {
    return std::make_shared<const GroupTable>(GroupTable::enumerate(parse_symbol(sym)));
}

std::vector<mpz_class> z(std::initializer_list<long> v) {
    std::vector<mpz_class> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

long euler_from_f(const std::vector<std::size_t>& f) {
    long e = -1;  // reduced
    for (std::size_t d = 0; d < f.size(); ++d) e += (d % 2 == 0 ? 1 : -1) * static_cast<long>(f[d]);
    return e;
}

long euler_from_h(const std::vector<HomologyGroup>& h) {
    long e = 0;
    for (std::size_t k = 0; k < h.size(); ++k) e += (k % 2 == 1 ? 1 : -1) * static_cast<long>(h[k].betti);
    return e;
}

}  // namespace

TEST_CASE("Smith normal form", "[homology]") {
    CHECK(smith_normal_form({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == z({1, 1, 1}));
    CHECK(smith_normal_form({{2, 0}, {0, 3}}) == z({1, 6}));
    CHECK(smith_normal_form({{2, 4}, {6, 8}}) == z({2, 4}));
    CHECK(smith_normal_form({{0, 0}, {0, 0}}).empty());
    SparseIntMatrix m;
    m.rows = 2;
    m.cols = 2;
    m.columns = {{{0, 2}, {1, 6}}, {{0, 4}, {1, 8}}};
    CHECK(smith_normal_form(m) == z({2, 4}));
}

TEST_CASE("chain complexes", "[homology]") {
    SimplicialComplex tri = SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}, {0, 2}});
    ChainComplex cc = chain_complex(tri);
    CHECK(cc.rank(-1) == 1);
    CHECK(cc.rank(0) == 3);
    CHECK(cc.rank(1) == 3);
    CHECK(boundary_squares_to_zero(cc));
    CHECK(betti_numbers(reduced_homology(cc)) == std::vector<std::size_t>{0, 1});

    CosetComplex hex = build_complex(table("A2"));
    ChainComplex hc = chain_complex(hex);
    CHECK(smith_normal_form(hc.boundary[2]).size() == 5);
    CosetComplex a3 = build_complex(table("A3"));
    ChainComplex ac = chain_complex(a3);
    CHECK(ac.rank(0) == 14);
    CHECK(ac.rank(1) == 36);
    CHECK(ac.rank(2) == 24);
    CHECK(boundary_squares_to_zero(ac));
}

TEST_CASE("reduced homology of coset complexes", "[homology]") {
    for (const char* sym : {"A2", "A3", "B3", "I2(5)"}) {
        auto h = reduced_homology_of(build_complex(table(sym)));
        auto b = betti_numbers(h);
        CHECK(b.back() == 1);
        for (std::size_t k = 0; k + 1 < b.size(); ++k) CHECK(b[k] == 0);
    }
    auto g4 = reduced_homology_of(build_complex(table("G4")));
    CHECK(betti_numbers(g4) == std::vector<std::size_t>{0, 9});
    // torsion-free Euler characteristic check
    for (const char* sym : {"G4", "G(3,1,2)", "B3"}) {
        CosetComplex cx = build_complex(table(sym));
        auto h = reduced_homology_of(cx);
        CHECK(euler_from_f(cx.f_vector()) == euler_from_h(h));
        for (const auto& g : h) CHECK(g.torsion.empty());
    }
}

TEST_CASE("pointed complexes with overlapping U and T are acyclic", "[homology]") {
    CosetComplex cx = build_complex(table("B3"));
    for (Mask U = 1; U <= 7; ++U)
        for (Mask T = 1; T <= 7; ++T) {
            if (!(U & T)) continue;
            auto h = reduced_homology_of(pointed(cx, U, T));
            for (const auto& g : h) CHECK(g.is_zero());
        }
}

TEST_CASE("empty and point complexes", "[homology]") {
    SimplicialComplex empty_face = SimplicialComplex::from_facets(0, {{}});
    CHECK(reduced_homology_of(empty_face)[0].betti == 1);
    SimplicialComplex point = SimplicialComplex::from_facets(1, {{0}});
    for (const auto& g : reduced_homology_of(point)) CHECK(g.is_zero());
}

TEST_CASE("action on top cycles", "[homology]") {
    auto a2 = table("A2");
    CosetComplex hex = build_complex(a2);
    ChainComplex cc = chain_complex(hex);
    TopCycleSpace z1(cc);
    REQUIRE(z1.dim() == 1);
    for (std::size_t g = 0; g < a2->order(); ++g) {
        mpq_class tr = z1.trace(coset_action(hex, static_cast<int>(g)));
        // sign character: +1 on rotations, -1 on reflections
        CHECK(tr == (a2->length(static_cast<int>(g)) % 2 == 0 ? 1 : -1));
    }
    // a single facet closure has no top cycles
    CosetComplex facet = CosetComplex::filtered(hex, [&](const Face& f) { return hex.leq(f, Face{3, 0}); });
    CHECK(TopCycleSpace(chain_complex(facet)).dim() == 0);
    // matrices multiply like the group on a 2-sphere
    auto a3 = table("A3");
    CosetComplex sph = build_complex(a3);
    TopCycleSpace z2(chain_complex(sph));
    REQUIRE(z2.dim() == 1);
    for (std::size_t g = 0; g < a3->order(); g += 5)
        for (std::size_t h = 0; h < a3->order(); h += 3) {
            QMatrix ag = z2.action(coset_action(sph, static_cast<int>(g)));
            QMatrix ah = z2.action(coset_action(sph, static_cast<int>(h)));
            CHECK(ag * ah == z2.action(coset_action(sph, a3->mul(static_cast<int>(g), static_cast<int>(h)))));
        }
}
