#include <catch_amalgamated.hpp>

#include <numeric>
#include <sstream>

#include "reflecta/group.hpp"

using namespace reflecta;

namespace {

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// star transpositions (i, n) on points 0..n
std::vector<std::vector<int>> star_generators(int n) {
    std::vector<std::vector<int>> gens;
    for (int i = 0; i < n; ++i) {
        std::vector<int> p(static_cast<std::size_t>(n + 1));
        std::iota(p.begin(), p.end(), 0);
        std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(n)]);
        gens.push_back(p);
    }
    return gens;
}

}  // namespace

TEST_CASE("symbols parse to the expected diagrams", "[presentations]") {
    GroupPresentation a2 = parse_symbol("A2");
    CHECK(a2.rank == 2);
    CHECK(a2.orders == std::vector<int>{2, 2});
    CHECK(a2.braid[0][1] == 3);

    GroupPresentation g4 = parse_symbol("3[3]3");
    CHECK(g4.rank == 2);
    CHECK(g4.orders == std::vector<int>{3, 3});
    CHECK(g4.braid[0][1] == 3);

    GroupPresentation i25 = parse_symbol("I2(5)");
    CHECK(i25.orders == std::vector<int>{2, 2});
    CHECK(i25.braid[1][0] == 5);

    GroupPresentation g313 = parse_symbol("G(3,1,3)");
    CHECK(g313.orders == std::vector<int>{3, 2, 2});
    CHECK(g313.braid[0][1] == 4);
    CHECK(g313.braid[1][2] == 3);
    CHECK(g313.braid[0][2] == 2);

    GroupPresentation d4 = parse_symbol("D4");
    CHECK(d4.braid[1][3] == 3);
    CHECK(d4.braid[2][3] == 2);
    CHECK_FALSE(d4.is_linear());

    CHECK(parse_symbol("G26").orders == std::vector<int>{2, 3, 3});
    CHECK(parse_symbol("B3").braid[0][1] == 4);
}

TEST_CASE("malformed and unsupported symbols are rejected", "[presentations]") {
    CHECK_THROWS_AS(parse_symbol("Q7"), ParseError);
    CHECK_THROWS_AS(parse_symbol("A"), ParseError);
    CHECK_THROWS_AS(parse_symbol("G32"), ParseError);
    CHECK_THROWS_AS(parse_symbol("3[1]3"), ParseError);
    CHECK_THROWS_AS(parse_symbol("A 2"), ParseError);
    CHECK_THROWS_AS(parse_symbol("I2(1)"), ParseError);
}

TEST_CASE("classical group orders", "[presentations]") {
    for (int n = 1; n <= 5; ++n)
        CHECK(GroupTable::enumerate(parse_symbol("A" + std::to_string(n))).order() ==
              static_cast<std::size_t>(factorial(n + 1)));
    for (int n = 2; n <= 4; ++n)
        CHECK(GroupTable::enumerate(parse_symbol("B" + std::to_string(n))).order() ==
              static_cast<std::size_t>((1L << n) * factorial(n)));
    for (int m = 2; m <= 12; ++m)
        CHECK(GroupTable::enumerate(parse_symbol("I2(" + std::to_string(m) + ")")).order() ==
              static_cast<std::size_t>(2 * m));
    CHECK(GroupTable::enumerate(parse_symbol("H3")).order() == 120);
    CHECK(GroupTable::enumerate(parse_symbol("D4")).order() == 192);
    CHECK(GroupTable::enumerate(parse_symbol("F4")).order() == 1152);
}

TEST_CASE("Shephard group orders", "[presentations]") {
    CHECK(GroupTable::enumerate(parse_symbol("G4")).order() == 24);
    CHECK(GroupTable::enumerate(parse_symbol("G5")).order() == 72);
    CHECK(GroupTable::enumerate(parse_symbol("G6")).order() == 48);
    CHECK(GroupTable::enumerate(parse_symbol("G8")).order() == 96);
    CHECK(GroupTable::enumerate(parse_symbol("G(3,1,2)")).order() == 18);
    CHECK(GroupTable::enumerate(parse_symbol("G(3,1,3)")).order() == 162);
    CHECK(GroupTable::enumerate(parse_symbol("G(4,1,2)")).order() == 32);
    CHECK(GroupTable::enumerate(parse_symbol("G25")).order() == 648);
    CHECK(GroupTable::enumerate(parse_symbol("G26")).order() == 1296);
}

TEST_CASE("large groups enumerate within the default budget", "[presentations][slow]") {
    CHECK(GroupTable::enumerate(parse_symbol("H4")).order() == 14400);
}

TEST_CASE("budget and collapse are reported", "[presentations]") {
    // affine G2 is infinite
    CHECK_THROWS_AS(GroupTable::enumerate(parse_symbol("2[6]2[3]2"), 2000), BudgetExceeded);
    CHECK_THROWS_AS(GroupTable::enumerate(parse_symbol("A6"), 1000), BudgetExceeded);
    // braid-related generators are conjugate, so orders 2 and 3 collapse
    CHECK_THROWS_AS(GroupTable::enumerate(parse_symbol("2[3]3")), PresentationCollapse);
}

TEST_CASE("table invariants", "[presentations]") {
    for (const char* sym : {"A2", "A3", "B3", "I2(5)", "G4", "G5", "G(3,1,2)", "H3"}) {
        GroupTable t = GroupTable::enumerate(parse_symbol(sym));
        INFO(sym);
        CHECK(t.verify_relators());
        for (int i = 0; i < t.rank(); ++i) {
            std::vector<bool> hit(t.order(), false);
            for (std::size_t g = 0; g < t.order(); ++g) hit[static_cast<std::size_t>(t.rmul(static_cast<int>(g), i))] = true;
            CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
            int x = 0;
            for (int k = 0; k < t.generator_order(i); ++k) x = t.rmul(x, i);
            CHECK(x == 0);
            CHECK(t.generator(i) == 1 + i);
        }
        bool assoc = true;
        for (std::size_t g = 0; g < t.order(); ++g) {
            CHECK(t.mul(static_cast<int>(g), t.inv(static_cast<int>(g))) == 0);
            for (std::size_t h = 0; h < t.order() && assoc; h += 3)
                for (std::size_t k = 0; k < t.order(); k += 5)
                    if (t.mul(t.mul(static_cast<int>(g), static_cast<int>(h)), static_cast<int>(k)) !=
                        t.mul(static_cast<int>(g), t.mul(static_cast<int>(h), static_cast<int>(k))))
                        assoc = false;
        }
        CHECK(assoc);
        for (std::size_t g = 0; g < t.order(); ++g) {
            CHECK(t.from_word(t.word(static_cast<int>(g))) == static_cast<int>(g));
            if (g > 0) CHECK(t.length(static_cast<int>(g)) >= t.length(static_cast<int>(g - 1)));
        }
    }
}

TEST_CASE("numbering is deterministic", "[presentations]") {
    GroupTable a = GroupTable::enumerate(parse_symbol("B3"));
    GroupTable b = GroupTable::enumerate(parse_symbol("B3"));
    for (std::size_t g = 0; g < a.order(); ++g) CHECK(a.word(static_cast<int>(g)) == b.word(static_cast<int>(g)));
    CHECK(a.word(3) == std::vector<int>{2});
    CHECK(a.word(4) == std::vector<int>{0, 1});
}

TEST_CASE("standard parabolics and cosets", "[presentations]") {
    GroupTable a2 = GroupTable::enumerate(parse_symbol("A2"));
    CHECK(standard_parabolic(a2, 0).order() == 1);
    CHECK(standard_parabolic(a2, 1).order() == 2);
    CHECK(cosets(a2, standard_parabolic(a2, 1)).count() == 3);
    CHECK(cosets(a2, whole_group(a2)).count() == 1);

    GroupTable b2 = GroupTable::enumerate(parse_symbol("B2"));
    CHECK(standard_parabolic(b2, 1).order() == 2);
    CHECK(standard_parabolic(b2, 3).order() == 8);

    GroupTable i25 = GroupTable::enumerate(parse_symbol("I2(5)"));
    CosetPartition cp = cosets(i25, standard_parabolic(i25, 1));
    CHECK(cp.count() == 5);
    CHECK(cp.cosets[0] == std::vector<int>{0, 1});

    for (const char* sym : {"A3", "G(3,1,3)", "G5"}) {
        GroupTable t = GroupTable::enumerate(parse_symbol(sym));
        for (Mask J = 0; J <= t.full_mask(); ++J) {
            Subgroup h = standard_parabolic(t, J);
            CosetPartition a = cosets(t, h);
            CosetPartition b = parabolic_cosets(t, J);
            CHECK(a.count() * h.order() == t.order());
            CHECK(a.cosets == b.cosets);
        }
    }
}

TEST_CASE("conjugacy classes", "[presentations]") {
    ConjugacyClasses a2 = conjugacy_classes(GroupTable::enumerate(parse_symbol("A2")));
    CHECK(a2.sizes == std::vector<std::size_t>{1, 3, 2});
    ConjugacyClasses i25 = conjugacy_classes(GroupTable::enumerate(parse_symbol("I2(5)")));
    CHECK(i25.sizes == std::vector<std::size_t>{1, 5, 2, 2});
    GroupTable g4 = GroupTable::enumerate(parse_symbol("G4"));
    ConjugacyClasses c4 = conjugacy_classes(g4);
    CHECK(c4.count() == 7);
    // brute-force orbits as an oracle
    std::vector<int> brute(g4.order(), -1);
    int next = 0;
    for (std::size_t x = 0; x < g4.order(); ++x) {
        if (brute[x] >= 0) continue;
        for (std::size_t g = 0; g < g4.order(); ++g) brute[static_cast<std::size_t>(g4.conj(static_cast<int>(g), static_cast<int>(x)))] = next;
        ++next;
    }
    CHECK(brute == c4.class_of);
    for (std::size_t s : c4.sizes) CHECK(24 % s == 0);

    // classes of a parabolic subgroup
    GroupTable a3 = GroupTable::enumerate(parse_symbol("A3"));
    ConjugacyClasses s3 = conjugacy_classes(a3, standard_parabolic(a3, 0b011));
    CHECK(s3.sizes == std::vector<std::size_t>{1, 3, 2});
}

TEST_CASE("intersection condition", "[presentations]") {
    IntersectionReport a3 = intersection_condition(GroupTable::enumerate(parse_symbol("A3")));
    CHECK(a3.holds.size() == 8);
    CHECK(a3.all());
    CHECK(intersection_condition(GroupTable::from_permutations(star_generators(3), "S4*")).all());
    CHECK(intersection_condition(GroupTable::from_permutations(star_generators(4), "S5*")).all());
    // Z/4 with a redundant generator violates it at J = empty
    GroupTable z4 = GroupTable::from_permutations({{1, 2, 3, 0}, {2, 3, 0, 1}}, "Z4");
    CHECK(z4.order() == 4);
    IntersectionReport r = intersection_condition(z4);
    CHECK_FALSE(r.holds[0]);
    CHECK(r.holds[3]);
}

TEST_CASE("permutation groups", "[presentations]") {
    GroupTable s5 = GroupTable::from_permutations(star_generators(4), "S5*");
    CHECK(s5.order() == 120);
    CHECK(s5.permutations().size() == 120);
    CHECK(s5.generator_order(0) == 2);
}

TEST_CASE("cache blobs round trip", "[presentations]") {
    GroupTable t = GroupTable::enumerate(parse_symbol("G(3,1,2)"));
    std::stringstream ss;
    t.save(ss);
    GroupTable u = GroupTable::load(ss);
    CHECK(u.order() == t.order());
    CHECK(u.label() == "G(3,1,2)");
    for (std::size_t g = 0; g < t.order(); ++g)
        for (int i = 0; i < t.rank(); ++i) CHECK(u.rmul(static_cast<int>(g), i) == t.rmul(static_cast<int>(g), i));
    std::stringstream bad("garbage");
    CHECK_THROWS(GroupTable::load(bad));
}
