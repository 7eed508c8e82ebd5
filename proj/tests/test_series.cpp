#include <catch_amalgamated.hpp>

#include <numeric>

#include "reflecta/series.hpp"

using namespace reflecta;

namespace {

LinearGroup catalog_group(const std::string& sym) {
    auto t = std::make_shared<const GroupTable>(GroupTable::enumerate(parse_symbol(sym)));
    return LinearGroup(t, catalog_rep(*t->presentation()));
}

PolyQ poly(std::vector<long> c) {
    std::vector<mpq_class> v;
    for (long x : c) v.emplace_back(x);
    return PolyQ(v);
}

PolyQ product_of_q_integers(const std::vector<int>& d) {
    PolyQ p(mpq_class(1));
    for (int k : d) p *= PolyQ::q_integer(static_cast<std::size_t>(k));
    return p;
}

// Poincare polynomial sum over g of q^length(g).
PolyQ length_generating_function(const GroupTable& t) {
    std::vector<mpq_class> c;
    for (std::size_t g = 0; g < t.order(); ++g) {
        auto len = static_cast<std::size_t>(t.length(static_cast<int>(g)));
        if (c.size() <= len) c.resize(len + 1, mpq_class(0));
        c[len] += 1;
    }
    return PolyQ(c);
}

const char* kLinear[] = {"A1", "A2", "A3", "B2", "B3", "H3", "I2(5)", "G4", "G5", "G(3,1,2)", "G(2,1,3)", "G25"};

}  // namespace

TEST_CASE("rational functions", "[series]") {
    RationalFunctionQ a(poly({1, -1}), poly({1, 0, -1}));  // (1-q)/(1-q^2)
    CHECK(a.denominator() == poly({1, 1}));
    CHECK(a.numerator() == poly({1}));
    CHECK(a + a == RationalFunctionQ(poly({2}), poly({1, 1})));
    CHECK((a * RationalFunctionQ(poly({1, 1}))).is_polynomial());
    CHECK_THROWS_AS(a.as_polynomial(), std::domain_error);
    CHECK_THROWS(RationalFunctionQ(poly({1}), PolyQ()));
    CHECK((a - a).is_zero());
}

TEST_CASE("Molien series and degrees", "[series]") {
    auto a2 = catalog_group("A2");
    CHECK(molien(a2, standard_parabolic(a2.table(), 0)) ==
          RationalFunctionQ(poly({1}), PolyQ::one_minus_power(1).pow(2)));
    CHECK(molien(a2, whole_group(a2.table())) ==
          RationalFunctionQ(poly({1}), PolyQ::one_minus_power(2) * PolyQ::one_minus_power(3)));
    CHECK(degrees(a2) == std::vector<int>{2, 3});
    CHECK(degrees(catalog_group("G4")) == std::vector<int>{4, 6});
    CHECK(degrees(catalog_group("B2")) == std::vector<int>{2, 4});

    // Product of degrees is |W| and the sum of d_i - 1 counts reflections.
    for (const char* sym : {"A3", "B3", "H3", "G4", "G5", "G6", "G8", "G(3,1,2)", "G(4,1,2)", "G25", "G26"}) {
        INFO(sym);
        auto lg = catalog_group(sym);
        auto d = degrees(lg);
        long prod = std::accumulate(d.begin(), d.end(), 1L, std::multiplies<>());
        long refl = 0;
        for (int x : d) refl += x - 1;
        CHECK(prod == static_cast<long>(lg.table().order()));
        CHECK(refl == static_cast<long>(lg.reflections().size()));
    }
}

TEST_CASE("coinvariant Hilbert series", "[series]") {
    auto a2 = catalog_group("A2");
    CHECK(coinvariant_hilbert(a2, standard_parabolic(a2.table(), 0)) == poly({1}));
    CHECK(coinvariant_hilbert(a2, whole_group(a2.table())) == poly({1, 1}) * poly({1, 1, 1}));
    auto b2 = catalog_group("B2");
    CHECK(coinvariant_hilbert(b2, whole_group(b2.table())) == poly({1, 1}) * poly({1, 1, 1, 1}));

    // Rotations of the triangle are not generated by reflections.
    int rot = a2.table().mul(a2.table().generator(0), a2.table().generator(1));
    CHECK_THROWS_AS(coinvariant_hilbert(a2, generated_subgroup(a2.table(), {rot})), std::domain_error);

    for (const char* sym : {"A3", "B3", "G4", "G(3,1,2)", "G25"}) {
        INFO(sym);
        auto lg = catalog_group(sym);
        PolyQ w = coinvariant_hilbert(lg, whole_group(lg.table()));
        CHECK(w == product_of_q_integers(degrees(lg)));
        CHECK(w.degree() == static_cast<int>(lg.reflections().size()));
        CHECK(w.eval(mpq_class(1)) == static_cast<long>(lg.table().order()));
        for (Mask J = 0; J <= lg.table().full_mask(); ++J) {
            PolyQ wj = coinvariant_hilbert(lg, standard_parabolic(lg.table(), J));
            PolyQ idx = w.divexact(wj);
            for (const auto& c : idx.coefficients()) {
                CHECK(c >= 0);
                CHECK(c.get_den() == 1);
            }
        }
    }
}

TEST_CASE("graded multiplicities", "[series]") {
    auto a2 = catalog_group("A2");
    auto ctx = whole_context(a2.table_ptr());
    CHECK(graded_multiplicity(ClassFunction::trivial(ctx), a2) == poly({1}));
    CHECK(graded_multiplicity(ClassFunction::regular(ctx), a2) == poly({1, 2, 2, 1}));
    CHECK(graded_multiplicity(exterior_power_character(a2, ctx, 2), a2) == poly({0, 0, 0, 1}));

    // Regular character recovers W(q) on a complex group as well.
    auto g4 = catalog_group("G4");
    auto c4 = whole_context(g4.table_ptr());
    CHECK(graded_multiplicity(ClassFunction::regular(c4), g4) == coinvariant_hilbert(g4, whole_group(g4.table())));
}

TEST_CASE("ribbon generating function", "[series]") {
    auto a2 = catalog_group("A2");
    MultiPoly w = ribbon_gf_direct(a2);
    CHECK(w.subset_coeff(0) == RationalFunctionQ(poly({1})));
    MultiPoly at1(2);
    at1 = at1 + MultiPoly::subset_monomial(2, 0, poly({1})) + MultiPoly::subset_monomial(2, 1, poly({2})) +
          MultiPoly::subset_monomial(2, 2, poly({2})) + MultiPoly::subset_monomial(2, 3, poly({1}));
    for (unsigned T = 0; T < 4; ++T)
        CHECK(RationalFunctionQ(w.subset_coeff(T).as_polynomial().eval(mpq_class(1))) ==
              at1.subset_coeff(T));

    auto a1 = catalog_group("A1");
    CHECK(ribbon_gf_determinant(a1) == ribbon_gf_direct(a1));
    CHECK(ribbon_gf_direct(a1).subset_coeff(1) == RationalFunctionQ(poly({0, 1})));

    for (const char* sym : kLinear) {
        INFO(sym);
        auto lg = catalog_group(sym);
        MultiPoly direct = ribbon_gf_direct(lg);
        CHECK(direct == ribbon_gf_determinant(lg));
        CHECK(direct == ribbon_gf_characters(lg));
        CHECK(direct.at_t(1) == RationalFunctionQ(coinvariant_hilbert(lg, whole_group(lg.table()))));
    }
}

TEST_CASE("Eulerian distribution", "[series]") {
    auto a2 = catalog_group("A2");
    MultiPoly eul = eulerian_distribution(a2.table());
    CHECK(eul.subset_coeff(0) == RationalFunctionQ(poly({1})));
    CHECK(eul.subset_coeff(1) == RationalFunctionQ(poly({0, 1, 1})));
    CHECK(eul.subset_coeff(2) == RationalFunctionQ(poly({0, 1, 1})));
    CHECK(eul.subset_coeff(3) == RationalFunctionQ(poly({0, 0, 0, 1})));

    for (const char* sym : {"A2", "A3", "B2", "B3", "H3", "I2(4)", "I2(5)", "F4", "D4"}) {
        INFO(sym);
        auto lg = catalog_group(sym);
        MultiPoly e = eulerian_distribution(lg.table());
        CHECK(e == ribbon_gf_direct(lg));
        CHECK(e.at_t(1) == RationalFunctionQ(length_generating_function(lg.table())));
        CHECK(length_generating_function(lg.table()) == product_of_q_integers(degrees(lg)));
    }
    CHECK_THROWS(eulerian_distribution(catalog_group("G4").table()));
    CHECK_THROWS(ribbon_gf_determinant(catalog_group("D4")));
}
