#include <catch_amalgamated.hpp>

#include <set>

#include "reflecta/characters.hpp"

using namespace reflecta;

namespace {

TablePtr table(const std::string& sym) {
    return std::make_shared<const GroupTable>(GroupTable::enumerate(parse_symbol(sym)));
}

LinearGroup catalog_group(const std::string& sym) {
    auto t = table(sym);
    return LinearGroup(t, catalog_rep(*t->presentation()));
}

// Number of elements whose right descent set is exactly T (Coxeter groups).
long descent_class_size(const GroupTable& t, Mask T, Mask within) {
    Subgroup w = standard_parabolic(t, within);
    long n = 0;
    for (int g : w.members()) {
        Mask des = 0;
        for (int i = 0; i < t.rank(); ++i)
            if (((within >> i) & 1u) && t.length(t.rmul(g, i)) < t.length(g)) des |= Mask{1} << i;
        if (des == T) ++n;
    }
    return n;
}

long double_coset_count(const GroupTable& t, const Subgroup& h) {
    std::set<std::vector<int>> seen;
    for (std::size_t g = 0; g < t.order(); ++g) {
        std::set<int> dc;
        for (int a : h.members())
            for (int b : h.members()) dc.insert(t.mul(t.mul(a, static_cast<int>(g)), b));
        seen.insert(std::vector<int>(dc.begin(), dc.end()));
    }
    return static_cast<long>(seen.size());
}

}  // namespace

TEST_CASE("induced and regular characters", "[characters]") {
    auto t = table("A2");
    auto ctx = whole_context(t);
    REQUIRE(ctx->classes.count() == 3);

    auto ind = induced_trivial(ctx, standard_parabolic(*t, 0b01));
    for (std::size_t c = 0; c < 3; ++c) {
        int order = t->element_order(ctx->classes.reps[c]);
        long want = order == 1 ? 3 : order == 2 ? 1 : 0;
        CHECK(ind.values()[c] == Cyclotomic(want));
    }
    CHECK(inner_product(ind, ind) == Cyclotomic(double_coset_count(*t, standard_parabolic(*t, 0b01))));
    CHECK(inner_product(ind, ind) == Cyclotomic(2));

    CHECK(induced_trivial(ctx, whole_group(*t)) == ClassFunction::trivial(ctx));
    CHECK(induced_trivial(ctx, standard_parabolic(*t, 0)) == ClassFunction::regular(ctx));
    auto reg = ClassFunction::regular(ctx);
    auto triv = ClassFunction::trivial(ctx);
    CHECK(inner_product(reg, triv) == Cyclotomic(1));
    CHECK(inner_product(triv, triv) == Cyclotomic(1));

    auto other = whole_context(table("B2"));
    CHECK_THROWS(inner_product(triv, ClassFunction::trivial(other)));
}

TEST_CASE("induced dimensions and Frobenius reciprocity", "[characters]") {
    for (const char* sym : {"A3", "B3", "G4", "G(3,1,2)"}) {
        auto lg = catalog_group(sym);
        auto t = lg.table_ptr();
        auto ctx = whole_context(t);
        std::vector<ClassFunction> probes;
        for (int p = 0; p <= static_cast<int>(lg.dim()); ++p) probes.push_back(exterior_power_character(lg, ctx, p));
        for (Mask K = 0; K <= t->full_mask(); ++K) {
            Subgroup h = standard_parabolic(*t, K);
            auto ind = induced_trivial(ctx, h);
            CHECK(ind.degree() == Cyclotomic(static_cast<long>(t->order() / h.order())));
            auto sub = parabolic_context(t, K);
            for (const auto& chi : probes) {
                Cyclotomic lhs = inner_product(ind, chi);
                Cyclotomic rhs = inner_product(ClassFunction::trivial(sub), restrict_to(chi, sub));
                CHECK(lhs == rhs);
                CHECK(lhs.is_integer());
                CHECK(lhs.rational() >= 0);
            }
        }
    }
}

TEST_CASE("exterior power characters", "[characters]") {
    auto lg = catalog_group("A2");
    auto ctx = whole_context(lg.table_ptr());
    auto v = exterior_power_character(lg, ctx, 1);
    CHECK(v == reflection_character(lg, ctx));
    for (std::size_t c = 0; c < 3; ++c) {
        int order = lg.table().element_order(ctx->classes.reps[c]);
        long want = order == 1 ? 2 : order == 2 ? 0 : -1;
        CHECK(v.values()[c] == Cyclotomic(want));
    }
    CHECK(exterior_power_character(lg, ctx, 0) == ClassFunction::trivial(ctx));
    CHECK_THROWS(exterior_power_character(lg, ctx, 3));

    for (const char* sym : {"A2", "B3", "G4", "G(3,1,2)"}) {
        auto g = catalog_group(sym);
        auto cx = whole_context(g.table_ptr());
        auto top = exterior_power_character(g, cx, static_cast<int>(g.dim()));
        for (std::size_t c = 0; c < cx->classes.count(); ++c)
            CHECK(top.values()[c] == g.matrix(cx->classes.reps[c]).det());
    }
}

TEST_CASE("ribbon characters", "[characters]") {
    auto a2 = table("A2");
    auto ctx = whole_context(a2);
    CHECK(ribbon_character(ctx, 0, 0) == ClassFunction::trivial(ctx));
    CHECK(ribbon_character(ctx, 0, 0b01).degree() == Cyclotomic(2));
    CHECK(ribbon_character(ctx, 0b01, 0b01) == ClassFunction::zero(ctx));

    for (const char* sym : {"A2", "A3", "B3", "H3"}) {
        auto t = table(sym);
        for (Mask U = 0; U <= t->full_mask(); ++U)
            for (Mask T = 0; T <= t->full_mask(); ++T) {
                if (U & T) continue;
                auto r = ribbon_character(t, U, T);
                CHECK(r.chi.is_rational_integral());
                CHECK(r.terms.size() == (std::size_t{1} << popcount(T)));
                long want = descent_class_size(*t, T, t->full_mask() & ~U);
                CHECK(r.chi.degree() == Cyclotomic(want));
            }
    }

    auto a3 = table("A3");
    auto c3 = whole_context(a3);
    auto sgn = ribbon_character(c3, 0, a3->full_mask());
    for (std::size_t c = 0; c < c3->classes.count(); ++c)
        CHECK(sgn.values()[c] == Cyclotomic(a3->length(c3->classes.reps[c]) % 2 ? -1 : 1));
}

TEST_CASE("Solomon and Steinberg suites", "[characters]") {
    for (const char* sym : {"A2", "A3", "B2", "B3", "H3", "G4", "G5", "G(3,1,2)"}) {
        INFO(sym);
        auto t = table(sym);
        auto rep = verify_solomon(t);
        CHECK(rep.pass);
        auto ctx = whole_context(t);
        Cyclotomic dims(0);
        for (Mask T = 0; T <= t->full_mask(); ++T) dims += ribbon_character(ctx, 0, T).degree();
        CHECK(dims == Cyclotomic(static_cast<long>(t->order())));
    }

    auto a2 = catalog_group("A2");
    auto ctx = whole_context(a2.table_ptr());
    auto chi = ribbon_character(ctx, 0, 0b01);
    CHECK(inner_product(chi, exterior_power_character(a2, ctx, 1)) == Cyclotomic(1));
    CHECK(inner_product(chi, exterior_power_character(a2, ctx, 0)) == Cyclotomic(0));
    CHECK(inner_product(chi, exterior_power_character(a2, ctx, 2)) == Cyclotomic(0));

    for (const char* sym : {"A2", "A3", "B2", "B3", "G4", "G(3,1,2)"}) {
        INFO(sym);
        auto rep = verify_steinberg(catalog_group(sym));
        CHECK(rep.pass);
        CHECK(rep.witnesses.empty());
    }
}

TEST_CASE("homology characters of pointed complexes", "[characters]") {
    auto a3 = build_complex(table("A3"));
    auto hc = homology_character(a3, 0b100, 0b011);
    REQUIRE(hc.top_concentrated);
    REQUIRE(hc.chi);
    CHECK(hc.relations_hold);
    CHECK(hc.chi->degree() == Cyclotomic(descent_class_size(a3.table(), 0b011, 0b011)));
    CHECK(verify_homology_character(a3, 0b100, 0b011).pass);

    auto zero = homology_character(a3, 0b001, 0b011);
    REQUIRE(zero.chi);
    CHECK(*zero.chi == ClassFunction::zero(zero.chi->context()));
    CHECK(verify_homology_character(a3, 0b001, 0b011).pass);

    for (const char* sym : {"A3", "B3", "G4", "G(3,1,2)"}) {
        INFO(sym);
        auto full = build_complex(table(sym));
        for (Mask U = 0; U <= full.table().full_mask(); ++U)
            for (Mask T = 0; T <= full.table().full_mask(); ++T) {
                INFO("U=" << U << " T=" << T);
                auto rep = verify_homology_character(full, U, T);
                CHECK(rep.pass);
            }
    }
}
