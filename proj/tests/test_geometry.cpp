#include <catch_amalgamated.hpp>

#include <cmath>

#include "reflecta/geometry.hpp"

using namespace reflecta;

namespace {

TablePtr table(const std::string& sym) {
    return std::make_shared<const GroupTable>(GroupTable::enumerate(parse_symbol(sym)));
}

std::shared_ptr<const LinearGroup> catalog(const std::string& sym) {
    auto t = table(sym);
    return std::make_shared<const LinearGroup>(t, catalog_rep(*t->presentation()));
}

double re(const Cyclotomic& x) { return x.to_complex().real(); }

// Angle between the two frame rays in the invariant metric.
double frame_angle(const LinearGroup& lg, const Frame& f) {
    const auto& a = f.vectors[0];
    const auto& b = f.vectors[1];
    return std::acos(re(lg.inner(a, b)) / std::sqrt(re(lg.inner(a, a)) * re(lg.inner(b, b))));
}

Frame complex_triangle_frame() {
    Cyclotomic s3 = Cyclotomic::two_cos(12, 1);
    Cyclotomic quarter(mpq_class(1, 4));
    return Frame{{{Cyclotomic(0), Cyclotomic::i()}, {s3 * quarter, Cyclotomic(mpq_class(-1, 4))}}};
}

const std::vector<mpq_class> kRatios = {mpq_class(1, 3), mpq_class(1, 2), mpq_class(1), mpq_class(2), mpq_class(3)};

}  // namespace

TEST_CASE("frames", "[geometry]") {
    auto a2 = catalog("A2");
    Frame w = weyl_frame(*a2);
    REQUIRE(w.vectors.size() == 2);
    CHECK(re(a2->inner(w.vectors[0], w.vectors[1])) > 0);
    CHECK_NOTHROW(validate_frame(*a2, w));

    for (const char* sym : {"B2", "A3", "B3", "H3", "I2(5)", "F4"}) {
        INFO(sym);
        auto lg = catalog(sym);
        Frame f = weyl_frame(*lg);
        CHECK_NOTHROW(validate_frame(*lg, f));
        for (std::size_t i = 0; i < f.vectors.size(); ++i)
            for (std::size_t j = 0; j < f.vectors.size(); ++j) CHECK(re(lg->inner(f.vectors[i], f.vectors[j])) > 0);
    }

    auto g4 = catalog("G4");
    CHECK_THROWS_AS(weyl_frame(*g4), FrameError);
    CHECK_NOTHROW(axis_frame(*g4));

    Frame bad = w;
    bad.vectors[0] = w.vectors[1];
    CHECK_THROWS_AS(validate_frame(*a2, bad), FrameError);
    CHECK_THROWS_AS(scaled(w, {Cyclotomic(1)}), FrameError);
    CHECK_THROWS_AS(embed(build_complex(a2->table_ptr()), *a2, scaled(w, {Cyclotomic(1), Cyclotomic(0)})), FrameError);
}

TEST_CASE("embedding is equivariant", "[geometry]") {
    for (const char* sym : {"A2", "B3", "I2(5)", "G4", "G(3,1,2)"}) {
        INFO(sym);
        auto lg = catalog(sym);
        CosetComplex cx = build_complex(lg->table_ptr());
        EmbeddedComplex e = embed(cx, *lg, axis_frame(*lg));
        CHECK(e.vertex_faces.size() == cx.f_vector()[0]);
        for (std::size_t h = 0; h < lg->table().order(); ++h)
            for (std::size_t v = 0; v < e.vertex_faces.size(); ++v) {
                int w = e.vertex_index(cx.act(static_cast<int>(h), e.vertex_faces[v]));
                REQUIRE(w >= 0);
                CHECK(e.coords[static_cast<std::size_t>(w)] == lg->matrix(static_cast<int>(h)) * e.coords[v]);
            }
    }
}

TEST_CASE("Weyl frames embed", "[geometry]") {
    auto a2 = catalog("A2");
    EmbeddedComplex hex = embed(build_complex(a2->table_ptr()), *a2, weyl_frame(*a2));
    CHECK(hex.coords.size() == 6);
    CHECK(hex.simplices.size() == 6);
    CHECK(hex.rational());
    auto r = well_framed_check(hex);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.exact);
    CHECK(r.pairs_checked == 15);

    for (const char* sym : {"B2", "I2(5)", "I2(8)", "A3", "B3"}) {
        INFO(sym);
        auto lg = catalog(sym);
        auto rep = well_framed_check(embed(build_complex(lg->table_ptr()), *lg, weyl_frame(*lg)));
        CHECK(rep.verdict == Verdict::Pass);
        CHECK(rep.indeterminate == 0);
    }
}

TEST_CASE("real frames embed exactly on chamber rays", "[geometry]") {
    struct Case {
        std::string name;
        std::shared_ptr<const LinearGroup> lg;
        int m;
    };
    auto i3 = table("I2(3)");
    auto i5 = table("I2(5)");
    std::vector<Case> cases = {
        {"triangle", std::make_shared<const LinearGroup>(i3, triangle_rep()), 3},
        {"I2(5) k=1", std::make_shared<const LinearGroup>(i5, dihedral_rep(5, 1)), 5},
        {"I2(5) k=2", std::make_shared<const LinearGroup>(i5, dihedral_rep(5, 2)), 5},
        {"A2", catalog("A2"), 3},
        {"B2", catalog("B2"), 4},
    };
    for (const auto& c : cases) {
        Frame axis = axis_frame(*c.lg);
        CosetComplex cx = build_complex(c.lg->table_ptr());
        int passes = 0;
        for (int s1 : {1, -1})
            for (int s2 : {1, -1})
                for (const auto& r : kRatios) {
                    Frame f = scaled(axis, {Cyclotomic(s1), Cyclotomic(mpq_class(s2 * r))});
                    auto rep = well_framed_check(embed(cx, *c.lg, f));
                    bool chamber = std::fabs(frame_angle(*c.lg, f) - M_PI / c.m) < 1e-9;
                    INFO(c.name << " s1=" << s1 << " s2=" << s2 << " r=" << r.get_str());
                    CHECK(rep.indeterminate == 0);
                    CHECK((rep.verdict == Verdict::Pass) == chamber);
                    if (rep.verdict == Verdict::Fail) CHECK(rep.witness.has_value());
                    passes += rep.verdict == Verdict::Pass;
                }
        INFO(c.name);
        if (c.name == "I2(5) k=2")
            CHECK(passes == 0);
        else
            CHECK(passes == 2 * static_cast<int>(kRatios.size()));
    }
}

TEST_CASE("non-simple pentagon system double covers", "[geometry]") {
    auto i5 = table("I2(5)");
    LinearGroup lg(i5, dihedral_rep(5, 2));
    CosetComplex cx = build_complex(i5);
    // Swapping root coordinates exchanges the two mirrors isometrically.
    CycloVector v = axis_frame(lg).vectors[0];
    Frame equal{{v, {v[1], v[0]}}};
    REQUIRE(re(lg.inner(equal.vectors[0], equal.vectors[0])) == Catch::Approx(re(lg.inner(equal.vectors[1], equal.vectors[1]))));
    int coincident = 0;
    for (int s : {1, -1}) {
        auto rep = well_framed_check(embed(cx, lg, scaled(equal, {Cyclotomic(1), Cyclotomic(s)})));
        CHECK(rep.verdict == Verdict::Fail);
        CHECK(rep.witness.has_value());
        coincident += rep.reason.find("same image") != std::string::npos;
    }
    CHECK(coincident == 1);
}

TEST_CASE("complex frame on the triangle group", "[geometry]") {
    LinearGroup lg(table("I2(3)"), triangle_rep());
    Frame f = complex_triangle_frame();
    CHECK_NOTHROW(validate_frame(lg, f));
    EmbeddedComplex e = embed(build_complex(lg.table_ptr()), lg, f);
    CHECK_FALSE(e.rational());
    auto rep = well_framed_check(e);
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.indeterminate == 0);
    CHECK(e.coords.size() == 6);
    CHECK(e.simplices.size() == 6);
}

TEST_CASE("star systems", "[geometry]") {
    CHECK_THROWS_AS(star_system(3, {Cyclotomic(1), Cyclotomic(2), Cyclotomic::i()}), FrameError);
    CHECK_THROWS_AS(star_system(2, {Cyclotomic(1)}), FrameError);
    for (int n : {2, 3}) {
        INFO("n=" << n);
        StarSystem s = star_system(n, default_star_alphas(n));
        CosetComplex cx = build_complex(s.group->table_ptr());
        WellFramedOptions opt;
        opt.jobs = 2;
        auto rep = well_framed_check(embed(cx, *s.group, s.frame), opt);
        CHECK(rep.verdict == Verdict::Pass);
        CHECK(rep.indeterminate == 0);
    }
    CHECK_NOTHROW(star_system(2, {Cyclotomic(1), Cyclotomic::i()}));
}

TEST_CASE("strong stratification", "[geometry]") {
    for (const char* sym : {"A2", "A3", "B3", "I2(5)"}) {
        INFO(sym);
        auto lg = catalog(sym);
        auto rep = strongly_stratified_check(*lg, build_complex(lg->table_ptr()), weyl_frame(*lg));
        CHECK(rep.pass);
        CHECK(rep.extra.empty());
        CHECK(rep.face_spans == rep.lattice_size);
    }
    for (const char* sym : {"G4", "G(3,1,2)", "G5"}) {
        INFO(sym);
        auto lg = catalog(sym);
        auto rep = strongly_stratified_check(*lg, build_complex(lg->table_ptr()), axis_frame(*lg));
        CHECK(rep.pass);
    }
    auto i25 = catalog("I2(5)");
    CHECK(strongly_stratified_check(*i25, build_complex(i25->table_ptr()), weyl_frame(*i25)).lattice_size == 7);

    // S5: 15 lines and 25 planes in the braid arrangement; the star complex
    // reaches only the 5 vertex lines and the 10 edge planes.
    StarSystem s = star_system(4, default_star_alphas(4));
    auto rep = strongly_stratified_check(*s.group, build_complex(s.group->table_ptr()), s.frame);
    CHECK_FALSE(rep.pass);
    std::size_t lines = 0, planes = 0;
    for (const auto& x : rep.missing) {
        lines += x.dim() == 1;
        planes += x.dim() == 2;
    }
    CHECK(lines == 10);
    CHECK(planes == 15);
    CHECK(rep.missing.size() == 25);
}
