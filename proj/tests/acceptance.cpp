// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "reflecta/characters.hpp"
#include "reflecta/commands.hpp"
#include "reflecta/flats.hpp"
#include "reflecta/homology.hpp"
#include "reflecta/pointed_a.hpp"
#include "reflecta/series.hpp"

using namespace reflecta;

namespace {

struct Result {
    bool pass = true;
    std::ostringstream note;
    std::string failed;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            failed += (failed.empty() ? "" : "; ") + what;
        }
    }
};

TablePtr table(const std::string& sym) {
    return std::make_shared<const GroupTable>(GroupTable::enumerate(parse_symbol(sym)));
}

std::shared_ptr<const LinearGroup> linear(const std::string& sym) {
    auto t = table(sym);
    return std::make_shared<const LinearGroup>(t, catalog_rep(*t->presentation()));
}

std::vector<std::string> dihedral(int lo, int hi) {
    std::vector<std::string> v;
    for (int m = lo; m <= hi; ++m) v.push_back("I2(" + std::to_string(m) + ")");
    return v;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

SuiteOutcome suite(const std::string& name, const std::string& group, int n = 0) {
    RunConfig cfg;
    cfg.group = group;
    cfg.n = n;
    return run_suite(name, cfg);
}

void suite_over(Result& r, const std::string& name, const std::vector<std::string>& groups) {
    for (const auto& g : groups) {
        auto o = suite(name, g);
        r.require(o.pass, name + " on " + g + (o.witnesses.empty() ? "" : ": " + o.witnesses.front()));
    }
    r.note << groups.size() << " groups";
}

Result group_orders() {
    Result r;
    const std::vector<std::pair<std::string, std::size_t>> expected = {
        {"A2", 6}, {"I2(5)", 10}, {"A3", 24}, {"B3", 48}, {"H3", 120}, {"G4", 24}, {"G(3,1,2)", 18}};
    for (const auto& [sym, order] : expected) {
        auto t0 = std::chrono::steady_clock::now();
        auto t = table(sym);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        r.require(t->order() == order, sym + " order " + std::to_string(t->order()));
        r.require(secs < 1.0, sym + " took over 1 s");
    }
    // G4 through the closure of its generating matrices.
    auto g4 = linear("G4");
    r.require(matrix_closure_order(g4->rep().generators, 1000) == g4->table().order(), "G4 closure");
    r.note << expected.size() << " orders, G4 matrix closure " << g4->table().order();
    return r;
}

Result coxeter_spheres() {
    Result r;
    for (const auto& sym : concat({"A2", "A3", "B2", "B3", "H3"}, dihedral(2, 8))) {
        auto t = table(sym);
        auto b = betti_numbers(reduced_homology_of(build_complex(t)));
        std::vector<std::size_t> sphere(static_cast<std::size_t>(t->rank()), 0);
        sphere.back() = 1;
        r.require(b == sphere, sym);
    }
    r.note << "12 groups";
    return r;
}

Result shephard_wedges() {
    Result r;
    for (const char* sym : {"G4", "G5", "G(3,1,2)"}) {
        auto lg = linear(sym);
        int d1 = degrees(*lg).front();
        auto h = reduced_homology_of(build_complex(lg->table_ptr()));
        auto b = betti_numbers(h);
        std::size_t expected = 1;
        for (int i = 0; i < lg->table().rank(); ++i) expected *= static_cast<std::size_t>(d1 - 1);
        r.require(top_concentrated(h) && b.back() == expected, std::string(sym) + " top rank " + std::to_string(b.back()));
        r.note << (sym == std::string("G4") ? "" : " ") << sym << ":" << b.back();
    }
    r.require(betti_numbers(reduced_homology_of(build_complex(table("G4")))).back() == 9, "G4 rank 9");
    r.require(betti_numbers(reduced_homology_of(build_complex(table("G(3,1,2)")))).back() == 4, "G(3,1,2) rank 4");
    return r;
}

Result locally_conical() {
    Result r;
    // Irreducible dihedral groups only; I2(2) = A1 x A1 is reported for information.
    suite_over(r, "locally-conical",
               concat(concat({"A2", "A3", "B2", "B3", "H3"}, dihedral(3, 8)), {"G4", "G5", "G(3,1,2)", "G(3,1,3)"}));
    auto star = suite("locally-conical", "STAR4");
    r.require(!star.pass && !star.witnesses.empty(), "S5 star system should fail with a witness");
    r.note << ", S5 star FAIL with " << star.witnesses.size() << " witnesses";
    r.note << ", reducible I2(2) " << (suite("locally-conical", "I2(2)").pass ? "PASS" : "FAIL");
    return r;
}

Result homotopy_betti() {
    Result r;
    std::size_t pairs = 0;
    for (const char* g : {"A3", "B3", "G4"}) {
        auto o = suite("homotopy-betti", g);
        r.require(o.pass, std::string(g) + (o.witnesses.empty() ? "" : ": " + o.witnesses.front()));
        pairs += o.details["pairs"].get<std::size_t>();
    }
    r.require(pairs == 56 + 56 + 12, "pair count " + std::to_string(pairs));
    r.note << pairs << " (U,T) pairs";
    return r;
}

Result ribbon_characters() {
    Result r;
    suite_over(r, "ribbon-character", {"A3", "G(3,1,2)"});
    return r;
}

Result solomon() {
    Result r;
    suite_over(r, "solomon", {"A2", "A3", "B2", "B3", "H3", "G4", "G5", "G(3,1,2)"});
    return r;
}

Result steinberg() {
    Result r;
    suite_over(r, "steinberg", {"A2", "A3", "B2", "B3", "G4", "G(3,1,2)"});
    return r;
}

Result determinant() {
    Result r;
    suite_over(r, "lineardet", {"A2", "A3", "B2", "B3", "G4", "G5", "G(3,1,2)"});
    r.note << ", Eulerian on ";
    suite_over(r, "eulerian", {"A2", "A3", "B2", "B3"});
    return r;
}

Result ej() {
    Result r;
    auto o = suite("ej", "");
    r.require(o.pass, o.witnesses.empty() ? "ej" : o.witnesses.front());
    r.note << o.details["compositions"].get<std::size_t>() << " compositions";
    auto p24 = divisible_partition_lattice(4, 2);
    r.require(std::labs(mobius(p24.order, p24.bottom, p24.top)) == 2, "|mu| of 2-divisible partitions of 4");
    for (auto [m, d] : {std::pair{6, 2}, std::pair{6, 3}}) {
        Composition c(static_cast<std::size_t>(m / d), d);
        c.back() = d - 1;
        auto pl = divisible_partition_lattice(m, d);
        long mu = mobius(pl.order, pl.bottom, pl.top);
        r.require(std::labs(mu) == ribbon_specht_dim(c), "mobius for (" + std::to_string(m) + "," + std::to_string(d) + ")");
        r.note << ", |mu|(" << m << "," << d << ")=" << std::labs(mu);
    }
    return r;
}

Result conversion() {
    Result r;
    auto o = suite("conversion", "");
    r.require(o.pass, o.witnesses.empty() ? "conversion" : o.witnesses.front());
    r.note << o.details["faces_checked"].get<std::size_t>() << " faces, n = 2..4";
    return r;
}

Result well_framed() {
    Result r;
    std::size_t indeterminate = 0;
    auto check = [&](const LinearGroup& lg, const Frame& f) {
        auto rep = well_framed_check(embed(build_complex(lg.table_ptr()), lg, f));
        indeterminate += rep.indeterminate;
        return rep;
    };

    auto i25 = linear("I2(5)");
    r.require(check(*i25, weyl_frame(*i25)).verdict == Verdict::Pass, "I2(5) simple frame");

    // Non-simple pentagon system: equal and unequal norms.
    LinearGroup bad(i25->table_ptr(), dihedral_rep(5, 2));
    CycloVector v = axis_frame(bad).vectors[0];
    Frame equal{{v, {v[1], v[0]}}};
    for (const auto& f : {equal, scaled(equal, {Cyclotomic(1), Cyclotomic(2)})}) {
        auto rep = check(bad, f);
        r.require(rep.verdict == Verdict::Fail && rep.witness.has_value(), "pentagon non-simple frame");
    }

    LinearGroup tri(table("I2(3)"), triangle_rep());
    Cyclotomic s3 = Cyclotomic::two_cos(12, 1);
    Frame complex_frame{{{Cyclotomic(0), Cyclotomic::i()}, {s3 * Cyclotomic(mpq_class(1, 4)), Cyclotomic(mpq_class(-1, 4))}}};
    r.require(check(tri, complex_frame).verdict == Verdict::Pass, "triangle complex frame");

    // Real frames a (0,1), b (sqrt3,-1) over a grid of signs and ratios.
    Frame real_axes{{{Cyclotomic(0), Cyclotomic(1)}, {s3, Cyclotomic(-1)}}};
    const std::vector<mpq_class> mags = {mpq_class(1, 4), mpq_class(1, 3), mpq_class(1, 2), mpq_class(2, 3), mpq_class(1),
                                         mpq_class(3, 2), mpq_class(2),    mpq_class(3),    mpq_class(4)};
    std::size_t grid = 0, passes = 0;
    std::string first_pass;
    for (int sa : {1, -1})
        for (int sb : {1, -1})
            for (const auto& a : mags)
                for (const auto& b : mags) {
                    Frame f = scaled(real_axes, {Cyclotomic(mpq_class(sa * a)), Cyclotomic(mpq_class(sb * b))});
                    ++grid;
                    if (check(tri, f).verdict == Verdict::Pass) {
                        if (!passes) first_pass = "a=" + mpq_class(sa * a).get_str() + " b=" + mpq_class(sb * b).get_str();
                        ++passes;
                    }
                }
    r.require(passes == 0, std::to_string(passes) + " of " + std::to_string(grid) +
                               " real triangle frames embed, e.g. " + first_pass);
    r.require(indeterminate == 0, std::to_string(indeterminate) + " indeterminate pairs");
    r.note << grid << " real triangle frames tried";
    return r;
}

Result shellings() {
    Result r;
    suite_over(r, "shelling", concat(concat({"A2", "A3", "B3", "H3"}, dihedral(2, 8)), {"G4", "G5", "G(3,1,2)"}));
    return r;
}

Result simpliciality() {
    Result r;
    suite_over(r, "simplicial",
               concat(concat({"A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "F4", "H3"}, dihedral(2, 8)),
                      {"G4", "G5", "G6", "G8", "G25", "G26", "G(3,1,2)", "G(3,1,3)", "G(4,1,2)", "STAR3", "STAR4"}));
    return r;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
        {"group orders", group_orders},
        {"Coxeter complexes are spheres", coxeter_spheres},
        {"Shephard complexes are wedges of spheres", shephard_wedges},
        {"locally conical sweeps", locally_conical},
        {"pointed complexes match flats posets", homotopy_betti},
        {"ribbon character from top homology", ribbon_characters},
        {"Solomon decomposition", solomon},
        {"Steinberg orthogonality", steinberg},
        {"determinant and Eulerian generating functions", determinant},
        {"pointed set compositions and partitions", ej},
        {"conversion to coset complexes", conversion},
        {"well-framed examples", well_framed},
        {"shellings", shellings},
        {"simpliciality of well-generated systems", simpliciality},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        auto t0 = std::chrono::steady_clock::now();
        Result r;
        try {
            r = criteria[k].second();
        } catch (const std::exception& e) {
            r.pass = false;
            r.failed = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failures += !r.pass;
        std::string note = r.note.str();
        if (!r.failed.empty()) note += " [failed: " + r.failed + "]";
        std::printf("[%s] %2zu. %s: %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                    note.c_str(), secs);
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
