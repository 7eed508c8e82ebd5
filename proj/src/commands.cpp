#include "reflecta/commands.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "reflecta/characters.hpp"
#include "reflecta/flats.hpp"
#include "reflecta/homology.hpp"
#include "reflecta/pointed_a.hpp"
#include "reflecta/series.hpp"

namespace reflecta {

namespace {

std::string word_string(const GroupTable& t, int g) {
    const auto& w = t.word(g);
    if (w.empty()) return "e";
    std::string s;
    for (int i : w) s += (s.empty() ? "r" : " r") + std::to_string(i + 1);
    return s;
}

Json mask_json(Mask m) {
    Json a = Json::array();
    for (int i = 0; i < 32; ++i)
        if ((m >> i) & 1u) a.push_back(i + 1);
    return a;
}

Json betti_json(const std::vector<HomologyGroup>& h) {
    Json betti = Json::array();
    for (auto b : betti_numbers(h)) betti.push_back(b);
    return betti;
}

Json torsion_json(const std::vector<HomologyGroup>& h) {
    Json out = Json::object();
    for (std::size_t k = 0; k < h.size(); ++k) {
        if (h[k].torsion.empty()) continue;
        Json t = Json::array();
        for (const auto& x : h[k].torsion) t.push_back(x.get_str());
        out[std::to_string(static_cast<long>(k) - 1)] = t;
    }
    return out;
}

std::vector<std::size_t> padded_betti(const std::vector<HomologyGroup>& h, std::size_t len) {
    std::vector<std::size_t> b;
    for (const auto& g : h) b.push_back(g.betti);
    b.resize(std::max(len, b.size()), 0);
    return b;
}

Json header(const std::string& command, const System& s) {
    return Json{{"schema", kSchemaVersion}, {"command", command}, {"group", s.label}};
}

std::string cache_dir(const RunConfig& cfg) {
    if (!cfg.cache_dir.empty()) return cfg.cache_dir;
    const char* env = std::getenv("REFLECTA_CACHE");
    return env ? std::string(env) : std::string();
}

std::string sanitize(const std::string& s) {
    std::string out;
    for (char c : s) out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    return out;
}

TablePtr cached_table(const GroupPresentation& pres, const RunConfig& cfg) {
    std::string dir = cache_dir(cfg);
    if (dir.empty()) return std::make_shared<const GroupTable>(GroupTable::enumerate(pres, cfg.group_budget));
    namespace fs = std::filesystem;
    fs::path path = fs::path(dir) / (sanitize(pres.label) + ".v1.tbl");
    if (fs::exists(path)) {
        std::ifstream in(path, std::ios::binary);
        try {
            auto t = std::make_shared<const GroupTable>(GroupTable::load(in));
            if (t->label() == pres.label && t->verify_relators()) return t;
        } catch (const std::exception&) {
            // stale or foreign blob: rebuild below
        }
    }
    auto t = std::make_shared<const GroupTable>(GroupTable::enumerate(pres, cfg.group_budget));
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary);
    if (out) t->save(out);
    return t;
}

const System& need_linear(const System& s) {
    if (!s.linear) throw ConfigError(s.label + ": no reflection representation available");
    return s;
}

CosetComplex selected_complex(const System& s, const RunConfig& cfg, Json& j) {
    CosetComplex full = build_complex(s.table);
    Mask U = cfg.U.value_or(0);
    Mask T = cfg.T.value_or(s.table->full_mask());
    j["U"] = mask_json(U);
    j["T"] = mask_json(T);
    if (U != 0) return pointed(full, U, T);
    if (T != s.table->full_mask()) return type_select(full, T);
    return full;
}

bool equal_betti(const std::vector<HomologyGroup>& a, const std::vector<HomologyGroup>& b) {
    std::size_t len = std::max(a.size(), b.size());
    return padded_betti(a, len) == padded_betti(b, len);
}

std::vector<HomologyGroup> proper_flats_homology(const FlatIndex& ix, const CosetComplex& sub) {
    return reduced_homology_of(order_complex(flats_poset(ix, sub).without_top().first));
}

std::string betti_string(const std::vector<HomologyGroup>& h) {
    std::string s;
    for (auto b : betti_numbers(h)) s += (s.empty() ? "" : ",") + std::to_string(b);
    return "(" + s + ")";
}

SuiteOutcome from_report(const SuiteReport& r) {
    SuiteOutcome o;
    o.pass = r.pass;
    o.witnesses = r.witnesses;
    return o;
}

Frame system_frame(const System& s) {
    if (!s.frame) throw ConfigError(s.label + ": no frame available (needs a real group or a star system)");
    return *s.frame;
}

using SuiteFn = std::function<SuiteOutcome(const System&, const RunConfig&)>;

SuiteOutcome suite_galois(const System& s, const RunConfig&) {
    need_linear(s);
    FlatIndex ix(build_complex(s.table));
    auto r = galois_check(*s.linear, ix);
    SuiteOutcome o;
    o.pass = r.pass;
    if (!r.pass) o.witnesses.push_back(r.witness);
    o.details["flats"] = ix.size();
    return o;
}

SuiteOutcome suite_simplicial(const System& s, const RunConfig&) {
    auto ic = intersection_condition(*s.table);
    bool vd = build_complex(s.table).vertex_determined();
    SuiteOutcome o;
    o.pass = ic.all() && vd;
    o.details["intersection_condition"] = ic.all();
    o.details["vertex_determined"] = vd;
    for (Mask m = 0; m < ic.holds.size(); ++m)
        if (!ic.holds[m]) o.witnesses.push_back("intersection condition fails at J = " + mask_json(m).dump());
    if (ic.all() != vd) o.witnesses.push_back("intersection condition and vertex-determinedness disagree");
    return o;
}

SuiteOutcome suite_conical(const System& s, const RunConfig&) {
    auto r = locally_conical_check(FlatIndex(build_complex(s.table)));
    SuiteOutcome o;
    o.pass = r.pass;
    o.details["fibers_checked"] = r.fibers_checked;
    for (const auto& w : r.witnesses) {
        std::ostringstream os;
        os << "U=" << mask_json(w.U).dump() << " flat " << w.flat << " (order " << w.stabilizer_order
           << ") fiber has no cone point";
        o.witnesses.push_back(os.str());
    }
    return o;
}

SuiteOutcome suite_homotopy_betti(const System& s, const RunConfig&) {
    CosetComplex full = build_complex(s.table);
    FlatIndex ix(full);
    SuiteOutcome o;
    std::size_t pairs = 0;
    for (Mask U = 1; U <= s.table->full_mask(); ++U)
        for (Mask T = 0; T <= s.table->full_mask(); ++T) {
            CosetComplex p = pointed(full, U, T);
            auto a = reduced_homology_of(p);
            auto b = proper_flats_homology(ix, p);
            ++pairs;
            if (!equal_betti(a, b)) {
                o.pass = false;
                o.witnesses.push_back("U=" + mask_json(U).dump() + " T=" + mask_json(T).dump() + ": complex " +
                                      betti_string(a) + " vs flats " + betti_string(b));
            }
        }
    o.details["pairs"] = pairs;
    return o;
}

SuiteOutcome suite_ribbon_character(const System& s, const RunConfig&) {
    CosetComplex full = build_complex(s.table);
    SuiteOutcome o;
    std::size_t pairs = 0;
    for (Mask U = 0; U <= s.table->full_mask(); ++U)
        for (Mask T = 0; T <= s.table->full_mask(); ++T) {
            if (U & T) continue;
            ++pairs;
            auto r = verify_homology_character(full, U, T);
            if (!r.pass) {
                o.pass = false;
                for (const auto& w : r.witnesses)
                    o.witnesses.push_back("U=" + mask_json(U).dump() + " T=" + mask_json(T).dump() + ": " + w);
            }
        }
    o.details["pairs"] = pairs;
    return o;
}

SuiteOutcome suite_solomon(const System& s, const RunConfig&) { return from_report(verify_solomon(s.table)); }

SuiteOutcome suite_steinberg(const System& s, const RunConfig&) {
    need_linear(s);
    return from_report(verify_steinberg(*s.linear));
}

SuiteOutcome suite_lineardet(const System& s, const RunConfig&) {
    need_linear(s);
    auto pres = s.table->presentation();
    if (!pres || !pres->is_linear()) throw ConfigError(s.label + ": diagram is not linear");
    MultiPoly direct = ribbon_gf_direct(*s.linear);
    MultiPoly det = ribbon_gf_determinant(*s.linear);
    MultiPoly chars = ribbon_gf_characters(*s.linear);
    SuiteOutcome o;
    o.pass = direct == det && direct == chars;
    o.details["determinant_matches"] = direct == det;
    o.details["characters_match"] = direct == chars;
    if (!(direct == det)) o.witnesses.push_back("determinant route differs from the direct sum");
    if (!(direct == chars)) o.witnesses.push_back("character route differs from the direct sum");
    return o;
}

SuiteOutcome suite_eulerian(const System& s, const RunConfig&) {
    need_linear(s);
    auto pres = s.table->presentation();
    if (!pres || !pres->is_real()) throw ConfigError(s.label + ": Eulerian distribution needs a real group");
    bool eq = eulerian_distribution(*s.table) == ribbon_gf_direct(*s.linear);
    SuiteOutcome o;
    o.pass = eq;
    if (!eq) o.witnesses.push_back("descent/length distribution differs from W(t,q)");
    return o;
}

std::vector<int> ej_range(const RunConfig& cfg) {
    if (cfg.n < 0 || cfg.n > 7) throw ConfigError("n must lie in 1..7");
    if (cfg.n > 0) return {cfg.n};
    return {1, 2, 3, 4, 5};
}

SuiteOutcome suite_ej(const System&, const RunConfig& cfg) {
    SuiteOutcome o;
    std::size_t count = 0;
    for (int n : ej_range(cfg))
        for (const auto& c : pointed_compositions(n)) {
            auto r = verify_ej(n, c);
            ++count;
            if (!r.pass) {
                o.pass = false;
                for (const auto& w : r.witnesses) o.witnesses.push_back("c=" + composition_to_string(c) + ": " + w);
            }
        }
    o.details["compositions"] = count;
    return o;
}

SuiteOutcome suite_conversion(const System&, const RunConfig& cfg) {
    SuiteOutcome o;
    std::size_t faces = 0;
    std::vector<int> range = cfg.n > 0 ? std::vector<int>{cfg.n} : std::vector<int>{2, 3, 4};
    for (int n : range) {
        if (n < 1 || n > 6) throw ConfigError("n must lie in 1..6");
        for (const auto& c : pointed_compositions(n)) {
            auto r = conversion_check(n, c);
            faces += r.faces_checked;
            if (!r.pass) {
                o.pass = false;
                for (const auto& w : r.witnesses) o.witnesses.push_back("c=" + composition_to_string(c) + ": " + w);
            }
        }
    }
    o.details["faces_checked"] = faces;
    return o;
}

SuiteOutcome suite_star(const System&, const RunConfig& cfg) {
    int n = cfg.n > 0 ? cfg.n : 4;
    if (n < 2 || n > 5) throw ConfigError("star-counterexample: n must lie in 2..5");
    StarSystem st = star_system(n, default_star_alphas(n));
    CosetComplex full = build_complex(st.group->table_ptr());
    FlatIndex ix(full);
    SuiteOutcome o;
    o.expected_failure = true;

    bool conical = locally_conical_check(ix).pass;
    Mask U = Mask{1} << (n - 1);
    Mask T = st.group->table().full_mask() & ~U;
    CosetComplex p = pointed(full, U, T);
    auto a = reduced_homology_of(p);
    auto b = proper_flats_homology(ix, p);
    bool stratified = strongly_stratified_check(*st.group, full, st.frame).pass;

    o.details["locally_conical"] = conical;
    o.details["pointed_betti"] = betti_json(a);
    o.details["flats_betti"] = betti_json(b);
    o.details["strongly_stratified"] = stratified;
    if (conical) o.witnesses.push_back("expected a fiber without cone point");
    if (equal_betti(a, b)) o.witnesses.push_back("expected the pointed complex and the flats poset to differ");
    if (stratified) o.witnesses.push_back("expected missing flats in the arrangement lattice");
    o.pass = o.witnesses.empty();
    return o;
}

SuiteOutcome suite_shelling(const System& s, const RunConfig& cfg) {
    CosetComplex full = build_complex(s.table);
    Shelling sh = find_shelling(full, cfg.shell_budget);
    bool ok = verify_shelling(full, sh.order);
    SuiteOutcome o;
    o.pass = ok;
    o.details["facets"] = sh.order.size();
    if (!ok) o.witnesses.push_back("search result rejected by the verifier");
    return o;
}

SuiteOutcome suite_well_framed(const System& s, const RunConfig& cfg) {
    need_linear(s);
    WellFramedOptions opt;
    opt.tol = cfg.tol;
    opt.jobs = cfg.jobs;
    auto r = well_framed_check(embed(build_complex(s.table), *s.linear, system_frame(s)), opt);
    SuiteOutcome o;
    o.pass = r.verdict == Verdict::Pass;
    o.details["verdict"] = to_string(r.verdict);
    o.details["exact"] = r.exact;
    o.details["pairs_checked"] = r.pairs_checked;
    o.details["indeterminate"] = r.indeterminate;
    if (r.witness)
        o.witnesses.push_back(r.reason + ": types " + mask_json(r.witness->first.type).dump() + "/" +
                              mask_json(r.witness->second.type).dump() + " cosets " +
                              std::to_string(r.witness->first.coset) + "/" + std::to_string(r.witness->second.coset));
    return o;
}

const std::map<std::string, SuiteFn>& suites() {
    static const std::map<std::string, SuiteFn> m = {
        {"galois", suite_galois},
        {"simplicial", suite_simplicial},
        {"locally-conical", suite_conical},
        {"homotopy-betti", suite_homotopy_betti},
        {"ribbon-character", suite_ribbon_character},
        {"solomon", suite_solomon},
        {"steinberg", suite_steinberg},
        {"lineardet", suite_lineardet},
        {"eulerian", suite_eulerian},
        {"ej", suite_ej},
        {"conversion", suite_conversion},
        {"star-counterexample", suite_star},
        {"shelling", suite_shelling},
        {"well-framed", suite_well_framed},
    };
    return m;
}

// Suites that do not take a group.
bool groupless(const std::string& suite) { return suite == "ej" || suite == "conversion" || suite == "star-counterexample"; }

void flatten(const Json& j, const std::string& prefix, std::ostringstream& os) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
    } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); })) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
    } else {
        os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

Mask parse_generators(const std::string& text, int rank) {
    Mask m = 0;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
        if (item.empty()) continue;
        if (!std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw ConfigError("generator index '" + item + "' is not a number");
        int i = std::stoi(item);
        if (i < 1 || i > rank) throw ConfigError("generator index " + item + " outside 1.." + std::to_string(rank));
        m |= Mask{1} << (i - 1);
    }
    return m;
}

System resolve_system(const RunConfig& cfg) {
    if (cfg.group.empty()) throw ConfigError("missing --group");
    System s;
    std::string g = cfg.group;
    std::string upper = g;
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
    if (upper.rfind("STAR", 0) == 0) {
        std::string digits = g.substr(4);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw ConfigError("star system needs the form STAR<n>");
        int n = std::stoi(digits);
        if (n < 1 || n > 6) throw ConfigError("star system: n must lie in 1..6");
        StarSystem st = star_system(n, default_star_alphas(n));
        s.label = "STAR" + digits;
        s.table = st.group->table_ptr();
        s.linear = st.group;
        s.frame = st.frame;
        return s;
    }
    GroupPresentation pres;
    try {
        pres = parse_symbol(g);
    } catch (const ParseError& e) {
        throw ConfigError(e.what());
    }
    s.label = pres.label;
    s.table = cached_table(pres, cfg);
    try {
        s.linear = std::make_shared<const LinearGroup>(s.table, catalog_rep(pres));
    } catch (const ParseError&) {
        s.linear = nullptr;
    }
    if (s.linear && pres.is_real()) s.frame = weyl_frame(*s.linear);
    return s;
}

int symbol_rank(const std::string& group) {
    std::string upper = group;
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
    if (upper.rfind("STAR", 0) == 0) {
        RunConfig c;
        c.group = group;
        return resolve_system(c).table->rank();
    }
    try {
        return parse_symbol(group).rank;
    } catch (const ParseError& e) {
        throw ConfigError(e.what());
    }
}

Json cmd_group(const RunConfig& cfg) {
    System s = resolve_system(cfg);
    Json j = header("group", s);
    const GroupTable& t = *s.table;
    j["order"] = t.order();
    j["rank"] = t.rank();
    Json orders = Json::array();
    for (int i = 0; i < t.rank(); ++i) orders.push_back(t.generator_order(i));
    j["generator_orders"] = orders;
    j["conjugacy_classes"] = conjugacy_classes(t).reps.size();
    j["intersection_condition"] = intersection_condition(t).all();
    if (auto p = t.presentation()) {
        j["real"] = p->is_real();
        j["linear_diagram"] = p->is_linear();
    }
    if (s.linear) {
        j["dimension"] = s.linear->dim();
        j["reflections"] = s.linear->reflections().size();
        Json d = Json::array();
        for (int x : degrees(*s.linear)) d.push_back(x);
        j["degrees"] = d;
    }
    return j;
}

Json cmd_complex(const RunConfig& cfg) {
    System s = resolve_system(cfg);
    Json j = header("complex", s);
    CosetComplex cx = selected_complex(s, cfg, j);
    Json f = Json::array();
    for (auto x : cx.f_vector()) f.push_back(x);
    j["f_vector"] = f;
    j["dim"] = cx.dim();
    j["pure"] = cx.is_pure();
    j["vertex_determined"] = cx.vertex_determined();
    return j;
}

Json cmd_homology(const RunConfig& cfg) {
    System s = resolve_system(cfg);
    Json j = header("homology", s);
    CosetComplex cx = selected_complex(s, cfg, j);
    auto h = reduced_homology_of(cx);
    j["H~"] = betti_json(h);
    j["torsion"] = torsion_json(h);
    j["top_concentrated"] = top_concentrated(h);
    return j;
}

Json cmd_flats(const RunConfig& cfg) {
    System s = resolve_system(cfg);
    Json j = header("flats", s);
    CosetComplex full = build_complex(s.table);
    FlatIndex ix(full);
    j["flats"] = ix.size();
    CosetComplex cx = selected_complex(s, cfg, j);
    FlatsPoset fp = flats_poset(ix, cx);
    j["supports"] = fp.flats.size();
    auto h = proper_flats_homology(ix, cx);
    j["proper_part_H~"] = betti_json(h);
    j["complex_H~"] = betti_json(reduced_homology_of(cx));
    if (s.linear) {
        j["arrangement_lattice"] = s.linear->intersection_lattice().size();
        j["galois"] = galois_check(*s.linear, ix).pass;
    }
    auto lc = locally_conical_check(ix);
    j["locally_conical"] = lc.pass;
    return j;
}

Json cmd_ribbon(const RunConfig& cfg) {
    System s = resolve_system(cfg);
    Json j = header("ribbon", s);
    Mask U = cfg.U.value_or(0);
    Mask T = cfg.T.value_or(s.table->full_mask() & ~U);
    if (U & T) throw ConfigError("U and T must be disjoint");
    j["U"] = mask_json(U);
    j["T"] = mask_json(T);
    RibbonCharacter rc = ribbon_character(s.table, U, T);
    const auto& ctx = rc.chi.context();
    Json classes = Json::array();
    for (std::size_t c = 0; c < ctx->classes.reps.size(); ++c)
        classes.push_back(Json{{"rep", word_string(*s.table, ctx->classes.reps[c])},
                               {"size", ctx->classes.sizes[c]},
                               {"value", rc.chi.values()[c].to_string()}});
    j["classes"] = classes;
    j["dimension"] = rc.chi.degree().to_string();
    Json terms = Json::array();
    for (const auto& [sign, mask] : rc.terms) terms.push_back(Json{{"sign", sign}, {"parabolic", mask_json(mask)}});
    j["terms"] = terms;
    auto v = verify_homology_character(build_complex(s.table), U, T);
    j["matches_homology"] = v.pass;
    return j;
}

Json cmd_gf(const RunConfig& cfg) {
    System s = resolve_system(cfg);
    need_linear(s);
    Json j = header("gf", s);
    MultiPoly direct = ribbon_gf_direct(*s.linear);
    MultiPoly chars = ribbon_gf_characters(*s.linear);
    j["direct"] = direct.to_string();
    j["characters"] = chars.to_string();
    bool equal = direct == chars;
    auto pres = s.table->presentation();
    if (pres && pres->is_linear()) {
        MultiPoly det = ribbon_gf_determinant(*s.linear);
        j["determinant"] = det.to_string();
        equal = equal && det == direct;
    }
    if (pres && pres->is_real()) {
        bool eul = eulerian_distribution(*s.table) == direct;
        j["eulerian_matches"] = eul;
        equal = equal && eul;
    }
    j["equal"] = equal;
    return j;
}

Json cmd_shell(const RunConfig& cfg) {
    System s = resolve_system(cfg);
    Json j = header("shell", s);
    CosetComplex full = build_complex(s.table);
    Shelling sh = find_shelling(full, cfg.shell_budget);
    Json order = Json::array();
    for (std::size_t k = 0; k < sh.order.size(); ++k)
        order.push_back(Json{{"element", word_string(*s.table, full.representative(sh.order[k]))},
                             {"restriction", mask_json(sh.restriction[k])}});
    j["order"] = order;
    j["verified"] = verify_shelling(full, sh.order);
    return j;
}

Json SuiteOutcome::to_json() const {
    Json j{{"schema", kSchemaVersion}, {"suite", suite},       {"group", group},
           {"pass", pass},             {"verdict", pass ? "PASS" : "FAIL"}, {"details", details}};
    if (expected_failure) j["expected_failure"] = true;
    j["witnesses"] = witnesses;
    return j;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, f] : suites()) v.push_back(k);
        return v;
    }();
    return names;
}

SuiteOutcome run_suite(const std::string& suite, const RunConfig& cfg) {
    auto it = suites().find(suite);
    if (it == suites().end()) throw ConfigError("unknown suite '" + suite + "'");
    System s;
    if (!groupless(suite)) s = resolve_system(cfg);
    SuiteOutcome o = it->second(s, cfg);
    o.suite = suite;
    o.group = groupless(suite) ? std::string() : s.label;
    return o;
}

const std::vector<std::string>& default_report_groups() {
    static const std::vector<std::string> g = {"A2", "A3", "B2", "B3", "H3", "I2(5)", "I2(7)",
                                               "G4", "G5", "G(3,1,2)", "G(3,1,3)"};
    return g;
}

Json report_all(const std::vector<std::string>& groups, const RunConfig& cfg, bool& all_pass) {
    static const std::vector<std::string> per_group = {"simplicial",       "galois",   "locally-conical",
                                                       "homotopy-betti",   "ribbon-character", "solomon",
                                                       "steinberg",        "lineardet", "eulerian",
                                                       "shelling",         "well-framed"};
    all_pass = true;
    Json rows = Json::array();
    for (const auto& g : groups) {
        RunConfig c = cfg;
        c.group = g;
        System s = resolve_system(c);
        Json row{{"group", s.label}, {"order", s.table->order()}};
        Json cells = Json::object();
        for (const auto& suite : per_group) {
            try {
                SuiteOutcome o = suites().at(suite)(s, c);
                cells[suite] = o.pass ? "PASS" : "FAIL";
                all_pass = all_pass && o.pass;
            } catch (const ConfigError&) {
                cells[suite] = "n/a";
            }
        }
        row["suites"] = cells;
        rows.push_back(row);
    }
    return Json{{"schema", kSchemaVersion}, {"command", "report"}, {"rows", rows}, {"all_pass", all_pass}};
}

std::string to_text(const Json& j) {
    std::ostringstream os;
    flatten(j, "", os);
    return os.str();
}

}  // namespace reflecta
