#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "reflecta/commands.hpp"

using namespace reflecta;

namespace {

struct Options {
    std::string group;
    std::string U, T;
    std::string suite;
    std::string format = "json";
    std::string out;
    std::vector<std::string> groups;
    std::size_t budget = kDefaultGroupBudget;
    std::size_t shell_budget = kDefaultShellingBudget;
    double tol = 1e-9;
    unsigned jobs = 1;
    int n = 0;
    bool u_set = false, t_set = false;
};

RunConfig to_config(const Options& o) {
    RunConfig c;
    c.group = o.group;
    c.suite = o.suite;
    c.group_budget = o.budget;
    c.shell_budget = o.shell_budget;
    c.tol = o.tol;
    c.jobs = o.jobs;
    c.n = o.n;
    if (o.budget == 0 || o.shell_budget == 0) throw ConfigError("budgets must be positive");
    if (!(o.tol > 0)) throw ConfigError("tolerance must be positive");
    if (o.u_set || o.t_set) {
        int rank = symbol_rank(o.group);
        if (o.u_set) c.U = parse_generators(o.U, rank);
        if (o.t_set) c.T = parse_generators(o.T, rank);
    }
    return c;
}

void emit(const Json& j, const Options& o) {
    std::string text = o.format == "text" ? to_text(j) : j.dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw ConfigError("cannot write " + o.out);
    f << text;
}

void add_common(CLI::App* sub, Options& o, bool needs_group) {
    auto* g = sub->add_option("--group", o.group, "group symbol, e.g. A3, I2(5), G4, G(3,1,2), STAR4");
    if (needs_group) g->required();
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", o.out, "write the report to this path");
    sub->add_option("--budget", o.budget, "group element budget");
    sub->add_option("--shell-budget", o.shell_budget, "shelling search step budget");
    sub->add_option("--tol", o.tol, "float tolerance for intersection tests");
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
}

void add_masks(CLI::App* sub, Options& o) {
    sub->add_option_function<std::string>(
        "--U", [&o](const std::string& v) { o.U = v, o.u_set = true; }, "pointing generators, e.g. 3");
    sub->add_option_function<std::string>(
        "--T", [&o](const std::string& v) { o.T = v, o.t_set = true; }, "type-selection generators, e.g. 1,2");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coset complexes, homology and ribbon representations of finite reflection groups"};
    app.require_subcommand(1);
    Options o;

    auto* group = app.add_subcommand("group", "group order, classes and degrees");
    auto* complex = app.add_subcommand("complex", "face numbers of the coset complex or a pointed subcomplex");
    auto* homology = app.add_subcommand("homology", "reduced homology");
    auto* flats = app.add_subcommand("flats", "flats, supports and the locally conical check");
    auto* ribbon = app.add_subcommand("ribbon", "ribbon character table");
    auto* gf = app.add_subcommand("gf", "generating function W(t,q) by every available route");
    auto* shell = app.add_subcommand("shell", "shelling order of the coset complex");
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    auto* report = app.add_subcommand("report", "suites x groups summary");

    for (auto* s : {group, complex, homology, flats, ribbon, gf, shell}) add_common(s, o, true);
    for (auto* s : {complex, homology, flats, ribbon}) add_masks(s, o);
    add_common(verify, o, false);
    add_masks(verify, o);
    std::string suites_help;
    for (const auto& s : suite_names()) suites_help += (suites_help.empty() ? "" : ", ") + s;
    verify->add_option("--suite", o.suite, suites_help)->required();
    verify->add_option("--n", o.n, "size parameter for ej, conversion and star-counterexample");
    add_common(report, o, false);
    report->add_option("--groups", o.groups, "groups to include (default: desk-scale set)")->delimiter(',');
    bool empty_list = false;
    report->add_flag("--none", empty_list, "use an empty group list");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        RunConfig cfg = to_config(o);
        if (*group) emit(cmd_group(cfg), o);
        if (*complex) emit(cmd_complex(cfg), o);
        if (*homology) emit(cmd_homology(cfg), o);
        if (*flats) emit(cmd_flats(cfg), o);
        if (*ribbon) emit(cmd_ribbon(cfg), o);
        if (*gf) emit(cmd_gf(cfg), o);
        if (*shell) emit(cmd_shell(cfg), o);
        if (*verify) {
            SuiteOutcome r = run_suite(o.suite, cfg);
            emit(r.to_json(), o);
            return r.pass ? 0 : 4;
        }
        if (*report) {
            std::vector<std::string> groups = empty_list ? std::vector<std::string>{}
                                              : o.groups.empty() ? default_report_groups()
                                                                 : o.groups;
            bool all_pass = true;
            emit(report_all(groups, cfg, all_pass), o);
            return all_pass ? 0 : 4;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const PresentationCollapse& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 4;
    } catch (const InvariantViolation& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 4;
    } catch (const RepVerificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 4;
    } catch (const ParseError& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
