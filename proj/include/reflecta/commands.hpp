#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "reflecta/complexes.hpp"
#include "reflecta/geometry.hpp"

namespace reflecta {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Bad symbols, indices, suite names, or a suite that does not apply.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    std::string group;
    std::optional<Mask> U, T;
    std::string suite;
    std::size_t group_budget = kDefaultGroupBudget;
    std::size_t shell_budget = kDefaultShellingBudget;
    double tol = 1e-9;
    unsigned jobs = 1;
    int n = 0;
    std::string cache_dir;  // falls back to REFLECTA_CACHE
};

// 1-based comma separated generator indices, e.g. "1,3"; empty gives 0.
Mask parse_generators(const std::string& text, int rank);

// A catalog symbol, or STAR<n> for S_{n+1} with the star transpositions.
struct System {
    std::string label;
    TablePtr table;
    std::shared_ptr<const LinearGroup> linear;  // null when no representation is available
    std::optional<Frame> frame;                 // Weyl frame or star frame
};
System resolve_system(const RunConfig& cfg);
// Rank of a symbol without enumerating the group.
int symbol_rank(const std::string& group);

Json cmd_group(const RunConfig& cfg);
Json cmd_complex(const RunConfig& cfg);
Json cmd_homology(const RunConfig& cfg);
Json cmd_flats(const RunConfig& cfg);
Json cmd_ribbon(const RunConfig& cfg);
Json cmd_gf(const RunConfig& cfg);
Json cmd_shell(const RunConfig& cfg);

struct SuiteOutcome {
    std::string suite;
    std::string group;
    bool pass = true;
    bool expected_failure = false;  // pass means every expected failure was observed
    std::vector<std::string> witnesses;
    Json details = Json::object();

    Json to_json() const;
};

const std::vector<std::string>& suite_names();
// Throws ConfigError for unknown suites or suites that do not apply.
SuiteOutcome run_suite(const std::string& suite, const RunConfig& cfg);

const std::vector<std::string>& default_report_groups();
// Suites x groups; inapplicable cells are "n/a". Sets all_pass.
Json report_all(const std::vector<std::string>& groups, const RunConfig& cfg, bool& all_pass);

// Flat "key: value" rendering of a report.
std::string to_text(const Json& j);

}  // namespace reflecta
