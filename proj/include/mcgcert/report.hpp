#pragma once

// Named verification suites. Each check pins an expected value in canonical
// string form, recomputes it, and records how it was obtained; a report
// serializes deterministically (elapsed_ms is the only field that varies
// between runs).

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace mcgcert {

enum class CheckStatus { pass, fail, inconclusive };

std::string to_string(CheckStatus s);

struct CheckResult {
    std::string check_id;
    CheckStatus status = CheckStatus::fail;
    std::string expected;
    std::string computed;
    std::string provenance;
    long elapsed_ms = 0;

    nlohmann::json to_json() const;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> results;

    int passed() const;
    int failed() const;
    bool all_passed() const;

    // {"schema":1, "suite":..., "results":[...], "summary":{"pass":n,"fail":m}}
    nlohmann::json to_json() const;
    // one line per check
    std::string to_text(bool verbose) const;
};

struct VerifyOptions {
    std::string data_path = "data/stable_tables.json";
    std::optional<long> t1;  // overrides the transfer parameter from the file
};

// The eight suites, in the order "all" runs them.
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);  // includes "all"

// Loads and validates the data file first (DataError aborts the run), then
// executes the suite's checks; individual check failures land in the report.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opt = {});

}  // namespace mcgcert
