#ifndef PFV_CHECKS_HPP
#define PFV_CHECKS_HPP

#include <optional>
#include <string>
#include <vector>

#include <pfv/corpus.hpp>

namespace pfv {

// One row of a dimension table (the CSV export format).
struct TableRow {
    long k = 0;
    long n = 0;
    std::string space;
    long dim_computed = 0;
    long dim_formula = 0;
    bool match = false;
};

enum class Status { pass, fail, skipped };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        default: return "skipped";
    }
}

struct CheckResult {
    std::string check_id;
    long k = 0;
    Status status = Status::skipped;
    std::string witness;
    long elapsed_ms = 0;
    std::vector<TableRow> table;
};

struct CheckInfo {
    std::string id;
    std::string summary;
    long k_min = 5;
    long k_max = -1;                 // -1: unbounded
    std::vector<long> k_exact;       // nonempty: only these levels admissible
    bool symbolic_in_k = false;      // claim is an identity in the formal level
};

const std::vector<CheckInfo>& check_catalog();
const CheckInfo* find_check(const std::string& id);

struct RunConfig {
    std::vector<long> k_values;
    std::vector<std::string> check_ids;  // catalog order; empty means all
    std::optional<long> weight_cap;      // empty: automatic (2k+6)
    enum class Mode { automatic, symbolic, concrete } mode = Mode::automatic;
    int jobs = 1;
    bool strict = false;
    std::optional<Mutation> mutation;

    long cap_for(long k) const { return weight_cap ? *weight_cap : 2 * k + 6; }
};

// Throws config_error on unknown check ids or invalid parameters.
void validate_config(const RunConfig& cfg);

// Runs one catalog entry; throws config_error for unknown ids and
// inadmissible k (run_suite converts the latter to a skipped result).
CheckResult run_check(const std::string& id, long k, const RunConfig& cfg);

std::vector<CheckResult> run_suite(const RunConfig& cfg);

// A skipped result caused by a resource cap (exit code 3 under --strict),
// as opposed to an inadmissible-level skip.
bool is_resource_skip(const CheckResult& r);

} // namespace pfv

#endif
