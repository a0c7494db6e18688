#ifndef PFV_REPORT_HPP
#define PFV_REPORT_HPP

#include <string>
#include <vector>

#include <pfv/checks.hpp>

namespace pfv {

inline constexpr const char* kSchemaVersion = "1";

enum class ReportFormat { text, json, csv };

// Echo of the configuration embedded in the report header; kept free of
// timestamps so that repeated runs serialize identically.
struct RunMeta {
    std::string tool = "verify";
    std::vector<long> k_values;
    std::vector<std::string> checks;
    std::string weight_cap;  // "auto" or a number
    std::string mode;
    int jobs = 1;
    bool strict = false;
};

std::string render_report(const std::vector<CheckResult>& results, ReportFormat fmt,
                          const RunMeta& meta);

// Suite exit status: 0 no fail; 1 any fail; 3 resource skip under strict.
int exit_status(const std::vector<CheckResult>& results, bool strict);

} // namespace pfv

#endif
