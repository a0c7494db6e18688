#include <pfv/report.hpp>

#include <map>
#include <sstream>

#include <json.hpp>

namespace pfv {

namespace {

std::string render_text(const std::vector<CheckResult>& results, const RunMeta& meta) {
    std::ostringstream out;
    out << meta.tool << " report (schema " << kSchemaVersion << ")\n";
    out << "levels:";
    for (long k : meta.k_values) out << " " << k;
    out << "\nmode: " << meta.mode << "  weight cap: " << meta.weight_cap << "\n\n";
    // Group by check, preserving catalog order of first appearance.
    std::vector<std::string> order;
    std::map<std::string, std::vector<const CheckResult*>> grouped;
    for (const auto& r : results) {
        if (!grouped.count(r.check_id)) order.push_back(r.check_id);
        grouped[r.check_id].push_back(&r);
    }
    size_t npass = 0, nfail = 0, nskip = 0;
    for (const auto& id : order) {
        const CheckInfo* info = find_check(id);
        out << id << "  " << (info ? info->summary : "") << "\n";
        for (const CheckResult* r : grouped[id]) {
            out << "  k=" << r->k << ": " << status_name(r->status) << " (" << r->elapsed_ms
                << " ms) -- " << r->witness << "\n";
            switch (r->status) {
                case Status::pass: ++npass; break;
                case Status::fail: ++nfail; break;
                default: ++nskip; break;
            }
            if (r->status == Status::fail && !r->table.empty()) {
                for (const auto& row : r->table) {
                    if (row.match) continue;
                    out << "    n=" << row.n << " " << row.space << ": computed "
                        << row.dim_computed << ", formula " << row.dim_formula << "\n";
                }
            }
        }
    }
    out << "\n" << npass << " pass, " << nfail << " fail, " << nskip << " skipped\n";
    return out.str();
}

std::string render_json(const std::vector<CheckResult>& results, const RunMeta& meta) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    nlohmann::ordered_json rm;
    rm["tool"] = meta.tool;
    rm["k"] = meta.k_values;
    rm["checks"] = meta.checks;
    rm["weight_cap"] = meta.weight_cap;
    rm["mode"] = meta.mode;
    rm["jobs"] = meta.jobs;
    rm["strict"] = meta.strict;
    doc["run_meta"] = rm;
    doc["results"] = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        nlohmann::ordered_json jr;
        jr["check_id"] = r.check_id;
        jr["k"] = r.k;
        jr["status"] = status_name(r.status);
        jr["witness"] = r.witness;
        jr["elapsed_ms"] = r.elapsed_ms;
        if (!r.table.empty()) {
            auto tbl = nlohmann::ordered_json::array();
            for (const auto& row : r.table) {
                tbl.push_back({{"k", row.k},
                               {"n", row.n},
                               {"space", row.space},
                               {"dim_computed", row.dim_computed},
                               {"dim_formula", row.dim_formula},
                               {"match", row.match}});
            }
            jr["table"] = tbl;
        }
        doc["results"].push_back(jr);
    }
    return doc.dump(2) + "\n";
}

std::string render_csv(const std::vector<CheckResult>& results, const RunMeta&) {
    std::ostringstream out;
    out << "k,n,space,dim_computed,dim_formula,match\n";
    for (const auto& r : results) {
        for (const auto& row : r.table) {
            out << row.k << "," << row.n << "," << row.space << "," << row.dim_computed << ","
                << row.dim_formula << "," << (row.match ? "match" : "MISMATCH") << "\n";
        }
    }
    return out.str();
}

} // namespace

std::string render_report(const std::vector<CheckResult>& results, ReportFormat fmt,
                          const RunMeta& meta) {
    switch (fmt) {
        case ReportFormat::text: return render_text(results, meta);
        case ReportFormat::json: return render_json(results, meta);
        default: return render_csv(results, meta);
    }
}

int exit_status(const std::vector<CheckResult>& results, bool strict) {
    bool any_fail = false, any_resource = false;
    for (const auto& r : results) {
        if (r.status == Status::fail) any_fail = true;
        if (is_resource_skip(r)) any_resource = true;
    }
    if (any_fail) return 1;
    if (strict && any_resource) return 3;
    return 0;
}

} // namespace pfv
