#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <pfv/checks.hpp>
#include <pfv/report.hpp>

namespace {

std::vector<long> parse_levels(const std::string& text) {
    std::vector<long> out;
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const long lo = std::stol(text.substr(0, dots));
        const long hi = std::stol(text.substr(dots + 2));
        if (hi < lo) throw pfv::config_error("empty level range: " + text);
        for (long k = lo; k <= hi; ++k) out.push_back(k);
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stol(item));
    }
    if (out.empty()) throw pfv::config_error("no levels in: " + text);
    return out;
}

std::vector<std::string> parse_checks(const std::string& text) {
    std::vector<std::string> out;
    if (text == "all") return out;  // empty = full catalog
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

pfv::Mutation parse_mutation(const std::string& text) {
    pfv::Mutation m;
    std::stringstream ss(text);
    std::string name, index, delta;
    if (!std::getline(ss, name, ':') || !std::getline(ss, index, ':')) {
        throw pfv::config_error("mutation spec must be name:index[:delta]");
    }
    m.name = name;
    m.term_index = static_cast<size_t>(std::stoul(index));
    if (std::getline(ss, delta, ':')) m.delta = pfv::Rational(std::stol(delta));
    return m;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for the parafermion C2-algebra computations"};

    std::string k_text = "5";
    std::string checks_text = "all";
    std::string cap_text = "auto";
    std::string mode_text = "auto";
    std::string format_text = "text";
    std::string out_path;
    std::string mutate_text;
    std::string show_name;
    int jobs = 1;
    bool strict = false;
    bool list = false;

    app.add_option("--k", k_text, "levels: N, N..M or comma list");
    app.add_option("--checks", checks_text, "all or comma list of check ids");
    app.add_option("--weight-cap", cap_text, "auto (2k+6) or a number");
    app.add_option("--mode", mode_text, "auto|symbolic|concrete")
        ->check(CLI::IsMember({"auto", "symbolic", "concrete"}));
    app.add_option("--jobs", jobs, "worker threads");
    app.add_option("--format", format_text, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", out_path, "write the report to this path");
    app.add_flag("--strict", strict, "exit 3 when a check was skipped for resources");
    app.add_flag("--list", list, "list the check catalog and exit");
    app.add_option("--mutate", mutate_text,
                   "corrupt one corpus coefficient, spec name:index[:delta]")
        ->group("");  // hidden: fault injection for the test harness
    app.add_option("--show", show_name, "print a corpus polynomial and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? 0 : 2;
    }

    try {
        if (list) {
            for (const auto& c : pfv::check_catalog()) {
                std::cout << c.id << "  " << c.summary << "  (k >= " << c.k_min;
                if (c.k_max > 0) std::cout << ", k <= " << c.k_max;
                if (!c.k_exact.empty()) {
                    std::cout << ", k in {";
                    for (size_t i = 0; i < c.k_exact.size(); ++i) {
                        std::cout << (i ? "," : "") << c.k_exact[i];
                    }
                    std::cout << "}";
                }
                std::cout << ")\n";
            }
            return 0;
        }

        pfv::RunConfig cfg;
        cfg.k_values = parse_levels(k_text);
        cfg.check_ids = parse_checks(checks_text);
        if (cap_text != "auto") cfg.weight_cap = std::stol(cap_text);
        cfg.mode = mode_text == "symbolic"   ? pfv::RunConfig::Mode::symbolic
                   : mode_text == "concrete" ? pfv::RunConfig::Mode::concrete
                                             : pfv::RunConfig::Mode::automatic;
        cfg.jobs = jobs;
        cfg.strict = strict;
        if (!mutate_text.empty()) cfg.mutation = parse_mutation(mutate_text);
        pfv::validate_config(cfg);

        if (!show_name.empty()) {
            pfv::Corpus<pfv::Rational> corpus(cfg.k_values.front(), cfg.mutation);
            std::cout << show_name << " (k=" << cfg.k_values.front()
                      << ") = " << corpus.named(show_name).str() << "\n";
            return 0;
        }

        const auto results = pfv::run_suite(cfg);

        pfv::RunMeta meta;
        meta.k_values = cfg.k_values;
        meta.checks = cfg.check_ids.empty()
                          ? [] {
                                std::vector<std::string> all;
                                for (const auto& c : pfv::check_catalog()) all.push_back(c.id);
                                return all;
                            }()
                          : cfg.check_ids;
        meta.weight_cap = cap_text;
        meta.mode = mode_text;
        meta.jobs = jobs;
        meta.strict = strict;
        const pfv::ReportFormat fmt = format_text == "json"  ? pfv::ReportFormat::json
                                      : format_text == "csv" ? pfv::ReportFormat::csv
                                                             : pfv::ReportFormat::text;
        const std::string doc = pfv::render_report(results, fmt, meta);
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            if (!f) throw pfv::config_error("cannot open output path: " + out_path);
            f << doc;
        } else {
            std::cout << doc;
        }
        return pfv::exit_status(results, strict);
    } catch (const pfv::config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
