#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <pfv/checks.hpp>
#include <pfv/report.hpp>

using namespace pfv;

namespace {

RunConfig base_config(std::vector<long> ks, std::vector<std::string> ids) {
    RunConfig cfg;
    cfg.k_values = std::move(ks);
    cfg.check_ids = std::move(ids);
    return cfg;
}

std::string strip_timing(const std::string& json) {
    std::istringstream in(json);
    std::string line, out;
    while (std::getline(in, line)) {
        if (line.find("elapsed_ms") != std::string::npos) continue;
        out += line + "\n";
    }
    return out;
}

} // namespace

TEST_CASE("catalog lists the twenty-two checks in order") {
    const auto& cat = check_catalog();
    REQUIRE(cat.size() == 22);
    for (size_t i = 0; i < cat.size(); ++i) {
        CHECK(cat[i].id == "C" + std::to_string(i + 1));
        CHECK_FALSE(cat[i].summary.empty());
    }
    CHECK(find_check("C14") != nullptr);
    CHECK(find_check("C23") == nullptr);
    CHECK(find_check("") == nullptr);
}

TEST_CASE("config validation") {
    CHECK_NOTHROW(validate_config(base_config({5}, {"C1", "C14"})));
    CHECK_THROWS_AS(validate_config(base_config({}, {})), config_error);
    CHECK_THROWS_AS(validate_config(base_config({0}, {})), config_error);
    CHECK_THROWS_AS(validate_config(base_config({5}, {"C99"})), config_error);
    auto bad_jobs = base_config({5}, {});
    bad_jobs.jobs = 0;
    CHECK_THROWS_AS(validate_config(bad_jobs), config_error);
    auto tiny_cap = base_config({5}, {});
    tiny_cap.weight_cap = 2;
    CHECK_THROWS_AS(validate_config(tiny_cap), config_error);
}

TEST_CASE("inadmissible levels throw in run_check and skip in run_suite") {
    auto cfg = base_config({3}, {"C12", "C18"});
    CHECK_THROWS_AS(run_check("C12", 3, cfg), config_error);
    CHECK_THROWS_AS(run_check("C18", 5, cfg), config_error);
    CHECK_THROWS_AS(run_check("C7", 9, cfg), config_error);
    CHECK_THROWS_AS(run_check("C99", 5, cfg), config_error);
    const auto results = run_suite(cfg);
    REQUIRE(results.size() == 2);
    for (const auto& r : results) {
        CHECK(r.status == Status::skipped);
        CHECK(r.witness.find("skipped") == 0);
        CHECK_FALSE(is_resource_skip(r));
    }
    CHECK(exit_status(results, /*strict=*/true) == 0);
}

TEST_CASE("headline witnesses at k=5") {
    auto cfg = base_config({5}, {});
    auto c14 = run_check("C14", 5, cfg);
    CHECK(c14.status == Status::pass);
    CHECK(c14.witness.find("dim R_W = 15") != std::string::npos);
    auto c16 = run_check("C16", 5, cfg);
    CHECK(c16.status == Status::pass);
    CHECK(c16.witness.find("1050") != std::string::npos);
    CHECK(c16.witness.find("2850") != std::string::npos);
    auto c17 = run_check("C17", 5, cfg);
    CHECK(c17.status == Status::pass);
    CHECK(c17.witness.find("no integer solutions in the label box") != std::string::npos);
    auto c15 = run_check("C15", 5, cfg);
    CHECK(c15.status == Status::pass);
    CHECK(c15.witness.find("91 monomials") != std::string::npos);
}

TEST_CASE("dimension tables carry the headline rows") {
    auto cfg = base_config({5}, {});
    auto c12 = run_check("C12", 5, cfg);
    REQUIRE(c12.status == Status::pass);
    bool found = false;
    for (const auto& row : c12.table) {
        if (row.space == "J" && row.n == 8) {
            CHECK(row.dim_computed == 3);
            CHECK(row.dim_formula == 3);
            CHECK(row.match);
            found = true;
        }
    }
    CHECK(found);
    // 5 spaces, n = 0..16.
    CHECK(c12.table.size() == 5 * 17);
    // C15 records dim (R^h)_(7) = 2 at k=5.
    auto c15 = run_check("C15", 5, cfg);
    found = false;
    for (const auto& row : c15.table) {
        if (row.space == "Rh" && row.n == 7) {
            CHECK(row.dim_computed == 2);
            CHECK(row.match);
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("suite results are deterministic and order-stable") {
    auto cfg = base_config({5, 6}, {"C1", "C9", "C16", "C17"});
    const auto r1 = run_suite(cfg);
    cfg.jobs = 4;
    const auto r2 = run_suite(cfg);
    REQUIRE(r1.size() == r2.size());
    for (size_t i = 0; i < r1.size(); ++i) {
        CHECK(r1[i].check_id == r2[i].check_id);
        CHECK(r1[i].k == r2[i].k);
        CHECK(r1[i].status == r2[i].status);
        CHECK(r1[i].witness == r2[i].witness);
    }
    RunMeta meta;
    meta.k_values = cfg.k_values;
    meta.checks = {"C1", "C9", "C16", "C17"};
    meta.weight_cap = "auto";
    meta.mode = "auto";
    const auto j1 = render_report(r1, ReportFormat::json, meta);
    const auto j2 = render_report(r2, ReportFormat::json, meta);
    CHECK(strip_timing(j1) == strip_timing(j2));
    CHECK(j1.find("\"schema_version\": \"1\"") != std::string::npos);
}

TEST_CASE("mutation flips checks to fail with a replayable witness") {
    auto cfg = base_config({5}, {"C9"});
    cfg.mutation = Mutation{"p", 0, Rational(3)};
    const auto res = run_suite(cfg);
    REQUIRE(res.size() == 1);
    CHECK(res[0].status == Status::fail);
    // The witness names the residual polynomial.
    CHECK(res[0].witness.find("f2 - (p f0 + q f1)") != std::string::npos);
    CHECK(exit_status(res, false) == 1);
    // A symbolic check is also sensitive to its corpus inputs.
    auto sym = base_config({5}, {"C1"});
    sym.mutation = Mutation{"rel1", 0, Rational(1)};
    const auto rs = run_suite(sym);
    CHECK(rs[0].status == Status::fail);
    CHECK(rs[0].witness.find("relation") != std::string::npos);
    // A mutation of an unrelated polynomial leaves the check passing.
    auto other = base_config({5}, {"C9"});
    other.mutation = Mutation{"g3", 0, Rational(1)};
    CHECK(run_suite(other)[0].status == Status::pass);
}

TEST_CASE("resource caps surface as strict-mode skips") {
    auto cfg = base_config({5}, {"C14"});
    cfg.weight_cap = 8;  // too small for the codimension to stabilize
    const auto res = run_suite(cfg);
    REQUIRE(res.size() == 1);
    CHECK(res[0].status == Status::skipped);
    CHECK(is_resource_skip(res[0]));
    CHECK(exit_status(res, false) == 0);
    CHECK(exit_status(res, true) == 3);
}

TEST_CASE("render formats") {
    auto cfg = base_config({5}, {"C12"});
    const auto res = run_suite(cfg);
    RunMeta meta;
    meta.k_values = {5};
    meta.checks = {"C12"};
    meta.weight_cap = "auto";
    meta.mode = "auto";
    const auto text = render_report(res, ReportFormat::text, meta);
    CHECK(text.find("C12") != std::string::npos);
    CHECK(text.find("1 pass, 0 fail, 0 skipped") != std::string::npos);
    const auto csv = render_report(res, ReportFormat::csv, meta);
    CHECK(csv.rfind("k,n,space,dim_computed,dim_formula,match", 0) == 0);
    CHECK(csv.find("5,8,J,3,3,match") != std::string::npos);
    const auto empty = render_report({}, ReportFormat::json, meta);
    CHECK(empty.find("\"results\": []") != std::string::npos);
}

TEST_CASE("forced concrete mode keeps the symbolic checks honest") {
    auto cfg = base_config({7}, {"C1", "C3", "C16", "C19", "C21"});
    cfg.mode = RunConfig::Mode::concrete;
    for (const auto& r : run_suite(cfg)) {
        CHECK(r.status == Status::pass);
        if (r.check_id != "C16") {
            CHECK(r.witness.find("concrete k") != std::string::npos);
        }
    }
}
