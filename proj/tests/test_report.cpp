#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include <json.hpp>

#include "mcgcert/numeric.hpp"
#include "mcgcert/report.hpp"

using namespace mcgcert;
using nlohmann::json;

namespace {

const char* kTablesPath = "data/stable_tables.json";

const CheckResult* find(const SuiteReport& rep, const std::string& id) {
    for (const auto& r : rep.results)
        if (r.check_id == id) return &r;
    return nullptr;
}

json strip_elapsed(json j) {
    for (auto& r : j.at("results")) r.erase("elapsed_ms");
    return j;
}

// Writes a mutated copy of the shipped tables and returns its path.
std::string write_tables(const std::function<void(json&)>& mutate, const char* name) {
    std::ifstream in(kTablesPath);
    REQUIRE(in.good());
    json j = json::parse(in);
    mutate(j);
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << j.dump(2);
    return path.string();
}

}  // namespace

TEST_CASE("suite names") {
    CHECK(suite_names().size() == 8);
    for (const auto& s : suite_names()) CHECK(is_suite_name(s));
    CHECK(is_suite_name("all"));
    CHECK_FALSE(is_suite_name(""));
    CHECK_FALSE(is_suite_name("All"));
    CHECK_FALSE(is_suite_name("spectra"));
    CHECK_THROWS_AS(run_suite("spectra"), Error);
}

TEST_CASE("generator suite passes and serializes") {
    SuiteReport rep = run_suite("generator");
    CHECK(rep.suite == "generator");
    REQUIRE(rep.results.size() == 3);
    CHECK(rep.all_passed());
    CHECK(rep.passed() == 3);
    CHECK(rep.failed() == 0);

    const CheckResult* theta = find(rep, "theta_order");
    REQUIRE(theta);
    CHECK(theta->expected == "24");
    CHECK(theta->computed == "24");
    CHECK(theta->status == CheckStatus::pass);
    CHECK_FALSE(theta->provenance.empty());
    CHECK(theta->elapsed_ms >= 0);

    json j = rep.to_json();
    CHECK(j.at("schema") == 1);
    CHECK(j.at("suite") == "generator");
    CHECK(j.at("summary").at("pass") == 3);
    CHECK(j.at("summary").at("fail") == 0);
    for (const auto& r : j.at("results")) {
        CHECK(r.contains("check_id"));
        CHECK(r.contains("status"));
        CHECK(r.contains("expected"));
        CHECK(r.contains("computed"));
        CHECK(r.contains("provenance"));
        CHECK(r.contains("elapsed_ms"));
    }
}

TEST_CASE("chern suite includes the order-24 certificate") {
    SuiteReport rep = run_suite("chern");
    CHECK(rep.all_passed());
    const CheckResult* c = find(rep, "order24");
    REQUIRE(c);
    CHECK(c->expected == "24");
    CHECK(c->computed == "24");
    CHECK(rep.to_text(false).find("order24: expected 24, computed 24, pass") !=
          std::string::npos);
    CHECK(rep.to_text(false).find("via") == std::string::npos);
    CHECK(rep.to_text(true).find("via") != std::string::npos);
}

TEST_CASE("homology suite reports the stable range") {
    SuiteReport rep = run_suite("homology");
    CHECK(rep.all_passed());
    const CheckResult* c = find(rep, "stable_homology_1_4");
    REQUIRE(c);
    CHECK(c->computed == "[0, Z, Z/12, Z^2]");
    const CheckResult* s = find(rep, "serre_homology");
    REQUIRE(s);
    CHECK(s->computed == "[Z, 0, Z, Z/12, Z^2]");
    const CheckResult* t = find(rep, "torsion_h4");
    REQUIRE(t);
    CHECK(t->status == CheckStatus::pass);
    CHECK(t->computed == "Z/12, gluing order 2");
}

TEST_CASE("group suite check ids and values") {
    SuiteReport rep = run_suite("group");
    REQUIRE(rep.results.size() == 6);
    CHECK(rep.all_passed());
    CHECK(find(rep, "group_order")->computed == "120");
    CHECK(find(rep, "order_census")->computed == "1:1 2:1 3:20 4:30 5:24 6:20 10:24");
    CHECK(find(rep, "sylow2_q8")->computed == "Q8");
}

TEST_CASE("all is the disjoint union of the eight suites") {
    SuiteReport all = run_suite("all");
    CHECK(all.suite == "all");
    CHECK(all.results.size() == 40);
    CHECK(all.all_passed());

    std::set<std::string> ids;
    for (const auto& r : all.results) CHECK(ids.insert(r.check_id).second);

    size_t total = 0;
    for (const auto& name : suite_names()) {
        SuiteReport rep = run_suite(name);
        total += rep.results.size();
        for (const auto& r : rep.results) CHECK(ids.count(r.check_id) == 1);
    }
    CHECK(total == all.results.size());
}

TEST_CASE("reports are deterministic modulo timings") {
    json a = strip_elapsed(run_suite("generator").to_json());
    json b = strip_elapsed(run_suite("generator").to_json());
    CHECK(a == b);
    json c = strip_elapsed(run_suite("homotopy").to_json());
    json d = strip_elapsed(run_suite("homotopy").to_json());
    CHECK(c == d);
}

TEST_CASE("transfer parameter override") {
    VerifyOptions five{kTablesPath, 5};
    CHECK(run_suite("homotopy", five).all_passed());

    VerifyOptions three{kTablesPath, 3};
    SuiteReport rep = run_suite("homotopy", three);
    CHECK_FALSE(rep.all_passed());
    CHECK(rep.failed() == 3);
    CHECK(find(rep, "transfer_surjective")->computed == "fails in degrees 2");
    CHECK(find(rep, "pi2_generator")->computed == "(4, 1)");
    CHECK(find(rep, "pi_mt")->status == CheckStatus::fail);
    CHECK(find(rep, "pi_mt_t1_invariance")->status == CheckStatus::pass);

    // The degraded parameter does not touch the degree-3 kernel, so the
    // homology pipeline still goes through.
    CHECK(run_suite("homology", three).all_passed());

    VerifyOptions even{kTablesPath, 4};
    CHECK_THROWS_AS(run_suite("homotopy", even), DataError);
}

TEST_CASE("data problems surface as DataError before any check runs") {
    VerifyOptions missing{"no/such/file.json", {}};
    CHECK_THROWS_AS(run_suite("group", missing), DataError);

    VerifyOptions bad_schema{write_tables([](json& j) { j["schema"] = 2; },
                                          "mcgcert_report_bad_schema.json"),
                             {}};
    CHECK_THROWS_AS(run_suite("group", bad_schema), DataError);

    VerifyOptions bad_eta{write_tables([](json& j) { j["eta"]["2"] = {{8}}; },
                                       "mcgcert_report_bad_eta.json"),
                          {}};
    CHECK_THROWS_AS(run_suite("group", bad_eta), DataError);

    VerifyOptions extra{write_tables([](json& j) { j["comment"] = "x"; },
                                     "mcgcert_report_extra_field.json"),
                        {}};
    CHECK_THROWS_AS(run_suite("chern", extra), DataError);
}

TEST_CASE("check statuses stringify") {
    CHECK(to_string(CheckStatus::pass) == "pass");
    CHECK(to_string(CheckStatus::fail) == "fail");
    CHECK(to_string(CheckStatus::inconclusive) == "inconclusive");
}
