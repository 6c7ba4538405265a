#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <set>
#include <string>

#include <json.hpp>

#include <mcgcert.h>

using nlohmann::json;

namespace {

struct Engine {
    mcg_engine* e = mcg_engine_new();
    ~Engine() { mcg_engine_free(e); }
};

struct Report {
    mcg_report* r = nullptr;
    ~Report() { mcg_report_free(r); }
};

std::string take(char* s) {
    REQUIRE(s);
    std::string out(s);
    mcg_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("engine lifecycle and errors") {
    Engine eng;
    REQUIRE(eng.e);
    CHECK(std::string(mcg_last_error(eng.e)).empty());

    CHECK(mcg_set_data_path(eng.e, "") == MCG_ERR_USAGE);
    CHECK_FALSE(std::string(mcg_last_error(eng.e)).empty());
    CHECK(mcg_set_data_path(eng.e, "data/stable_tables.json") == MCG_OK);

    CHECK(mcg_set_transfer_parameter(eng.e, 4) == MCG_ERR_USAGE);
    CHECK(std::string(mcg_last_error(eng.e)).find("odd") != std::string::npos);
    CHECK(mcg_set_transfer_parameter(eng.e, 5) == MCG_OK);
    CHECK(mcg_clear_transfer_parameter(eng.e) == MCG_OK);

    // null-safety of the whole surface
    CHECK(mcg_set_data_path(nullptr, "x") == MCG_ERR_USAGE);
    CHECK(mcg_run_suite(nullptr, "all", nullptr) == MCG_ERR_USAGE);
    CHECK(mcg_report_size(nullptr) == 0);
    CHECK(mcg_report_check_id(nullptr, 0) == nullptr);
    CHECK(mcg_report_elapsed_ms(nullptr, 0) == -1);
    CHECK(mcg_report_to_json(nullptr, 2) == nullptr);
    mcg_report_free(nullptr);
    mcg_string_free(nullptr);
    mcg_engine_free(nullptr);
}

TEST_CASE("suite registry") {
    CHECK(mcg_suite_count() == 8);
    std::set<std::string> names;
    for (int i = 0; i < mcg_suite_count(); ++i) {
        const char* n = mcg_suite_name(i);
        REQUIRE(n);
        CHECK(mcg_is_suite(n) == 1);
        names.insert(n);
    }
    CHECK(names.size() == 8);
    CHECK(names.count("chern") == 1);
    CHECK(mcg_suite_name(-1) == nullptr);
    CHECK(mcg_suite_name(8) == nullptr);
    CHECK(mcg_is_suite("all") == 1);
    CHECK(mcg_is_suite("nope") == 0);
    CHECK(mcg_is_suite(nullptr) == 0);
}

TEST_CASE("running a suite through the C boundary") {
    Engine eng;
    Report rep;
    REQUIRE(mcg_run_suite(eng.e, "chern", &rep.r) == MCG_OK);
    REQUIRE(rep.r);
    CHECK(mcg_report_size(rep.r) == 3);
    CHECK(mcg_report_passed(rep.r) == 3);
    CHECK(mcg_report_failed(rep.r) == 0);
    CHECK(mcg_report_all_passed(rep.r) == 1);

    bool saw_order24 = false;
    for (int i = 0; i < mcg_report_size(rep.r); ++i) {
        REQUIRE(mcg_report_check_id(rep.r, i));
        CHECK(std::string(mcg_report_status(rep.r, i)) == "pass");
        CHECK(mcg_report_elapsed_ms(rep.r, i) >= 0);
        if (std::string(mcg_report_check_id(rep.r, i)) == "order24") {
            saw_order24 = true;
            CHECK(std::string(mcg_report_expected(rep.r, i)) == "24");
            CHECK(std::string(mcg_report_computed(rep.r, i)) == "24");
            CHECK(std::strlen(mcg_report_provenance(rep.r, i)) > 0);
        }
    }
    CHECK(saw_order24);
    CHECK(mcg_report_check_id(rep.r, 3) == nullptr);
    CHECK(mcg_report_status(rep.r, -1) == nullptr);

    json j = json::parse(take(mcg_report_to_json(rep.r, 2)));
    CHECK(j.at("schema") == 1);
    CHECK(j.at("suite") == "chern");
    CHECK(j.at("summary").at("pass") == 3);
    CHECK(json::parse(take(mcg_report_to_json(rep.r, -1))) == j);

    std::string text = take(mcg_report_to_text(rep.r, 0));
    CHECK(text.find("order24: expected 24, computed 24, pass") != std::string::npos);
    std::string vtext = take(mcg_report_to_text(rep.r, 1));
    CHECK(vtext.find("via") != std::string::npos);
}

TEST_CASE("status codes for failing and broken runs") {
    Engine eng;

    Report bad;
    CHECK(mcg_run_suite(eng.e, "spectra", &bad.r) == MCG_ERR_USAGE);
    CHECK(bad.r == nullptr);
    CHECK(std::string(mcg_last_error(eng.e)).find("spectra") != std::string::npos);

    CHECK(mcg_set_data_path(eng.e, "no/such/file.json") == MCG_OK);
    Report missing;
    CHECK(mcg_run_suite(eng.e, "group", &missing.r) == MCG_ERR_DATA);
    CHECK(missing.r == nullptr);
    CHECK_FALSE(std::string(mcg_last_error(eng.e)).empty());

    CHECK(mcg_set_data_path(eng.e, "data/stable_tables.json") == MCG_OK);
    CHECK(mcg_set_transfer_parameter(eng.e, 3) == MCG_OK);
    Report degraded;
    CHECK(mcg_run_suite(eng.e, "homotopy", &degraded.r) == MCG_ERR_VERIFY);
    REQUIRE(degraded.r);
    CHECK(mcg_report_all_passed(degraded.r) == 0);
    CHECK(mcg_report_failed(degraded.r) == 3);
}

TEST_CASE("group dump is valid JSON with the full table") {
    json j = json::parse(take(mcg_group_json(-1)));
    CHECK(j.at("order") == 120);
    CHECK(j.at("elements").size() == 120);
    CHECK(j.at("elements").at(0).size() == 4);   // quaternion coordinates
    CHECK(j.at("elements").at(0).at(0).size() == 16);  // field coefficients
    CHECK(j.at("cayley").size() == 120);
    CHECK(j.at("cayley").at(0).size() == 120);
    CHECK(j.at("inverses").size() == 120);
}

TEST_CASE("abelian canonicalization") {
    Engine eng;
    CHECK(take(mcg_abelian_canonical(eng.e, "Z/4 + Z/6")) == "Z/2 ⊕ Z/12");
    CHECK(take(mcg_abelian_canonical(eng.e, "Z^2 ⊕ Z/2")) == "Z^2 ⊕ Z/2");
    CHECK(take(mcg_abelian_canonical(eng.e, "0")) == "0");
    CHECK(mcg_abelian_canonical(eng.e, "Z/0") == nullptr);
    CHECK_FALSE(std::string(mcg_last_error(eng.e)).empty());
    CHECK(mcg_abelian_canonical(nullptr, "Z") == nullptr);
}

TEST_CASE("version string") {
    CHECK(std::strlen(mcg_version()) > 0);
}
