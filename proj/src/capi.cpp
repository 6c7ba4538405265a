#include "mcgcert.h"

#include "mcgcert/abelian.hpp"
#include "mcgcert/group.hpp"
#include "mcgcert/numeric.hpp"
#include "mcgcert/report.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

using namespace mcgcert;

struct mcg_engine {
    std::string data_path = "data/stable_tables.json";
    std::optional<long> t1;
    std::string last_error;
};

struct mcg_report {
    SuiteReport rep;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

mcg_status fail(mcg_engine* e, mcg_status st, const std::string& msg) {
    if (e) e->last_error = msg;
    return st;
}

bool in_range(const mcg_report* r, int i) {
    return r && i >= 0 && i < int(r->rep.results.size());
}

std::string render_json(const nlohmann::json& j, int indent) {
    return indent < 0 ? j.dump() : j.dump(indent);
}

}  // namespace

extern "C" {

mcg_engine* mcg_engine_new(void) { return new (std::nothrow) mcg_engine; }

void mcg_engine_free(mcg_engine* e) { delete e; }

const char* mcg_last_error(const mcg_engine* e) {
    return e ? e->last_error.c_str() : "null engine";
}

mcg_status mcg_set_data_path(mcg_engine* e, const char* path) {
    if (!e) return MCG_ERR_USAGE;
    if (!path || !*path) return fail(e, MCG_ERR_USAGE, "empty data path");
    e->data_path = path;
    return MCG_OK;
}

mcg_status mcg_set_transfer_parameter(mcg_engine* e, long t1) {
    if (!e) return MCG_ERR_USAGE;
    if (t1 % 2 == 0)
        return fail(e, MCG_ERR_USAGE,
                    "transfer parameter must be odd, got " + std::to_string(t1));
    e->t1 = t1;
    return MCG_OK;
}

mcg_status mcg_clear_transfer_parameter(mcg_engine* e) {
    if (!e) return MCG_ERR_USAGE;
    e->t1.reset();
    return MCG_OK;
}

int mcg_suite_count(void) { return int(suite_names().size()); }

const char* mcg_suite_name(int i) {
    const auto& names = suite_names();
    if (i < 0 || i >= int(names.size())) return nullptr;
    return names[size_t(i)].c_str();
}

int mcg_is_suite(const char* name) { return name && is_suite_name(name) ? 1 : 0; }

mcg_status mcg_run_suite(mcg_engine* e, const char* suite, mcg_report** out) {
    if (out) *out = nullptr;
    if (!e) return MCG_ERR_USAGE;
    if (!suite || !out) return fail(e, MCG_ERR_USAGE, "null argument");
    if (!is_suite_name(suite))
        return fail(e, MCG_ERR_USAGE, "unknown suite \"" + std::string(suite) + "\"");
    try {
        VerifyOptions opt{e->data_path, e->t1};
        auto* r = new mcg_report{run_suite(suite, opt)};
        *out = r;
        return r->rep.all_passed() ? MCG_OK : MCG_ERR_VERIFY;
    } catch (const DataError& ex) {
        return fail(e, MCG_ERR_DATA, ex.what());
    } catch (const std::exception& ex) {
        return fail(e, MCG_ERR_INTERNAL, ex.what());
    } catch (...) {
        return fail(e, MCG_ERR_INTERNAL, "unknown error");
    }
}

int mcg_report_size(const mcg_report* r) { return r ? int(r->rep.results.size()) : 0; }

int mcg_report_passed(const mcg_report* r) { return r ? r->rep.passed() : 0; }

int mcg_report_failed(const mcg_report* r) { return r ? r->rep.failed() : 0; }

int mcg_report_all_passed(const mcg_report* r) { return r && r->rep.all_passed() ? 1 : 0; }

const char* mcg_report_check_id(const mcg_report* r, int i) {
    return in_range(r, i) ? r->rep.results[size_t(i)].check_id.c_str() : nullptr;
}

const char* mcg_report_status(const mcg_report* r, int i) {
    if (!in_range(r, i)) return nullptr;
    switch (r->rep.results[size_t(i)].status) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::inconclusive: return "inconclusive";
    }
    return nullptr;
}

const char* mcg_report_expected(const mcg_report* r, int i) {
    return in_range(r, i) ? r->rep.results[size_t(i)].expected.c_str() : nullptr;
}

const char* mcg_report_computed(const mcg_report* r, int i) {
    return in_range(r, i) ? r->rep.results[size_t(i)].computed.c_str() : nullptr;
}

const char* mcg_report_provenance(const mcg_report* r, int i) {
    return in_range(r, i) ? r->rep.results[size_t(i)].provenance.c_str() : nullptr;
}

long mcg_report_elapsed_ms(const mcg_report* r, int i) {
    return in_range(r, i) ? r->rep.results[size_t(i)].elapsed_ms : -1;
}

char* mcg_report_to_json(const mcg_report* r, int indent) {
    if (!r) return nullptr;
    try {
        return dup_string(render_json(r->rep.to_json(), indent));
    } catch (...) {
        return nullptr;
    }
}

char* mcg_report_to_text(const mcg_report* r, int verbose) {
    if (!r) return nullptr;
    try {
        return dup_string(r->rep.to_text(verbose != 0));
    } catch (...) {
        return nullptr;
    }
}

void mcg_report_free(mcg_report* r) { delete r; }

char* mcg_group_json(int indent) {
    try {
        return dup_string(render_json(binary_icosahedral().to_json(), indent));
    } catch (...) {
        return nullptr;
    }
}

char* mcg_abelian_canonical(mcg_engine* e, const char* expr) {
    if (!e) return nullptr;
    if (!expr) {
        fail(e, MCG_ERR_USAGE, "null expression");
        return nullptr;
    }
    try {
        return dup_string(FGAbelianGroup::parse(expr).to_string());
    } catch (const std::exception& ex) {
        fail(e, MCG_ERR_USAGE, ex.what());
        return nullptr;
    }
}

void mcg_string_free(char* s) { std::free(s); }

const char* mcg_version(void) { return "1.0.0"; }

}  // extern "C"
