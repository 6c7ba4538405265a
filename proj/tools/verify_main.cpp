// Command-line front end. Talks to the engine exclusively through the C
// interface, so it doubles as a smoke test of that boundary.

#include <mcgcert.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

namespace {

int write_text_file(const std::string& path, const char* content) {
    std::ofstream out(path);
    if (!out) {
        std::fprintf(stderr, "verify: cannot open %s for writing\n", path.c_str());
        return 2;
    }
    std::string s(content);
    out << s;
    if (!s.empty() && s.back() != '\n') out << "\n";
    return out.good() ? 0 : 2;
}

std::string suite_list() {
    std::string s = "all";
    for (int i = 0; i < mcg_suite_count(); ++i) {
        s += ", ";
        s += mcg_suite_name(i);
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Re-derives the certified invariants and reports each check."};
    app.name("verify");

    std::string suite, data_path, json_path;
    long t1 = 0;
    bool verbose = false, dump_group = false;

    app.add_option("suite", suite, "suite to run (" + suite_list() + ")");
    app.add_option("--data", data_path, "path to the stable-range tables");
    app.add_option("--json", json_path, "also write the report as JSON to this file");
    app.add_flag("--verbose", verbose, "include provenance and per-check timings");
    auto* t1_opt =
        app.add_option("--t1", t1, "override the transfer parameter (odd integer)");
    app.add_flag("--dump-group", dump_group,
                 "emit the exact group model as JSON instead of running checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (dump_group) {
        char* js = mcg_group_json(2);
        if (!js) {
            std::fprintf(stderr, "verify: could not serialize the group model\n");
            return 2;
        }
        int rc = 0;
        if (!json_path.empty()) {
            rc = write_text_file(json_path, js);
        } else {
            std::fputs(js, stdout);
            std::fputc('\n', stdout);
        }
        mcg_string_free(js);
        return rc;
    }

    if (suite.empty()) {
        std::fprintf(stderr, "verify: missing suite; expected one of %s\n",
                     suite_list().c_str());
        return 2;
    }
    if (!mcg_is_suite(suite.c_str())) {
        std::fprintf(stderr, "verify: unknown suite \"%s\"; expected one of %s\n",
                     suite.c_str(), suite_list().c_str());
        return 2;
    }

    mcg_engine* eng = mcg_engine_new();
    if (!eng) {
        std::fprintf(stderr, "verify: out of memory\n");
        return 2;
    }

    int rc = 2;
    mcg_report* rep = nullptr;
    do {
        if (!data_path.empty() &&
            mcg_set_data_path(eng, data_path.c_str()) != MCG_OK) {
            std::fprintf(stderr, "verify: %s\n", mcg_last_error(eng));
            break;
        }
        if (t1_opt->count() > 0 && mcg_set_transfer_parameter(eng, t1) != MCG_OK) {
            std::fprintf(stderr, "verify: %s\n", mcg_last_error(eng));
            break;
        }

        mcg_status st = mcg_run_suite(eng, suite.c_str(), &rep);
        if (st != MCG_OK && st != MCG_ERR_VERIFY) {
            std::fprintf(stderr, "verify: %s\n", mcg_last_error(eng));
            break;
        }

        char* text = mcg_report_to_text(rep, verbose ? 1 : 0);
        if (text) {
            std::fputs(text, stdout);
            mcg_string_free(text);
        }

        if (!json_path.empty()) {
            char* js = mcg_report_to_json(rep, 2);
            if (!js) {
                std::fprintf(stderr, "verify: could not serialize the report\n");
                break;
            }
            int wrc = write_text_file(json_path, js);
            mcg_string_free(js);
            if (wrc != 0) break;
        }

        rc = st == MCG_OK ? 0 : 1;
    } while (false);

    mcg_report_free(rep);
    mcg_engine_free(eng);
    return rc;
}
