/* C interface to the verification engine.
 *
 * Everything behind this header runs exact arithmetic; no floats arrive or
 * leave. The engine object carries configuration (data path, transfer
 * parameter) and the last error message; reports are immutable snapshots of
 * one suite run. All strings returned as char* are heap copies owned by the
 * caller and released with mcg_string_free; const char* results point into
 * the engine or report and stay valid while that object lives.
 */

#ifndef MCGCERT_H
#define MCGCERT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mcg_status {
    MCG_OK = 0,          /* call succeeded; for runs: every check passed */
    MCG_ERR_VERIFY = 1,  /* run completed but at least one check did not pass */
    MCG_ERR_DATA = 2,    /* missing, malformed, or inconsistent data file */
    MCG_ERR_USAGE = 3,   /* bad argument (unknown suite, null pointer, ...) */
    MCG_ERR_INTERNAL = 4 /* invariant violation inside the engine */
} mcg_status;

typedef struct mcg_engine mcg_engine;
typedef struct mcg_report mcg_report;

mcg_engine* mcg_engine_new(void);
void mcg_engine_free(mcg_engine* e);

/* Message of the most recent failed call on this engine; never null. */
const char* mcg_last_error(const mcg_engine* e);

/* Location of the stable-range tables (default "data/stable_tables.json").
 * The file is read and validated on each run, not here. */
mcg_status mcg_set_data_path(mcg_engine* e, const char* path);

/* Overrides the transfer parameter from the data file; must be odd. */
mcg_status mcg_set_transfer_parameter(mcg_engine* e, long t1);
mcg_status mcg_clear_transfer_parameter(mcg_engine* e);

/* Named suites, excluding the umbrella "all". */
int mcg_suite_count(void);
const char* mcg_suite_name(int i); /* null if out of range */
int mcg_is_suite(const char* name); /* 1 also for "all" */

/* Runs one suite (or "all"). On MCG_OK and MCG_ERR_VERIFY a report is
 * stored in *out and must be freed with mcg_report_free; on any other
 * status *out is null and mcg_last_error explains. */
mcg_status mcg_run_suite(mcg_engine* e, const char* suite, mcg_report** out);

int mcg_report_size(const mcg_report* r);
int mcg_report_passed(const mcg_report* r);
int mcg_report_failed(const mcg_report* r);
int mcg_report_all_passed(const mcg_report* r);

/* Per-check fields; i in [0, mcg_report_size). Null if out of range. */
const char* mcg_report_check_id(const mcg_report* r, int i);
const char* mcg_report_status(const mcg_report* r, int i); /* "pass" etc. */
const char* mcg_report_expected(const mcg_report* r, int i);
const char* mcg_report_computed(const mcg_report* r, int i);
const char* mcg_report_provenance(const mcg_report* r, int i);
long mcg_report_elapsed_ms(const mcg_report* r, int i); /* -1 out of range */

/* indent < 0 gives the compact single-line form. */
char* mcg_report_to_json(const mcg_report* r, int indent);
char* mcg_report_to_text(const mcg_report* r, int verbose);
void mcg_report_free(mcg_report* r);

/* Exact coordinates, Cayley table, and inverses of the order-120 group. */
char* mcg_group_json(int indent);

/* Canonical form of a finitely generated abelian group expression; accepts
 * both separators, e.g. "Z/4 + Z/6" -> "Z/2 ⊕ Z/12". Null on a parse
 * error, with the message on the engine. */
char* mcg_abelian_canonical(mcg_engine* e, const char* expr);

void mcg_string_free(char* s);

const char* mcg_version(void);

#ifdef __cplusplus
}
#endif

#endif /* MCGCERT_H */
