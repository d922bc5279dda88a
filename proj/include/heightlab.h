/*
 * heightlab — exact Arakelov heights, semistability tests, drift
 * experiments and flag-variety constants over the rationals.
 *
 * C interface to the shared library. All objects are opaque handles owned
 * by the library; every function returning HL_OK on success sets a
 * thread-local error message retrievable via hl_last_error() on failure.
 * Strings returned through char** are allocated by the library and must be
 * released with hl_string_free().
 *
 * Report-producing calls take an options JSON string, e.g.
 *   {"format":"json","digits":6,"seed":7,"echo":{"lattice":"g.json"}}
 * Unknown keys are ignored; "echo" entries are copied into the report
 * header so runs are self-describing and byte-reproducible.
 */

#ifndef HEIGHTLAB_H
#define HEIGHTLAB_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hl_status {
    HL_OK = 0,
    HL_ERR_NULL = 1,
    HL_ERR_PARSE = 2,
    HL_ERR_INVALID = 3,
    HL_ERR_INTERNAL = 4
} hl_status;

typedef struct hl_lattice hl_lattice;
typedef struct hl_rep hl_rep;
typedef struct hl_point hl_point;
typedef struct hl_gens hl_gens;

const char* hl_version(void);
/* Thread-local message describing the most recent failure. */
const char* hl_last_error(void);
void hl_string_free(char* s);

/* ---- object lifecycle -------------------------------------------------- */

hl_status hl_lattice_parse(const char* json, hl_lattice** out);
void hl_lattice_free(hl_lattice* lat);

hl_status hl_rep_parse(const char* json, hl_rep** out);
void hl_rep_free(hl_rep* rep);

hl_status hl_point_parse(const hl_rep* rep, const char* json, hl_point** out);
void hl_point_free(hl_point* p);
/* 1 when the covector was not primitive and its content was divided out. */
hl_status hl_point_was_normalized(const hl_point* p, int* normalized);

hl_status hl_gens_parse(const char* json, hl_gens** out);
/* Built-in characteristic-coefficient generators for the adjoint of SL_N. */
hl_status hl_gens_adjoint(int n, hl_gens** out);
void hl_gens_free(hl_gens* g);

/* ---- queries ------------------------------------------------------------ */

/* Arakelov degree of the lattice as "logv:p/q". */
hl_status hl_lattice_degree(const hl_lattice* lat, char** out);
/* Height of the point as "logv:p/q". */
hl_status hl_point_height(const hl_lattice* lat, const hl_rep* rep,
                          const hl_point* p, char** out);
/* Decimal rendering of a "logv:p/q" value. */
hl_status hl_logv_to_decimal(const char* logv, int digits, char** out);

/* ---- reports ------------------------------------------------------------ */

hl_status hl_report_degree(const hl_lattice* lat, const char* options_json,
                           char** out);
hl_status hl_report_height(const hl_lattice* lat, const hl_rep* rep,
                           const hl_point* p, const char* options_json,
                           char** out);
hl_status hl_report_rep_info(const hl_rep* rep, const char* options_json,
                             char** out);
/* gens may be NULL; options keys: budget (instability search iterations). */
hl_status hl_report_semistable(const hl_rep* rep, const hl_point* p,
                               const hl_gens* gens, const char* options_json,
                               char** out);
/* gens may be NULL for adjoint representations (built-ins are used). For
 * non-homogeneous representations pass per-component generator sets through
 * the options key "components" instead. On success *satisfied is 1 when the
 * certified floor holds. */
hl_status hl_report_check_bound(const hl_lattice* lat, const hl_rep* rep,
                                const hl_point* p, const hl_gens* gens,
                                const char* options_json, char** out,
                                int* satisfied);
/* lambda_json: {"schema":1,"r":[...]}; options keys: base, steps. */
hl_status hl_report_drift(const hl_lattice* lat, const hl_rep* rep,
                          const hl_point* p, const char* lambda_json,
                          const char* options_json, char** out);
hl_status hl_report_flag_constants(int n, const char* options_json, char** out);

/* Batch experiments (adjoint representations): options keys count, seed,
 * and for drift also base, steps. *all_ok is 1 when no instance failed. */
hl_status hl_report_bound_suite(const hl_rep* rep, const char* options_json,
                                char** out, int* all_ok);
hl_status hl_report_drift_suite(const hl_rep* rep, const char* options_json,
                                char** out, int* all_ok);

#ifdef __cplusplus
}
#endif

#endif /* HEIGHTLAB_H */
