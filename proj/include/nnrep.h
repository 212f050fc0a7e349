/* C interface to the nearest-neighbor representation toolkit.
 *
 * Conventions:
 *  - Every fallible call returns an nnrep_status; NNREP_OK is 0. On failure
 *    a thread-local message is readable through nnrep_last_error().
 *  - Output strings are heap-allocated, NUL-terminated, and owned by the
 *    caller; release them with nnrep_string_free().
 *  - Output object handles are owned by the caller; release them with the
 *    matching *_free(). Free functions accept NULL.
 *  - Boolean points are passed as comma-separated bits, x1 first: "1,0,1".
 *  - Function specs use the mini-language
 *      parity:n | maj:n | th:n:t[:w1,...,wn] | ip:n | sym:n[:l1,l2,...] |
 *      table:n:<hex>
 *    with exact rational literals ("p" or "p/q") allowed as thresholds and
 *    weights.
 */
#ifndef NNREP_H
#define NNREP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nnrep_status {
  NNREP_OK = 0,
  NNREP_ERR_PARSE = 1,                  /* malformed spec, point, or JSON */
  NNREP_ERR_DIMENSION = 2,              /* arity/dimension disagreement */
  NNREP_ERR_ARITY = 3,                  /* arity outside a supported range */
  NNREP_ERR_EMPTY = 4,                  /* classification with no prototypes */
  NNREP_ERR_K_TOO_LARGE = 5,            /* k exceeds the prototype count */
  NNREP_ERR_INVALID_REPRESENTATION = 6, /* duplicate or double-labeled point */
  NNREP_ERR_CONSTRUCTION = 7,           /* a construction failed its re-check */
  NNREP_ERR_COMPILE = 8,                /* polynomial compilation failed */
  NNREP_ERR_INVALID_ARGUMENT = 9,       /* other argument violations */
  NNREP_ERR_NOMEM = 10,                 /* allocation failure */
  NNREP_ERR_INTERNAL = 11               /* unexpected failure */
} nnrep_status;

typedef struct nnrep_function nnrep_function;
typedef struct nnrep_representation nnrep_representation;
typedef struct nnrep_polynomial nnrep_polynomial;
typedef struct nnrep_ldt nnrep_ldt;

/* Library version as "major.minor.patch"; static storage, do not free. */
const char* nnrep_version(void);

/* Message of the calling thread's most recent failure; "" after successes.
 * Static storage, do not free. */
const char* nnrep_last_error(void);

void nnrep_string_free(char* text);

/* ----- Boolean functions ----- */

nnrep_status nnrep_function_parse(const char* spec, nnrep_function** out);
void nnrep_function_free(nnrep_function* f);
/* Arity, or -1 when f is NULL. */
int nnrep_function_arity(const nnrep_function* f);
/* 0 or 1, or -1 when the assignment index is out of range. */
int nnrep_function_value(const nnrep_function* f, uint32_t assignment);
/* Canonical "table:n:<hex>" spec text. */
nnrep_status nnrep_function_table_text(const nnrep_function* f, char** out);

/* ----- Representations ----- */

nnrep_status nnrep_representation_parse(const char* json, nnrep_representation** out);
nnrep_status nnrep_representation_to_json(const nnrep_representation* rep, char** out);
void nnrep_representation_free(nnrep_representation* rep);
int nnrep_representation_dimension(const nnrep_representation* rep);
size_t nnrep_representation_positive_count(const nnrep_representation* rep);
size_t nnrep_representation_negative_count(const nnrep_representation* rep);

/* Builds a representation for the function given by `spec`. Methods:
 *   "symmetric"     parity:, maj:, sym: (diagonal prototypes, size n+1)
 *   "threshold"     th:, maj: (two prototypes)
 *   "majority-bnn"  maj: (Boolean prototypes)
 *   "parity-bnn"    parity:, arity <= 16 (all 2^n points)
 *   "covering"      any function of arity <= 12 (ball-covering cells)
 * A method applied to a function family it does not support fails with
 * NNREP_ERR_INVALID_ARGUMENT. */
nnrep_status nnrep_construct(const char* spec, const char* method, nnrep_representation** out);

/* ----- Classification and verification ----- */

/* Labels one point: 0 negative, 1 positive, 2 tie/undefined. k = 1 is plain
 * nearest-neighbor classification. */
nnrep_status nnrep_classify(const nnrep_representation* rep, const char* point, int k,
                            int* label_out);

/* Checks rep against f on all 2^n points under k-nearest classification.
 * ok_out becomes 1 only when every point matches with no ties. report_out
 * (optional) receives JSON when as_json is nonzero, plain text otherwise. */
nnrep_status nnrep_verify(const nnrep_function* f, const nnrep_representation* rep, int k,
                          int as_json, int* ok_out, char** report_out);

/* ----- Exact minimization ----- */

/* Models:
 *   "bnn"   smallest Boolean-prototype representation (k ignored)
 *   "knn"   smallest Boolean-prototype k-nearest representation
 *   "grid"  smallest subset of the default rational grid (k ignored)
 * max_size 0 means no size cutoff (required nonzero for "knn" and "grid");
 * time_limit_ms 0 means no time limit. On return, optimum_out is the exact
 * minimum size or -1 when the search stopped at its cutoff; summary_out
 * (optional) receives a JSON summary including the witness; witness_out
 * (optional) receives the witness representation when one was found. */
nnrep_status nnrep_minimize(const char* spec, const char* model, int k, uint64_t max_size,
                            uint64_t time_limit_ms, int64_t* optimum_out, char** summary_out,
                            nnrep_representation** witness_out);

/* ----- Polynomial compilation ----- */

/* Compiles a verified representation of f into a polynomial whose sign
 * matches f on every Boolean input (one monomial per prototype). */
nnrep_status nnrep_compile_ptf(const nnrep_function* f, const nnrep_representation* rep,
                               nnrep_polynomial** out);
nnrep_status nnrep_polynomial_parse(const char* json, nnrep_polynomial** out);
nnrep_status nnrep_polynomial_to_json(const nnrep_polynomial* poly, char** out);
/* Compiler parameters {"B","M","A"}; fails with NNREP_ERR_INVALID_ARGUMENT
 * for parsed polynomials, which carry no parameters. */
nnrep_status nnrep_polynomial_params_json(const nnrep_polynomial* poly, char** out);
void nnrep_polynomial_free(nnrep_polynomial* poly);
/* Term count, or 0 when poly is NULL. */
size_t nnrep_polynomial_term_count(const nnrep_polynomial* poly);

/* Exact sign (-1, 0, +1) at a Boolean point; 0 classifies as positive. */
nnrep_status nnrep_eval_sign(const nnrep_polynomial* poly, const char* point, int* sign_out);

/* Checks (sign >= 0) == f on all inputs; report_out (optional) lists
 * disagreeing assignment indices as a JSON array. */
nnrep_status nnrep_verify_ptf(const nnrep_function* f, const nnrep_polynomial* poly, int* ok_out,
                              char** report_out);

/* Strict dominance diagnostic: at every input the largest agreeing monomial
 * outweighs the entire opposing side. */
nnrep_status nnrep_check_margin(const nnrep_function* f, const nnrep_polynomial* poly,
                                int* ok_out);

/* JSON {"function","terms","bound","meets","tight"} comparing the term count
 * against the smallest possible for the function named by `spec`. */
nnrep_status nnrep_term_count_report(const char* spec, const nnrep_polynomial* poly, char** out);

/* ----- Linear decision trees ----- */

nnrep_status nnrep_ldt_parse(const char* json, nnrep_ldt** out);
nnrep_status nnrep_ldt_to_json(const nnrep_ldt* tree, char** out);
void nnrep_ldt_free(nnrep_ldt* tree);
/* Longest root-to-leaf test count, or -1 when tree is NULL. */
int nnrep_ldt_depth(const nnrep_ldt* tree);
nnrep_status nnrep_ldt_eval(const nnrep_ldt* tree, const char* point, int* value_out);
/* equal_out: 1 when the tree computes f everywhere; witness_out (optional):
 * first disagreeing assignment index, -1 when equal. */
nnrep_status nnrep_ldt_check(const nnrep_function* f, const nnrep_ldt* tree, int* equal_out,
                             int64_t* witness_out);
/* Depth-1 tree from a representation with one prototype per side. */
nnrep_status nnrep_bisector_ldt(const nnrep_representation* rep, nnrep_ldt** out);

/* ----- Counted k-nearest classification ----- */

/* Classifies like nnrep_classify while counting exact distance comparisons;
 * bound_out (optional) receives the guaranteed ceiling
 * m(1 + ceil(log2(k+1))) + k ceil(log2 m). */
nnrep_status nnrep_knn_classify_counted(const nnrep_representation* rep, const char* point,
                                        int k, int* label_out, uint64_t* comparisons_out,
                                        uint64_t* bound_out);

/* ----- Combinatorial rectangle demo ----- */

/* Largest monochromatic rectangle of the 2^n x 2^n inner-product-parity
 * matrix, as JSON {"n","area","rows","cols","value"}; n <= 3. */
nnrep_status nnrep_max_mono_rectangle(int n, char** out);

/* ----- Batch experiments ----- */

/* kind: "random-bnn" | "covering-size" | "compile-sweep". Outputs are
 * deterministic in (kind, arity, samples, seed). csv_out and json_out are
 * both optional. */
nnrep_status nnrep_experiment_run(const char* kind, int arity, uint64_t samples, uint64_t seed,
                                  char** csv_out, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* NNREP_H */
