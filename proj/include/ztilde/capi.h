/*
   Copyright 2026 The ztilde authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/* C interface of the ztilde shared library.
 *
 * Every function returns a zt_status; ZT_OK means the call ran to completion
 * (a verification that ran and answered "no" is still ZT_OK with *verdict set
 * to 0).  On any other status, zt_last_error() returns a thread-local,
 * human-readable description of what went wrong.
 *
 * Strings returned through char** are heap-allocated copies owned by the
 * caller; release them with zt_string_free.  Out parameters may be NULL when
 * the caller does not need the value, except where noted.
 *
 * The zt_cmd_* family implements whole command pipelines over files; each
 * produces an ordered key:value report describing inputs (with content
 * digests), parameters, results, and timing.
 */
#ifndef ZTILDE_CAPI_H
#define ZTILDE_CAPI_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zt_status {
    ZT_OK = 0,
    ZT_EPARSE = 1,      /* malformed textual input */
    ZT_EVALIDATE = 2,   /* structurally invalid object or argument mismatch */
    ZT_ENOTACYCLIC = 3, /* operation needs an acyclic complex */
    ZT_ENOSOLUTION = 4, /* exact linear system is unsolvable */
    ZT_EIO = 5,         /* file could not be read or written */
    ZT_EARG = 6,        /* bad call arguments (null pointers, bad flags) */
    ZT_EINTERNAL = 7    /* unexpected failure; please report */
} zt_status;

/* Message for the most recent failing call on this thread ("" if none). */
const char* zt_last_error(void);

void zt_string_free(char* s);

/* ---- objects ------------------------------------------------------------ */

typedef struct zt_complex zt_complex;
typedef struct zt_endo zt_endo;
typedef struct zt_diagram_sum zt_diagram_sum;

zt_status zt_complex_parse(const char* text, zt_complex** out);
zt_status zt_complex_serialize(const zt_complex* c, char** out);
void zt_complex_free(zt_complex* c);

/* ZT_OK when valid; ZT_EVALIDATE (with message) when not. */
zt_status zt_complex_validate(const zt_complex* c);
zt_status zt_complex_check_acyclic(const zt_complex* c, int* acyclic);
zt_status zt_complex_find_propagator(const zt_complex* c, zt_endo** out);

/* Endomorphism text is parsed against its complex (shapes and names). */
zt_status zt_endo_parse(const char* text, const zt_complex* c, zt_endo** out);
zt_status zt_endo_serialize(const zt_endo* e, const zt_complex* c, char** out);
void zt_endo_free(zt_endo* e);
zt_status zt_endo_is_propagator(const zt_complex* c, const zt_endo* e, int* ok);

zt_status zt_diagram_sum_parse(const char* text, zt_diagram_sum** out);
zt_status zt_diagram_sum_serialize(const zt_diagram_sum* d, char** out);
void zt_diagram_sum_free(zt_diagram_sum* d);
zt_status zt_diagram_sum_equal(const zt_diagram_sum* a, const zt_diagram_sum* b, int* eq);
zt_status zt_diagram_sum_reduce(const zt_diagram_sum* d, int max_abs_exp, int max_den_deg,
                                zt_diagram_sum** out);

/* ---- command pipelines --------------------------------------------------- */

/* Validate + acyclicity.  *verdict: 1 = valid and acyclic, 0 = well-formed
 * but invalid or not acyclic (details in the report). */
zt_status zt_cmd_check(const char* complex_path, char** report, int* verdict);

/* Solve for a propagator; *propagator_text receives the serialized result. */
zt_status zt_cmd_propagator(const char* complex_path, char** report, char** propagator_text);

/* Homology presentation over the Laurent ring. */
zt_status zt_cmd_homology(const char* complex_path, char** report, char** presentation_text);

/* Trace a colored or weighted graph against slot bindings. */
zt_status zt_cmd_trace(const char* graph_path, const char* colors_path,
                       const char* bindings_path, char** report, char** sum_text);

/* Full pipeline: per-pattern count tables (each carrying its sign pattern and
 * slot bindings), one shared anomaly file; orientation sum, anomaly
 * correction, and (when use_truncation) relation reduction. */
zt_status zt_cmd_invariant(const char* const* count_paths, size_t n_count_paths,
                           const char* anomaly_path, int use_truncation, int max_abs_exp,
                           int max_den_deg, char** report, char** sum_text);

/* Reduce a diagram-sum file modulo relations; without use_truncation the
 * tightest truncation containing the input is used. */
zt_status zt_cmd_reduce(const char* sum_path, int use_truncation, int max_abs_exp,
                        int max_den_deg, char** report, char** sum_text);

zt_status zt_cmd_verify_o_cycle(const char* complex_path, const char* propagator_path,
                                char** report, int* verdict);

/* Hypersurface-slide naturality at one slot: conjugate the complex/propagator
 * bound to 1-based slot `slot` by the generator's basis change and transform
 * the weight accordingly; *verdict reports whether the traces agree. */
zt_status zt_cmd_verify_sp(const char* graph_path, const char* colors_path,
                           const char* bindings_path, int slot, const char* generator, int sign,
                           char** report, int* verdict);

/* Degree-zero cancellation over a degenerate count table; residual_text
 * (optional) receives the surviving sum ("0" when everything cancels). */
zt_status zt_cmd_verify_cancellation(const char* table_path, char** report, int* verdict,
                                     char** residual_text);

/* Same count table traced against two propagator families; alt_bindings must
 * reference the identical complexes. */
zt_status zt_cmd_verify_propagator_independence(const char* table_path,
                                                const char* alt_bindings_path, int use_truncation,
                                                int max_abs_exp, int max_den_deg, char** report,
                                                int* verdict, char** residual_text);

/* Slide `from` over `to` with the given Laurent coefficient; checks the
 * updated propagator identity and the exact commutator difference. */
zt_status zt_cmd_verify_handle_slide(const char* complex_path, const char* propagator_path,
                                     const char* from_gen, const char* to_gen, const char* coeff,
                                     char** report, int* verdict);

zt_status zt_cmd_gen_complex(uint64_t seed, const int sizes[4], int degree_bound, char** report,
                             char** complex_text, char** propagator_text);

/* Reversed-flow pair: degree i becomes 3-i, matrices become bar-involuted
 * transposes.  Needed to assemble the '-' orientation slots of an invariant
 * run. */
zt_status zt_cmd_gen_reversed(const char* complex_path, const char* propagator_path, char** report,
                              char** complex_text, char** propagator_text);

zt_status zt_cmd_gen_graphs(int k, char** report, char** graphs_text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif
