/*
 * Copyright 2026 The mseg authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the mseg library: exact multisegment combinatorics on
 * cuspidal towers and computable affine Hecke algebras over prime fields.
 *
 * Conventions:
 *   - Every function returns an mseg_status; results go through out
 *     parameters.  On failure the out parameters are untouched and
 *     mseg_last_error() describes the problem (thread local).
 *   - Strings returned through char** are heap allocated; release them with
 *     mseg_string_free().
 *   - Infinite values (the order of a characteristic-0 line, the derived
 *     invariant e) are encoded as 0 where noted.
 */

#ifndef MSEG_H
#define MSEG_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mseg_status {
  MSEG_OK = 0,
  MSEG_ERR_PARSE = 1,  /* malformed textual input */
  MSEG_ERR_DOMAIN = 2, /* violated precondition or domain restriction */
  MSEG_ERR_ARG = 3     /* null pointer or invalid handle */
} mseg_status;

typedef struct mseg_tower mseg_tower;
typedef struct mseg_mult mseg_mult;

const char* mseg_version(void);

/* Message for the most recent failure on this thread. */
const char* mseg_last_error(void);

void mseg_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Towers and arithmetic parameters                                    */

/* o0 = 0 means infinite order (characteristic 0 only); ell = 0 means
 * characteristic 0. */
mseg_status mseg_tower_create(int64_t o0, int64_t ell, int64_t degree,
                              mseg_tower** out);
/* Literal syntax: tower(o0=<INT|inf>, l=<INT>[, deg=<INT>]). */
mseg_status mseg_tower_parse(const char* text, mseg_tower** out);
mseg_status mseg_tower_format(const mseg_tower* t, char** out);
void mseg_tower_free(mseg_tower* t);

/* Derived invariant e of the base line; 0 encodes infinity. */
mseg_status mseg_tower_effective_e(const mseg_tower* t, int64_t* out_e);

/* n = 1 or n = e * ell^r for some r >= 0 (e = 0 meaning infinity). */
mseg_status mseg_cuspidal_lengths(int64_t e, int64_t ell, int64_t n, int* out);

typedef struct mseg_invariants {
  int64_t n, f, o, e, b, s; /* o, e: 0 encodes infinity */
} mseg_invariants;

/* Invariants of the level-r cuspidal over a supercuspidal base. */
mseg_status mseg_st_invariants(const mseg_invariants* base, int64_t ell, int64_t r,
                               mseg_invariants* out);

/* ------------------------------------------------------------------ */
/* Partitions (text form "(3,1,1)"; "()" is empty)                     */

mseg_status mseg_partition_conjugate(const char* mu, char** out);
mseg_status mseg_partition_dominates(const char* mu, const char* nu, int* out);
mseg_status mseg_partition_add(const char* mu, const char* nu, char** out);
/* e = 0 encodes infinity. */
mseg_status mseg_partition_is_e_regular(const char* mu, int64_t e, int* out);
/* JSON array of partition strings plus the count. */
mseg_status mseg_partition_enum_e_regular(int64_t n, int64_t e, char** out_json,
                                          int64_t* out_count);

/* ------------------------------------------------------------------ */
/* Multisegments                                                       */

/* DSL: <term> ('+' <term>)*, term (INT '*')? '[' INT ',' INT ']' '@'
 * ('sc' | 'c' INT); "0" is the zero multisegment. */
mseg_status mseg_mult_parse(const mseg_tower* t, const char* text, mseg_mult** out);
mseg_status mseg_mult_format(const mseg_mult* m, char** out);
void mseg_mult_free(mseg_mult* m);

mseg_status mseg_mult_degree(const mseg_mult* m, int64_t* out);
mseg_status mseg_mult_sc(const mseg_mult* m, mseg_mult** out);
/* Strict: the input must be supercuspidal. */
mseg_status mseg_mult_ap(const mseg_mult* m, mseg_mult** out);
mseg_status mseg_mult_is_aperiodic(const mseg_mult* m, int* out);
mseg_status mseg_mult_mu(const mseg_mult* m, char** out_partition);
mseg_status mseg_mult_dual(const mseg_mult* m, mseg_mult** out);
/* Support as a multisegment of length-1 segments. */
mseg_status mseg_mult_support(const mseg_mult* m, mseg_mult** out);
mseg_status mseg_mult_classify_equal(const mseg_mult* a, const mseg_mult* b, int* out);

/* Full classification document:
 * {"tower","input","sc","ap","mu","cusp","scusp"}. */
mseg_status mseg_mult_classify_json(const mseg_mult* m, char** out_json);

/* Both operands must be single segments (one term, multiplicity 1). */
mseg_status mseg_mult_linked(const mseg_mult* a, const mseg_mult* b, int* out_linked,
                             int* out_precedes_ab, int* out_precedes_ba);

/* Enumerate multisegments whose support equals the support of the given
 * multisegment text.  JSON array of canonical strings. */
mseg_status mseg_mult_enum(const mseg_tower* t, const char* support_text,
                           int aperiodic_only, char** out_json, int64_t* out_count);

/* ------------------------------------------------------------------ */
/* Hecke algebra computations over F_p                                 */

mseg_status mseg_hecke_check_relations(int64_t n, int64_t p, int64_t xi,
                                       int64_t trials, uint64_t seed,
                                       char** out_json);
mseg_status mseg_hecke_standard_module(int64_t a, int64_t b, int64_t p, int64_t xi,
                                       int dump_matrices, char** out_json);
/* chars: semicolon- or comma-separated "Z(a,b)", "L(a,b)", "X(z)" terms;
 * alpha_csv optional (defaults to the character ranks). */
mseg_status mseg_hecke_induce(int64_t p, int64_t xi, const char* alpha_csv,
                              const char* chars, uint64_t seed, int dump_matrices,
                              char** out_json);
/* seg1/seg2: "[a,b]" on the line of xi. */
mseg_status mseg_hecke_bridge(const char* seg1, const char* seg2, int64_t p,
                              int64_t xi, uint64_t seed, char** out_json);

/* ------------------------------------------------------------------ */
/* Finite-group side labels                                            */

/* e = 0 encodes infinity. */
mseg_status mseg_finite_st_cuspidal(int64_t e, int64_t ell, int64_t n, int* out);
mseg_status mseg_finite_subquotients(const char* mu, char** out_json);
mseg_status mseg_finite_count_scusp(int64_t n, int64_t* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MSEG_H */
