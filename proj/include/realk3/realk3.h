/*
Copyright 2026 the realk3 authors
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

/*
 * C API of librealk3: classification of connected components of moduli of
 * real polarized K3 surfaces from their lattice invariants, and the
 * hyper-elliptic deformability test.
 *
 * All inputs and outputs are JSON strings (schemas in SCHEMA.md). Output
 * strings are heap-allocated; release them with rk3_string_free. Every call
 * leaves a human-readable message in the session on failure. A session is
 * not thread-safe; create one per thread.
 */

#ifndef REALK3_H
#define REALK3_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  RK3_OK = 0,
  RK3_ERR_INTERNAL = 1,
  RK3_ERR_INVALID_INVARIANTS = 2,
  RK3_ERR_BAD_INPUT = 3,
  RK3_ERR_GROUP_TOO_LARGE = 4,
  RK3_ERR_DOMAIN = 5,
  RK3_ERR_MISSING_FLAGS = 6
} rk3_status;

typedef struct rk3_session rk3_session; /* opaque */

rk3_session* rk3_session_new(void);
void rk3_session_free(rk3_session* s);

/* Search bound for orthogonal groups of finite forms (default 20000). */
void rk3_session_set_group_bound(rk3_session* s, long bound);
long rk3_session_group_bound(const rk3_session* s);

/* Message of the last failed call on this session; empty string otherwise.
 * Owned by the session. */
const char* rk3_session_last_error(const rk3_session* s);

void rk3_string_free(char* s);

/* Validation report for a genus-invariant tuple
 * {"r","a","delta_phi","k","n","delta_P","delta_phiP"}. */
rk3_status rk3_validate(rk3_session* s, const char* inv_json, char** out_json);

/* All realizable (r, a, delta_phi) triples. */
rk3_status rk3_enumerate_rad(rk3_session* s, char** out_json);

/* All valid invariant tuples for the even degree n (decimal string). */
rk3_status rk3_enumerate_genus(rk3_session* s, const char* n_decimal, char** out_json);

/* Number of connected components of moduli for valid invariants. */
rk3_status rk3_components_count(rk3_session* s, const char* inv_json, char** out_json);

/* One descriptor per connected component. */
rk3_status rk3_components_list(rk3_session* s, const char* inv_json, char** out_json);

/* Hyper-elliptic deformability verdict. flags_json may be NULL, or
 * {"standard":bool,"over2":bool} for the (19,1)/(19,3) regimes at n >= 6. */
rk3_status rk3_deformable(rk3_session* s, const char* inv_json, const char* flags_json,
                          char** out_json);

/* The hyper-elliptic construction families admissible at n. */
rk3_status rk3_case_table(rk3_session* s, const char* n_decimal, char** out_json);

/* Discriminant form of an even Gram matrix given as a JSON array of rows. */
rk3_status rk3_lattice_disc_form(rk3_session* s, const char* gram_json, char** out_json);

/* Full orthogonal group of a finite quadratic or bilinear form
 * {"orders":[...],"q":[...]} or {"orders":[...],"b":[[...]]}. */
rk3_status rk3_form_aut(rk3_session* s, const char* form_json, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* REALK3_H */
