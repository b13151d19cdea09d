/*
   Copyright 2026 ffcircle developers

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
 * C interface of libffcircle: exact arithmetic in F_q[T] and the
 * circle-method experiment toolkit behind it.
 *
 * Conventions:
 *  - every function returns an ffc_status; results travel through out
 *    parameters;
 *  - objects are opaque handles released with the matching _free function;
 *  - strings returned through char** are heap-allocated; release them with
 *    ffc_string_free;
 *  - field elements are addressed by their canonical index in [0, q): the
 *    base-p packing of the coefficient vector over F_p, constant term least
 *    significant;
 *  - polynomials parse from comma-separated coefficients, high degree first
 *    ("1,0,2,1" is T^3+2T+1 over F_3), or from the human form "T^3+2*T+1";
 *  - field spec strings: "p", "q" (prime power, default modulus), "p^d", or
 *    "p^d/c_hi,...,c_lo" with explicit modulus coefficients;
 *  - report-producing calls emit JSON (format = "json") or CSV ("csv").
 */

#ifndef FFCIRCLE_H
#define FFCIRCLE_H

#include <stdint.h>

#if defined(_WIN32)
#define FFC_API __declspec(dllexport)
#else
#define FFC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ffc_status {
    FFC_OK = 0,
    FFC_ERR_INVALID_ARGUMENT = 1,
    FFC_ERR_PARSE = 2,
    FFC_ERR_DIVISION_BY_ZERO = 3,
    FFC_ERR_FIELD_MISMATCH = 4,
    FFC_ERR_CHARACTERISTIC_MISMATCH = 5,
    FFC_ERR_RESOURCE_LIMIT = 6,
    FFC_ERR_CONSTANT_INPUT = 7,
    FFC_ERR_ZERO_INPUT = 8,
    FFC_ERR_NOT_MONIC = 9,
    FFC_ERR_ZERO_DENOMINATOR = 10,
    FFC_ERR_NO_APPROXIMANT = 11,
    FFC_ERR_SCALAR_SUM_NOT_ONE = 12,
    FFC_ERR_PRECONDITION = 13,
    FFC_ERR_DEGREE_TOO_SMALL = 14,
    FFC_ERR_FILE_FORMAT = 15,
    FFC_ERR_SIZE_TOO_LARGE = 16,
    FFC_ERR_NO_VALID_SCALARS = 17,
    FFC_ERR_J_OUT_OF_RANGE = 18,
    FFC_ERR_IO = 19,
    FFC_ERR_INTERNAL = 20
} ffc_status;

typedef struct ffc_field ffc_field;
typedef struct ffc_poly ffc_poly;

FFC_API const char *ffc_version(void);
FFC_API const char *ffc_status_name(ffc_status status);
/* Message of the last failing call on this thread; empty if none. */
FFC_API const char *ffc_last_error(void);
FFC_API void ffc_string_free(char *s);

/* --- fields --- */

FFC_API ffc_status ffc_field_create(const char *spec, ffc_field **out);
FFC_API void ffc_field_free(ffc_field *field);
FFC_API ffc_status ffc_field_props(const ffc_field *field, uint32_t *p, uint32_t *d, uint64_t *q);
/* Canonical spec string, modulus included for extensions. */
FFC_API ffc_status ffc_field_spec(const ffc_field *field, char **out);

typedef enum ffc_elem_op {
    FFC_ELEM_ADD = 0,
    FFC_ELEM_SUB = 1,
    FFC_ELEM_MUL = 2,
    FFC_ELEM_INV = 3, /* unary; b ignored */
    FFC_ELEM_NEG = 4  /* unary; b ignored */
} ffc_elem_op;

FFC_API ffc_status ffc_elem_arith(const ffc_field *field, ffc_elem_op op, uint32_t a, uint32_t b,
                                  uint32_t *out);
/* Absolute trace into [0, p). */
FFC_API ffc_status ffc_elem_trace(const ffc_field *field, uint32_t a, uint32_t *out);
/* psi(a) = zeta_p^tr(a) as p integer coefficients of 1, zeta, ..., zeta^(p-1)
 * in canonical form (last coefficient 0); coeffs must hold p entries. */
FFC_API ffc_status ffc_elem_psi(const ffc_field *field, uint32_t a, int64_t *coeffs);

/* --- polynomials --- */

FFC_API ffc_status ffc_poly_parse(const ffc_field *field, const char *text, ffc_poly **out);
FFC_API void ffc_poly_free(ffc_poly *a);
FFC_API ffc_status ffc_poly_to_string(const ffc_poly *a, char **out);
/* deg 0 -> out = -1 (the zero polynomial has norm exponent -inf). */
FFC_API ffc_status ffc_poly_degree(const ffc_poly *a, int64_t *out);

typedef enum ffc_poly_op {
    FFC_POLY_ADD = 0,
    FFC_POLY_SUB = 1,
    FFC_POLY_MUL = 2,
    FFC_POLY_DIV = 3,
    FFC_POLY_MOD = 4,
    FFC_POLY_GCD = 5
} ffc_poly_op;

FFC_API ffc_status ffc_poly_arith(ffc_poly_op op, const ffc_poly *a, const ffc_poly *b,
                                  ffc_poly **out);
FFC_API ffc_status ffc_poly_is_irreducible(const ffc_poly *a, int *out);
/* JSON {"unit": u, "factors": [{"poly": "...", "multiplicity": e}, ...]} */
FFC_API ffc_status ffc_poly_factorize(const ffc_poly *a, char **json_out);
FFC_API ffc_status ffc_poly_mobius(const ffc_poly *a, int *out);
FFC_API ffc_status ffc_poly_lambda(const ffc_poly *a, int64_t *out);
FFC_API ffc_status ffc_poly_phi(const ffc_poly *a, uint64_t *out);
FFC_API ffc_status ffc_poly_max_irred_degree(const ffc_poly *a, int64_t *out);
FFC_API ffc_status ffc_count_irreducibles(const ffc_field *field, int64_t n, uint64_t *out);

/* --- command-level entry points (what the CLI calls) --- */

/* Dirichlet approximation of xi ("U/V") in window n; convention "floor" or
 * "strict". */
FFC_API ffc_status ffc_run_approx(const char *field_spec, const char *xi, int64_t n,
                                  const char *convention, const char *format, char **out);

/* Irreducibles of degree n in classes mod (ell leading coefficients, h). */
FFC_API ffc_status ffc_run_count_classes(const char *field_spec, int64_t n, int64_t ell,
                                         const char *h, const char *format, uint64_t cap,
                                         char **out);

/* Bound-lemma checker grids; lemma in {"va03", "irredsum", "fsmain"}, grid
 * "default" or "key=lo:hi;key=a,b;...". */
FFC_API ffc_status ffc_run_bounds(const char *lemma, const char *grid, const char *format,
                                  uint64_t seed, uint64_t cap, char **out);

/* Correlation I = sum u_G v_G for explicit scalars and set specs
 * ("all" | "random:SIZE[:SEED]" | file path). alpha, beta < 0 pick the
 * default valid pair. include_tables: 0 off, 1 on, -1 auto. */
FFC_API ffc_status ffc_run_correlate(const char *field_spec, int64_t n, int64_t j, int64_t alpha,
                                     int64_t beta, const char *set_a, const char *set_b,
                                     const char *format, uint64_t seed, uint64_t cap,
                                     int include_tables, char **out);

/* Full experiment from flat "key = value" config text (not a path). */
FFC_API ffc_status ffc_run_experiment(const char *config_text, const char *format, char **out);

/* Identity/property suites; level "quick" or "full". all_pass receives 1
 * when every suite passed. */
FFC_API ffc_status ffc_run_verify(const char *level, const char *format, uint64_t seed,
                                  uint64_t cap, int *all_pass, char **out);

#ifdef __cplusplus
}
#endif

#endif
