/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 superchan contributors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the superchan library. All objects are opaque handles
 * owned by the caller and released with the matching *_free function.
 * Every fallible call returns an sc_status; on failure a description is
 * available from sc_last_error() on the calling thread. Strings returned
 * through char** out-parameters are released with sc_string_free.
 *
 * Complex matrices cross the boundary as interleaved (re, im) doubles in
 * row-major order. Composite indices are big-endian (first subsystem most
 * significant).
 */
#ifndef SUPERCHAN_SUPERCHAN_H
#define SUPERCHAN_SUPERCHAN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SC_API __declspec(dllexport)
#elif defined(__GNUC__)
#define SC_API __attribute__((visibility("default")))
#else
#define SC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sc_status {
  SC_OK = 0,
  SC_ERR_INVALID_ARGUMENT = 1,
  SC_ERR_DIMENSION_MISMATCH = 2,
  SC_ERR_OUT_OF_RANGE = 3,
  SC_ERR_NOT_HERMITIAN = 4,
  SC_ERR_EIGENSOLVER = 5,
  SC_ERR_NOT_DU_COVARIANT = 6,
  SC_ERR_NOT_DO_COVARIANT = 7,
  SC_ERR_PARSE = 8,
  SC_ERR_IO = 9,
  SC_ERR_INTERNAL = 10
} sc_status;

typedef enum sc_uu_variant { SC_UU_COVARIANT = 0, SC_UU_CONJUGATE = 1, SC_UU_MIXED = 2 } sc_uu_variant;

typedef struct sc_channel sc_channel;
typedef struct sc_superchannel sc_superchannel;
typedef struct sc_du_params sc_du_params;
typedef struct sc_do_params sc_do_params;
typedef struct sc_dephasing_params sc_dephasing_params;
typedef struct sc_pauli_params sc_pauli_params;
typedef struct sc_report sc_report;

SC_API const char* sc_last_error(void);
SC_API const char* sc_status_name(sc_status status);
SC_API void sc_string_free(char* s);
SC_API const char* sc_version(void);
/* Text form used in reports (twelve significant digits, e.g. -1.0e-2).
 * Writes a NUL-terminated string; len >= 32 is always enough. */
SC_API sc_status sc_format_double(double x, char* buf, size_t len);

/* ---- reports ---------------------------------------------------------- */
SC_API void sc_report_free(sc_report* r);
SC_API int sc_report_passed(const sc_report* r);
SC_API sc_status sc_report_to_text(const sc_report* r, char** out);
SC_API sc_status sc_report_to_json(const sc_report* r, char** out);
/* Numeric or boolean entry by key; booleans read as 0/1. */
SC_API sc_status sc_report_get_double(const sc_report* r, const char* key, double* out);
SC_API sc_status sc_report_get_bool(const sc_report* r, const char* key, int* out);
SC_API size_t sc_report_violation_count(const sc_report* r);

/* ---- channels --------------------------------------------------------- */
SC_API void sc_channel_free(sc_channel* ch);
SC_API sc_status sc_channel_from_json(const char* json, sc_channel** out);
SC_API sc_status sc_channel_load(const char* path, sc_channel** out);
SC_API sc_status sc_channel_to_json(const sc_channel* ch, char** out);
SC_API sc_status sc_channel_from_choi(size_t d_in, size_t d_out, const double* re_im, sc_channel** out);
SC_API sc_status sc_channel_dims(const sc_channel* ch, size_t* d_in, size_t* d_out);
/* Writes 2*(d_in*d_out)^2 doubles. */
SC_API sc_status sc_channel_choi(const sc_channel* ch, double* re_im, size_t len);
/* Writes d_out*d_in doubles; S[a][i] = <i a|C|i a>. */
SC_API sc_status sc_channel_classical(const sc_channel* ch, double* s, size_t len);
SC_API sc_status sc_channel_validate(const sc_channel* ch, double tol, sc_report** out);
SC_API sc_status sc_channel_compose(const sc_channel* f, const sc_channel* g, sc_channel** out);
/* d_in x d_in state in, d_out x d_out state out. */
SC_API sc_status sc_channel_apply(const sc_channel* ch, const double* rho, double* out, size_t out_len);
/* Permits "du", "do", "haar", "conj-haar": V = U for all but conj-haar. */
SC_API sc_status sc_channel_covariance(const sc_channel* ch, const char* group, size_t samples, uint64_t seed,
                                       double tol, sc_report** out);

SC_API sc_status sc_channel_identity(size_t d, sc_channel** out);
SC_API sc_status sc_channel_depolarizing(size_t d, sc_channel** out);
SC_API sc_status sc_channel_transpose(size_t d, sc_channel** out);
SC_API sc_status sc_channel_amplitude_damping(double gamma, sc_channel** out);
SC_API sc_status sc_channel_bit_flip(double p, sc_channel** out);
SC_API sc_status sc_channel_pauli(const double p[4], sc_channel** out);
/* m is d x d interleaved complex. */
SC_API sc_status sc_channel_dephasing(size_t d, const double* m, sc_channel** out);
SC_API sc_status sc_channel_unitary_covariant(double lambda, size_t d, sc_channel** out);
SC_API sc_status sc_channel_conjugate_covariant(double mu, size_t d, sc_channel** out);
SC_API sc_status sc_channel_holevo_werner(size_t d, sc_channel** out);
SC_API sc_status sc_channel_orthogonal_covariant(double alpha, double beta, size_t d, sc_channel** out);

/* ---- generic superchannels ------------------------------------------- */
SC_API void sc_superchannel_free(sc_superchannel* s);
SC_API sc_status sc_superchannel_from_json(const char* json, sc_superchannel** out);
SC_API sc_status sc_superchannel_load(const char* path, sc_superchannel** out);
SC_API sc_status sc_superchannel_to_json(const sc_superchannel* s, char** out);
/* dims = {A0, A1, B0, B1} */
SC_API sc_status sc_superchannel_dims(const sc_superchannel* s, size_t dims[4]);
SC_API sc_status sc_superchannel_choi(const sc_superchannel* s, double* re_im, size_t len);
SC_API sc_status sc_superchannel_identity(size_t d_a0, size_t d_a1, sc_superchannel** out);
/* Theta[Phi] = n1 o Phi o n0^*; a superchannel when n0 is unital. */
SC_API sc_status sc_superchannel_sandwich(const sc_channel* n0, const sc_channel* n1, sc_superchannel** out);
SC_API sc_status sc_superchannel_apply(const sc_superchannel* s, const sc_channel* phi, sc_channel** out);
SC_API sc_status sc_superchannel_compose(const sc_superchannel* s2, const sc_superchannel* s1, sc_superchannel** out);
/* CP and marginal checks merged with the TP-preservation check. */
SC_API sc_status sc_superchannel_validate(const sc_superchannel* s, double tol, sc_report** out);
/* induced may be NULL. */
SC_API sc_status sc_superchannel_tp_check(const sc_superchannel* s, double tol, sc_report** out, sc_channel** induced);
/* group: "du", "do", "haar", "conj-haar", "mixed" */
SC_API sc_status sc_superchannel_covariance(const sc_superchannel* s, const char* group, size_t samples,
                                            uint64_t seed, double tol, sc_report** out);
/* Report of the two classical-layer properties; T may be NULL, else
 * receives (B0*B1) x (A0*A1) doubles. */
SC_API sc_status sc_superchannel_classical(const sc_superchannel* s, double tol, double* T, size_t len,
                                           sc_report** out);
SC_API sc_status sc_superchannel_uu(sc_uu_variant variant, const double p[4], size_t d, sc_superchannel** out);
SC_API sc_status sc_superchannel_uu_cp_closed_form(sc_uu_variant variant, const double p[4], size_t d, int* out);
SC_API sc_status sc_superchannel_holevo_werner(size_t d, sc_superchannel** out);

/* ---- diagonal-unitary covariant superchannels ------------------------ */
SC_API void sc_du_free(sc_du_params* p);
SC_API sc_status sc_du_from_json(const char* json, sc_du_params** out);
SC_API sc_status sc_du_load(const char* path, sc_du_params** out);
SC_API sc_status sc_du_to_json(const sc_du_params* p, char** out);
SC_API sc_status sc_du_dim(const sc_du_params* p, size_t* d);
SC_API sc_status sc_du_identity(size_t d, sc_du_params** out);
SC_API sc_status sc_du_build_choi(const sc_du_params* p, sc_superchannel** out);
SC_API sc_status sc_du_from_choi(const sc_superchannel* s, double tol, sc_du_params** out);
SC_API sc_status sc_du_tp_check(const sc_du_params* p, double tol, sc_report** out);
SC_API sc_status sc_du_cp_check(const sc_du_params* p, double tol, sc_report** out);
/* TP and CP checks plus the generic validation of the assembled Choi. */
SC_API sc_status sc_du_validate(const sc_du_params* p, double tol, sc_report** out);
SC_API sc_status sc_du_compose(const sc_du_params* p, const sc_du_params* q, sc_du_params** out);
SC_API sc_status sc_du_block_action(const sc_du_params* p, const sc_channel* phi, sc_channel** out);
SC_API sc_status sc_du_action_on_identity(const sc_du_params* p, sc_channel** out);
SC_API sc_status sc_du_preserves_do(const sc_du_params* p, size_t n, uint64_t seed, double tol, sc_report** out);
/* Entry of table 'A'..'D' at (ia),(jb); value written as (re, im). */
SC_API sc_status sc_du_entry(const sc_du_params* p, char table, size_t i, size_t a, size_t j, size_t b, double out[2]);

/* ---- diagonal-orthogonal covariant superchannels --------------------- */
SC_API void sc_do_free(sc_do_params* p);
SC_API sc_status sc_do_from_json(const char* json, sc_do_params** out);
SC_API sc_status sc_do_load(const char* path, sc_do_params** out);
SC_API sc_status sc_do_to_json(const sc_do_params* p, char** out);
SC_API sc_status sc_do_build_choi(const sc_do_params* p, sc_superchannel** out);
SC_API sc_status sc_do_from_choi(const sc_superchannel* s, double tol, sc_do_params** out);
SC_API sc_status sc_do_embed_du(const sc_du_params* p, sc_do_params** out);
SC_API sc_status sc_do_validate(const sc_do_params* p, double tol, sc_report** out);

/* ---- dephasing superchannels ----------------------------------------- */
SC_API void sc_dephasing_free(sc_dephasing_params* p);
SC_API sc_status sc_dephasing_from_json(const char* json, sc_dephasing_params** out);
SC_API sc_status sc_dephasing_load(const char* path, sc_dephasing_params** out);
SC_API sc_status sc_dephasing_to_json(const sc_dephasing_params* p, char** out);
/* Realization JSON: {"e":m, "U":[...], "V":[...], "psi":[...]} */
SC_API sc_status sc_dephasing_from_realization(const char* json, sc_dephasing_params** out);
SC_API sc_status sc_dephasing_validate(const sc_dephasing_params* p, double tol, sc_report** out);
SC_API sc_status sc_dephasing_choi(const sc_dephasing_params* p, sc_superchannel** out);
SC_API sc_status sc_dephasing_apply(const sc_dephasing_params* p, const sc_channel* phi, sc_channel** out);
SC_API sc_status sc_dephasing_compose(const sc_dephasing_params* p, const sc_dephasing_params* q,
                                      sc_dephasing_params** out);
SC_API sc_status sc_dephasing_embed_du(const sc_dephasing_params* p, sc_du_params** out);
/* m and out are d x d interleaved complex. */
SC_API sc_status sc_dephasing_on_dephasing(const sc_dephasing_params* p, const double* m, double* out, size_t len);

/* ---- Pauli superchannels --------------------------------------------- */
SC_API void sc_pauli_free(sc_pauli_params* p);
SC_API sc_status sc_pauli_create(const double pi[16], sc_pauli_params** out);
SC_API sc_status sc_pauli_from_json(const char* json, sc_pauli_params** out);
SC_API sc_status sc_pauli_load(const char* path, sc_pauli_params** out);
SC_API sc_status sc_pauli_to_json(const sc_pauli_params* p, char** out);
SC_API sc_status sc_pauli_choi(const sc_pauli_params* p, sc_superchannel** out);
SC_API sc_status sc_pauli_from_choi(const sc_superchannel* s, double tol, sc_pauli_params** out);
SC_API sc_status sc_pauli_du_check(const sc_pauli_params* p, double tol, sc_report** out);
/* Generic validity plus the DU-covariance criterion. */
SC_API sc_status sc_pauli_validate(const sc_pauli_params* p, double tol, sc_report** out);
SC_API sc_status sc_pauli_bistochastic(const sc_pauli_params* p, double m[16]);
SC_API sc_status sc_pauli_apply(const sc_pauli_params* p, const double q_in[4], double q_out[4]);
SC_API sc_status sc_pauli_bell_readoff(const sc_channel* ch, double q[4]);
SC_API sc_status sc_pauli_marginal(const sc_pauli_params* p, sc_channel** out);
SC_API sc_status sc_pauli_compose(const sc_pauli_params* p2, const sc_pauli_params* p1, sc_pauli_params** out);

#ifdef __cplusplus
}
#endif

#endif /* SUPERCHAN_SUPERCHAN_H */
