// SPDX-FileCopyrightText: Copyright (c) 2026 superchan contributors
// SPDX-License-Identifier: Apache-2.0

// Exercises the shared library through its C header only.

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "superchan/superchan.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  sc_string_free(s);
  return out;
}

double report_double(const sc_report* r, const char* key) {
  double v = NAN;
  REQUIRE(sc_report_get_double(r, key, &v) == SC_OK);
  return v;
}

bool report_bool(const sc_report* r, const char* key) {
  int v = -1;
  REQUIRE(sc_report_get_bool(r, key, &v) == SC_OK);
  return v == 1;
}

std::vector<double> channel_choi(const sc_channel* ch) {
  std::size_t din = 0, dout = 0;
  REQUIRE(sc_channel_dims(ch, &din, &dout) == SC_OK);
  std::vector<double> buf(2 * din * dout * din * dout);
  REQUIRE(sc_channel_choi(ch, buf.data(), buf.size()) == SC_OK);
  return buf;
}

std::vector<double> super_choi(const sc_superchannel* s) {
  std::size_t dims[4];
  REQUIRE(sc_superchannel_dims(s, dims) == SC_OK);
  const std::size_t n = dims[0] * dims[1] * dims[2] * dims[3];
  std::vector<double> buf(2 * n * n);
  REQUIRE(sc_superchannel_choi(s, buf.data(), buf.size()) == SC_OK);
  return buf;
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::fabs(a[k] - b[k]));
  return m;
}

// Choi of rho -> H rho H with H the 2x2 Hadamard matrix.
sc_channel* hadamard_channel() {
  const double h = 1.0 / std::sqrt(2.0);
  const double u[2][2] = {{h, h}, {h, -h}};
  double v[4];
  for (int i = 0; i < 2; ++i)
    for (int a = 0; a < 2; ++a) v[i * 2 + a] = u[a][i];
  std::vector<double> c(2 * 16, 0.0);
  for (int r = 0; r < 4; ++r)
    for (int k = 0; k < 4; ++k) c[2 * (r * 4 + k)] = v[r] * v[k];
  sc_channel* ch = nullptr;
  REQUIRE(sc_channel_from_choi(2, 2, c.data(), &ch) == SC_OK);
  return ch;
}

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(sc_status_name(SC_OK)) == "ok");
  CHECK(std::string(sc_status_name(SC_ERR_PARSE)) == "parse-error");
  CHECK(std::strlen(sc_version()) > 0);
}

TEST_CASE("errors cross the boundary as status codes") {
  sc_channel* ch = nullptr;
  CHECK(sc_channel_from_json("{\n \"d_in\": 2,\n \"d_out\": [\n", &ch) == SC_ERR_PARSE);
  CHECK(ch == nullptr);
  CHECK(std::string(sc_last_error()).find("line") != std::string::npos);

  CHECK(sc_channel_from_json("{\"d_in\": 2}", &ch) == SC_ERR_PARSE);
  CHECK(std::string(sc_last_error()).find("d_out") != std::string::npos);

  sc_report* r = nullptr;
  CHECK(sc_channel_validate(nullptr, 1e-10, &r) == SC_ERR_INVALID_ARGUMENT);
  CHECK(sc_channel_amplitude_damping(1.5, &ch) == SC_ERR_OUT_OF_RANGE);
  CHECK(sc_channel_load("/nonexistent/file.json", &ch) == SC_ERR_IO);

  REQUIRE(sc_channel_identity(2, &ch) == SC_OK);
  double small[4];
  CHECK(sc_channel_choi(ch, small, 4) == SC_ERR_DIMENSION_MISMATCH);
  sc_superchannel* s = nullptr;
  REQUIRE(sc_superchannel_identity(3, 3, &s) == SC_OK);
  sc_channel* out = nullptr;
  CHECK(sc_superchannel_apply(s, ch, &out) == SC_ERR_DIMENSION_MISMATCH);
  sc_superchannel_free(s);

  sc_channel* had = hadamard_channel();
  REQUIRE(sc_superchannel_sandwich(had, ch, &s) == SC_OK);
  sc_du_params* du = nullptr;
  CHECK(sc_du_from_choi(s, 1e-10, &du) == SC_ERR_NOT_DU_COVARIANT);
  sc_do_params* dop = nullptr;
  CHECK(sc_do_from_choi(s, 1e-10, &dop) == SC_ERR_NOT_DO_COVARIANT);
  sc_superchannel_free(s);
  sc_channel_free(had);
  sc_channel_free(ch);

  const double bad_pi[16] = {0.5, 0.5, 0.5};
  sc_pauli_params* pp = nullptr;
  CHECK(sc_pauli_create(bad_pi, &pp) == SC_ERR_INVALID_ARGUMENT);

  // Freeing null handles is a no-op.
  sc_channel_free(nullptr);
  sc_report_free(nullptr);
  sc_string_free(nullptr);
}

TEST_CASE("channel validation report") {
  sc_channel* ch = nullptr;
  REQUIRE(sc_channel_amplitude_damping(0.3, &ch) == SC_OK);
  sc_report* r = nullptr;
  REQUIRE(sc_channel_validate(ch, 1e-10, &r) == SC_OK);
  CHECK(sc_report_passed(r) == 1);
  CHECK(sc_report_violation_count(r) == 0);
  CHECK(report_bool(r, "is_cp"));
  CHECK(std::fabs(report_double(r, "min_eig")) < 1e-12);
  double x = 0;
  CHECK(sc_report_get_double(r, "no_such_key", &x) == SC_ERR_INVALID_ARGUMENT);
  const std::string text = take([&] { char* s = nullptr; sc_report_to_text(r, &s); return s; }());
  CHECK(text.find("is_tp: true") != std::string::npos);
  const std::string js = take([&] { char* s = nullptr; sc_report_to_json(r, &s); return s; }());
  CHECK(js.find("\"passed\": true") != std::string::npos);
  sc_report_free(r);

  // Choi with one -0.01 eigenvalue.
  std::vector<double> c(32, 0.0);
  c[2 * 0] = c[2 * 15] = 1.0;
  c[2 * 3] = c[2 * 12] = 1.01;
  sc_channel* bad = nullptr;
  REQUIRE(sc_channel_from_choi(2, 2, c.data(), &bad) == SC_OK);
  REQUIRE(sc_channel_validate(bad, 1e-10, &r) == SC_OK);
  CHECK(sc_report_passed(r) == 0);
  CHECK(sc_report_violation_count(r) >= 1);
  CHECK(report_double(r, "min_eig") == doctest::Approx(-0.01).epsilon(1e-12));
  sc_report_free(r);
  sc_channel_free(bad);
  sc_channel_free(ch);
}

TEST_CASE("channel json round trip and apply") {
  sc_channel* ch = nullptr;
  REQUIRE(sc_channel_orthogonal_covariant(0.3, 0.05, 3, &ch) == SC_OK);
  char* js = nullptr;
  REQUIRE(sc_channel_to_json(ch, &js) == SC_OK);
  sc_channel* back = nullptr;
  REQUIRE(sc_channel_from_json(js, &back) == SC_OK);
  sc_string_free(js);
  CHECK(max_diff(channel_choi(ch), channel_choi(back)) == 0.0);
  sc_channel_free(back);
  sc_channel_free(ch);

  REQUIRE(sc_channel_bit_flip(0.25, &ch) == SC_OK);
  const double rho[8] = {1, 0, 0, 0, 0, 0, 0, 0};
  double out[8];
  REQUIRE(sc_channel_apply(ch, rho, out, 8) == SC_OK);
  CHECK(out[0] == doctest::Approx(0.75));
  CHECK(out[6] == doctest::Approx(0.25));
  double s[4];
  REQUIRE(sc_channel_classical(ch, s, 4) == SC_OK);
  CHECK(s[0] == doctest::Approx(0.75));
  sc_channel_free(ch);

  const double p[4] = {0.7, 0.1, 0.1, 0.1};
  REQUIRE(sc_channel_pauli(p, &ch) == SC_OK);
  double q[4];
  REQUIRE(sc_pauli_bell_readoff(ch, q) == SC_OK);
  for (int k = 0; k < 4; ++k) CHECK(q[k] == doctest::Approx(p[k]).epsilon(1e-14));
  sc_report* r = nullptr;
  REQUIRE(sc_channel_covariance(ch, "du", 20, 1, 1e-10, &r) == SC_OK);
  CHECK(sc_report_passed(r) == 1);
  sc_report_free(r);
  CHECK(sc_channel_covariance(ch, "bogus", 20, 1, 1e-10, &r) == SC_ERR_INVALID_ARGUMENT);
  sc_channel_free(ch);
}

TEST_CASE("identity superchannel leaves channels unchanged") {
  sc_superchannel* s = nullptr;
  REQUIRE(sc_superchannel_identity(2, 2, &s) == SC_OK);
  sc_channel* bf = nullptr;
  REQUIRE(sc_channel_bit_flip(0.2, &bf) == SC_OK);
  sc_channel* out = nullptr;
  REQUIRE(sc_superchannel_apply(s, bf, &out) == SC_OK);
  CHECK(max_diff(channel_choi(out), channel_choi(bf)) == 0.0);

  sc_report* r = nullptr;
  REQUIRE(sc_superchannel_validate(s, 1e-10, &r) == SC_OK);
  CHECK(sc_report_passed(r) == 1);
  CHECK(report_bool(r, "cp.factorizes"));
  CHECK(report_bool(r, "tp.unital"));
  sc_report_free(r);

  std::vector<double> t(16);
  REQUIRE(sc_superchannel_classical(s, 1e-12, t.data(), t.size(), &r) == SC_OK);
  CHECK(sc_report_passed(r) == 1);
  for (int k = 0; k < 4; ++k) CHECK(t[static_cast<std::size_t>(k * 4 + k)] == doctest::Approx(1.0));
  sc_report_free(r);

  sc_channel* induced = nullptr;
  REQUIRE(sc_superchannel_tp_check(s, 1e-10, &r, &induced) == SC_OK);
  CHECK(sc_report_passed(r) == 1);
  sc_channel* id = nullptr;
  REQUIRE(sc_channel_identity(2, &id) == SC_OK);
  CHECK(max_diff(channel_choi(induced), channel_choi(id)) < 1e-15);
  sc_report_free(r);

  char* js = nullptr;
  REQUIRE(sc_superchannel_to_json(s, &js) == SC_OK);
  sc_superchannel* back = nullptr;
  REQUIRE(sc_superchannel_from_json(js, &back) == SC_OK);
  sc_string_free(js);
  CHECK(max_diff(super_choi(back), super_choi(s)) == 0.0);

  sc_superchannel* comp = nullptr;
  REQUIRE(sc_superchannel_compose(s, back, &comp) == SC_OK);
  CHECK(max_diff(super_choi(comp), super_choi(s)) < 1e-15);

  sc_superchannel_free(comp);
  sc_superchannel_free(back);
  sc_channel_free(id);
  sc_channel_free(induced);
  sc_channel_free(out);
  sc_channel_free(bf);
  sc_superchannel_free(s);
}

TEST_CASE("unitary-covariant families and Holevo-Werner") {
  int ok = 0;
  const double hw[4] = {-1.0 / 3.0, 0, 0, 4.0 / 3.0};
  REQUIRE(sc_superchannel_uu_cp_closed_form(SC_UU_CONJUGATE, hw, 2, &ok) == SC_OK);
  CHECK(ok == 1);
  const double bad[4] = {-1.0, 0, 0, 2.0};
  REQUIRE(sc_superchannel_uu_cp_closed_form(SC_UU_CONJUGATE, bad, 2, &ok) == SC_OK);
  CHECK(ok == 0);

  sc_superchannel* a = nullptr;
  sc_superchannel* b = nullptr;
  REQUIRE(sc_superchannel_uu(SC_UU_CONJUGATE, hw, 2, &a) == SC_OK);
  REQUIRE(sc_superchannel_holevo_werner(2, &b) == SC_OK);
  CHECK(max_diff(super_choi(a), super_choi(b)) < 1e-14);

  sc_report* r = nullptr;
  REQUIRE(sc_superchannel_validate(b, 1e-10, &r) == SC_OK);
  CHECK(sc_report_passed(r) == 1);
  sc_report_free(r);
  REQUIRE(sc_superchannel_covariance(b, "conj-haar", 20, 3, 1e-10, &r) == SC_OK);
  CHECK(sc_report_passed(r) == 1);
  CHECK(report_double(r, "max_deviation") < 1e-10);
  sc_report_free(r);
  REQUIRE(sc_superchannel_covariance(b, "haar", 20, 3, 1e-10, &r) == SC_OK);
  CHECK(sc_report_passed(r) == 0);
  sc_report_free(r);

  const double mixed[4] = {0.4, 0.2, 0.2, 0.2};
  sc_superchannel* m = nullptr;
  REQUIRE(sc_superchannel_uu(SC_UU_MIXED, mixed, 3, &m) == SC_OK);
  REQUIRE(sc_superchannel_covariance(m, "mixed", 10, 5, 1e-10, &r) == SC_OK);
  CHECK(sc_report_passed(r) == 1);
  sc_report_free(r);
  sc_superchannel_free(m);
  sc_superchannel_free(a);
  sc_superchannel_free(b);
}

TEST_CASE("DU superchannel parameters") {
  sc_du_params* p = nullptr;
  REQUIRE(sc_du_identity(2, &p) == SC_OK);
  std::size_t d = 0;
  REQUIRE(sc_du_dim(p, &d) == SC_OK);
  CHECK(d == 2);
  double e[2];
  REQUIRE(sc_du_entry(p, 'A', 0, 1, 0, 1, e) == SC_OK);
  CHECK(e[0] == 1.0);
  REQUIRE(sc_du_entry(p, 'A', 0, 1, 1, 0, e) == SC_OK);
  CHECK(e[0] == 0.0);
  CHECK(sc_du_entry(p, 'Z', 0, 0, 0, 0, e) == SC_ERR_INVALID_ARGUMENT);
  CHECK(sc_du_entry(p, 'A', 0, 0, 5, 0, e) == SC_ERR_OUT_OF_RANGE);

  sc_report* r = nullptr;
  REQUIRE(sc_du_validate(p, 1e-10, &r) == SC_OK);
  CHECK(sc_report_passed(r) == 1);
  CHECK(report_bool(r, "agrees"));
  CHECK(report_bool(r, "generic.cp.is_cp"));
  sc_report_free(r);

  sc_superchannel* s = nullptr;
  REQUIRE(sc_du_build_choi(p, &s) == SC_OK);
  sc_superchannel* id = nullptr;
  REQUIRE(sc_superchannel_identity(2, 2, &id) == SC_OK);
  CHECK(max_diff(super_choi(s), super_choi(id)) < 1e-15);
  sc_du_params* back = nullptr;
  REQUIRE(sc_du_from_choi(s, 1e-12, &back) == SC_OK);

  sc_channel* ad = nullptr;
  REQUIRE(sc_channel_amplitude_damping(0.3, &ad) == SC_OK);
  sc_channel* out = nullptr;
  REQUIRE(sc_du_block_action(back, ad, &out) == SC_OK);
  CHECK(max_diff(channel_choi(out), channel_choi(ad)) < 1e-15);
  sc_channel_free(out);
  REQUIRE(sc_du_action_on_identity(back, &out) == SC_OK);
  sc_channel* idc = nullptr;
  REQUIRE(sc_channel_identity(2, &idc) == SC_OK);
  CHECK(max_diff(channel_choi(out), channel_choi(idc)) < 1e-15);

  sc_du_params* comp = nullptr;
  REQUIRE(sc_du_compose(p, back, &comp) == SC_OK);
  char* j1 = nullptr;
  char* j2 = nullptr;
  REQUIRE(sc_du_to_json(comp, &j1) == SC_OK);
  REQUIRE(sc_du_to_json(p, &j2) == SC_OK);
  CHECK(std::string(j1) == std::string(j2));
  sc_du_params* parsed = nullptr;
  REQUIRE(sc_du_from_json(j1, &parsed) == SC_OK);
  sc_string_free(j1);
  sc_string_free(j2);

  REQUIRE(sc_du_preserves_do(p, 5, 0, 1e-12, &r) == SC_OK);
  CHECK(sc_report_passed(r) == 1);
  sc_report_free(r);

  sc_do_params* dop = nullptr;
  REQUIRE(sc_do_embed_du(p, &dop) == SC_OK);
  REQUIRE(sc_do_validate(dop, 1e-10, &r) == SC_OK);
  CHECK(sc_report_passed(r) == 1);
  sc_report_free(r);
  sc_superchannel* ds = nullptr;
  REQUIRE(sc_do_build_choi(dop, &ds) == SC_OK);
  CHECK(max_diff(super_choi(ds), super_choi(id)) < 1e-15);

  sc_superchannel_free(ds);
  sc_do_free(dop);
  sc_du_free(parsed);
  sc_du_free(comp);
  sc_channel_free(idc);
  sc_channel_free(out);
  sc_channel_free(ad);
  sc_du_free(back);
  sc_superchannel_free(id);
  sc_superchannel_free(s);
  sc_du_free(p);
}

TEST_CASE("dephasing superchannels") {
  // e = 1 with trivial unitaries: M_big is all ones, the identity superchannel.
  const char* real = R"({"e": 1,
    "U": [{"dims": [1], "data": [[1, 0]]}, {"dims": [1], "data": [[1, 0]]}],
    "V": [{"dims": [1], "data": [[1, 0]]}, {"dims": [1], "data": [[1, 0]]}],
    "psi": [[1, 0]]})";
  sc_dephasing_params* p = nullptr;
  REQUIRE(sc_dephasing_from_realization(real, &p) == SC_OK);
  sc_report* r = nullptr;
  REQUIRE(sc_dephasing_validate(p, 1e-10, &r) == SC_OK);
  CHECK(sc_report_passed(r) == 1);
  CHECK(report_bool(r, "agrees_with_generic"));
  sc_report_free(r);

  const double m[8] = {1, 0, 0.5, 0.1, 0.5, -0.1, 1, 0};
  double out[8];
  REQUIRE(sc_dephasing_on_dephasing(p, m, out, 8) == SC_OK);
  for (int k = 0; k < 8; ++k) CHECK(out[k] == doctest::Approx(m[k]));

  sc_dephasing_params* sq = nullptr;
  REQUIRE(sc_dephasing_compose(p, p, &sq) == SC_OK);
  sc_du_params* du = nullptr;
  REQUIRE(sc_dephasing_embed_du(sq, &du) == SC_OK);
  REQUIRE(sc_du_validate(du, 1e-10, &r) == SC_OK);
  CHECK(sc_report_passed(r) == 1);
  sc_report_free(r);

  sc_du_free(du);
  sc_dephasing_free(sq);
  sc_dephasing_free(p);
}

TEST_CASE("Pauli superchannels") {
  double pi[16];
  std::fill(pi, pi + 16, 1.0 / 16.0);
  sc_pauli_params* p = nullptr;
  REQUIRE(sc_pauli_create(pi, &p) == SC_OK);
  sc_report* r = nullptr;
  REQUIRE(sc_pauli_validate(p, 1e-10, &r) == SC_OK);
  CHECK(sc_report_passed(r) == 1);
  CHECK(report_bool(r, "du_covariant"));
  const std::string text = take([&] { char* s = nullptr; sc_report_to_text(r, &s); return s; }());
  CHECK(text.find("du_covariant: true") != std::string::npos);
  sc_report_free(r);

  // Weight on (X, I) only breaks the DU criterion.
  double skew[16] = {0};
  skew[0] = 0.5;
  skew[4] = 0.5;
  sc_pauli_params* q = nullptr;
  REQUIRE(sc_pauli_create(skew, &q) == SC_OK);
  REQUIRE(sc_pauli_du_check(q, 1e-10, &r) == SC_OK);
  CHECK_FALSE(report_bool(r, "du_covariant"));
  CHECK(report_bool(r, "agrees"));
  sc_report_free(r);

  double m[16];
  REQUIRE(sc_pauli_bistochastic(q, m) == SC_OK);
  for (int i = 0; i < 4; ++i) {
    double row = 0, col = 0;
    for (int k = 0; k < 4; ++k) {
      row += m[i * 4 + k];
      col += m[k * 4 + i];
    }
    CHECK(row == doctest::Approx(1.0));
    CHECK(col == doctest::Approx(1.0));
  }

  const double pin[4] = {0.6, 0.2, 0.15, 0.05};
  double qout[4];
  REQUIRE(sc_pauli_apply(q, pin, qout) == SC_OK);
  sc_channel* ch = nullptr;
  REQUIRE(sc_channel_pauli(pin, &ch) == SC_OK);
  sc_superchannel* s = nullptr;
  REQUIRE(sc_pauli_choi(q, &s) == SC_OK);
  sc_channel* image = nullptr;
  REQUIRE(sc_superchannel_apply(s, ch, &image) == SC_OK);
  double oracle[4];
  REQUIRE(sc_pauli_bell_readoff(image, oracle) == SC_OK);
  for (int k = 0; k < 4; ++k) CHECK(std::fabs(qout[k] - oracle[k]) < 1e-14);

  sc_pauli_params* back = nullptr;
  REQUIRE(sc_pauli_from_choi(s, 1e-12, &back) == SC_OK);
  char* j1 = nullptr;
  char* j2 = nullptr;
  REQUIRE(sc_pauli_to_json(back, &j1) == SC_OK);
  REQUIRE(sc_pauli_to_json(q, &j2) == SC_OK);
  sc_pauli_params* parsed = nullptr;
  REQUIRE(sc_pauli_from_json(j1, &parsed) == SC_OK);
  sc_string_free(j1);
  sc_string_free(j2);

  sc_pauli_params* comp = nullptr;
  REQUIRE(sc_pauli_compose(q, p, &comp) == SC_OK);
  sc_channel* marg = nullptr;
  REQUIRE(sc_pauli_marginal(comp, &marg) == SC_OK);
  REQUIRE(sc_channel_validate(marg, 1e-10, &r) == SC_OK);
  CHECK(sc_report_passed(r) == 1);
  sc_report_free(r);

  sc_channel_free(marg);
  sc_pauli_free(comp);
  sc_pauli_free(parsed);
  sc_pauli_free(back);
  sc_channel_free(image);
  sc_superchannel_free(s);
  sc_channel_free(ch);
  sc_pauli_free(q);
  sc_pauli_free(p);
}
