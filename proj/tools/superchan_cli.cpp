// SPDX-FileCopyrightText: Copyright (c) 2026 superchan contributors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end over the superchan C interface.
//
// Exit codes: 0 ok, 2 invalid input, 3 a check failed.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "superchan/superchan.h"

namespace {

constexpr int kOk = 0;
constexpr int kInvalidInput = 2;
constexpr int kCheckFailed = 3;

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void invalid(const std::string& message) { throw CliError{kInvalidInput, message}; }

void check(sc_status st) {
  if (st != SC_OK) invalid(std::string(sc_status_name(st)) + ": " + sc_last_error());
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using Channel = std::unique_ptr<sc_channel, Deleter<sc_channel, sc_channel_free>>;
using Super = std::unique_ptr<sc_superchannel, Deleter<sc_superchannel, sc_superchannel_free>>;
using DU = std::unique_ptr<sc_du_params, Deleter<sc_du_params, sc_du_free>>;
using DO = std::unique_ptr<sc_do_params, Deleter<sc_do_params, sc_do_free>>;
using Dephasing = std::unique_ptr<sc_dephasing_params, Deleter<sc_dephasing_params, sc_dephasing_free>>;
using Pauli = std::unique_ptr<sc_pauli_params, Deleter<sc_pauli_params, sc_pauli_free>>;
using Report = std::unique_ptr<sc_report, Deleter<sc_report, sc_report_free>>;

// Runs a C constructor that fills an out-parameter and takes ownership.
template <class Ptr, class F>
Ptr make(F&& f) {
  typename Ptr::pointer raw = nullptr;
  check(f(&raw));
  return Ptr(raw);
}

std::string take(char* s) {
  std::string out = s ? s : "";
  sc_string_free(s);
  return out;
}

template <class F>
std::string text_of(F&& f) {
  char* s = nullptr;
  check(f(&s));
  return take(s);
}

std::string fmt(double x) {
  char buf[64];
  check(sc_format_double(x, buf, sizeof buf));
  return buf;
}

std::string fmt(std::complex<double> z) {
  if (z.imag() == 0.0) return fmt(z.real());
  return fmt(z.real()) + (z.imag() < 0 ? "-" : "+") + fmt(std::fabs(z.imag())) + "i";
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

bool report_passed(const Report& r) { return sc_report_passed(r.get()) == 1; }

std::string report_text(const Report& r) {
  return text_of([&](char** s) { return sc_report_to_text(r.get(), s); });
}

// ---- documents ---------------------------------------------------------

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) invalid("io-error: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Kind of a JSON document, inferred from its top-level keys.
std::string detect_kind(const std::string& text) {
  const auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return {};
  if (j.contains("pi")) return "pauli";
  if (j.contains("M_big")) return "dephasing";
  if (j.contains("psi") && j.contains("e")) return "realization";
  if (j.contains("d") && j.contains("E")) return "do";
  if (j.contains("d") && j.contains("A")) return "du";
  if (j.contains("d_in")) return "channel";
  if (j.contains("dims") && j.contains("choi")) return "superchannel";
  return {};
}

struct Document {
  std::string path;
  std::string text;
  std::string kind;
};

// Reads a file and resolves its kind. An empty `expected` accepts any kind;
// a document that does not parse is handed to the matching loader so the
// library reports the line and position.
Document load_document(const std::string& path, const std::string& expected) {
  Document doc{path, read_text(path), {}};
  doc.kind = detect_kind(doc.text);
  if (doc.kind.empty()) {
    sc_channel* probe = nullptr;
    const sc_status st = sc_channel_from_json(doc.text.c_str(), &probe);
    sc_channel_free(probe);
    if (st != SC_OK) {
      const std::string err = sc_last_error();
      if (err.find("parse error") != std::string::npos) invalid(path + ": " + err);
    }
    invalid(path + ": unrecognized document (expected " + (expected.empty() ? "a known kind" : expected) + ")");
  }
  const bool ok = expected.empty() || doc.kind == expected ||
                  (expected == "dephasing" && doc.kind == "realization");
  if (!ok) invalid("kind mismatch: " + path + " holds " + doc.kind + ", expected " + expected);
  return doc;
}

Channel channel_of(const Document& doc) {
  if (doc.kind != "channel") invalid(doc.path + " is not a channel");
  return make<Channel>([&](sc_channel** o) { return sc_channel_from_json(doc.text.c_str(), o); });
}

Dephasing dephasing_of(const Document& doc) {
  if (doc.kind == "realization")
    return make<Dephasing>([&](sc_dephasing_params** o) { return sc_dephasing_from_realization(doc.text.c_str(), o); });
  return make<Dephasing>([&](sc_dephasing_params** o) { return sc_dephasing_from_json(doc.text.c_str(), o); });
}

DU du_of(const Document& doc) {
  return make<DU>([&](sc_du_params** o) { return sc_du_from_json(doc.text.c_str(), o); });
}

DO do_of(const Document& doc) {
  return make<DO>([&](sc_do_params** o) { return sc_do_from_json(doc.text.c_str(), o); });
}

Pauli pauli_of(const Document& doc) {
  return make<Pauli>([&](sc_pauli_params** o) { return sc_pauli_from_json(doc.text.c_str(), o); });
}

// Choi matrix of any superchannel kind.
Super super_of(const Document& doc) {
  const std::string& k = doc.kind;
  if (k == "superchannel")
    return make<Super>([&](sc_superchannel** o) { return sc_superchannel_from_json(doc.text.c_str(), o); });
  if (k == "du") {
    const DU p = du_of(doc);
    return make<Super>([&](sc_superchannel** o) { return sc_du_build_choi(p.get(), o); });
  }
  if (k == "do") {
    const DO p = do_of(doc);
    return make<Super>([&](sc_superchannel** o) { return sc_do_build_choi(p.get(), o); });
  }
  if (k == "dephasing" || k == "realization") {
    const Dephasing p = dephasing_of(doc);
    return make<Super>([&](sc_superchannel** o) { return sc_dephasing_choi(p.get(), o); });
  }
  if (k == "pauli") {
    const Pauli p = pauli_of(doc);
    return make<Super>([&](sc_superchannel** o) { return sc_pauli_choi(p.get(), o); });
  }
  invalid(doc.path + " is not a superchannel");
}

// ---- matrices ----------------------------------------------------------

struct Dense {
  std::size_t rows = 0, cols = 0;
  std::vector<std::complex<double>> v;
  std::complex<double> operator()(std::size_t r, std::size_t c) const { return v[r * cols + c]; }
};

Dense choi_of(const sc_channel* ch) {
  std::size_t din = 0, dout = 0;
  check(sc_channel_dims(ch, &din, &dout));
  const std::size_t n = din * dout;
  std::vector<double> buf(2 * n * n);
  check(sc_channel_choi(ch, buf.data(), buf.size()));
  Dense m{n, n, {}};
  for (std::size_t k = 0; k < n * n; ++k) m.v.emplace_back(buf[2 * k], buf[2 * k + 1]);
  return m;
}

Dense classical_of(const sc_channel* ch) {
  std::size_t din = 0, dout = 0;
  check(sc_channel_dims(ch, &din, &dout));
  std::vector<double> buf(din * dout);
  check(sc_channel_classical(ch, buf.data(), buf.size()));
  Dense m{dout, din, {}};
  for (double x : buf) m.v.emplace_back(x, 0.0);
  return m;
}

void print_matrix(std::ostream& os, const std::string& name, const Dense& m) {
  os << name << ":\n";
  for (std::size_t r = 0; r < m.rows; ++r) {
    os << "  [";
    for (std::size_t c = 0; c < m.cols; ++c) os << (c ? ", " : "") << fmt(m(r, c));
    os << "]\n";
  }
}

void print_vector(std::ostream& os, const std::string& name, const double* v, std::size_t n) {
  os << name << ": [";
  for (std::size_t k = 0; k < n; ++k) os << (k ? ", " : "") << fmt(v[k]);
  os << "]\n";
}

double max_deviation(const Dense& a, const Dense& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.v.size(); ++k) m = std::max(m, std::abs(a.v[k] - b.v[k]));
  return m;
}

// ---- artifacts ---------------------------------------------------------

// Writes a JSON artifact to `out`, or appends it to stdout after the report.
void emit_artifact(const std::string& json, const std::string& out) {
  if (out.empty()) {
    std::cout << "artifact:\n" << json;
    return;
  }
  std::ofstream f(out);
  if (!f) invalid("io-error: cannot write " + out);
  f << json;
  if (!f) invalid("io-error: write failed for " + out);
  std::cout << "artifact: " << out << '\n';
}

std::string channel_json(const sc_channel* ch) {
  return text_of([&](char** s) { return sc_channel_to_json(ch, s); });
}

// ---- validate ----------------------------------------------------------

Report validate_document(const Document& doc, double tol) {
  const std::string& k = doc.kind;
  if (k == "channel") {
    const Channel ch = channel_of(doc);
    return make<Report>([&](sc_report** o) { return sc_channel_validate(ch.get(), tol, o); });
  }
  if (k == "superchannel") {
    const Super s = super_of(doc);
    return make<Report>([&](sc_report** o) { return sc_superchannel_validate(s.get(), tol, o); });
  }
  if (k == "du") {
    const DU p = du_of(doc);
    return make<Report>([&](sc_report** o) { return sc_du_validate(p.get(), tol, o); });
  }
  if (k == "do") {
    const DO p = do_of(doc);
    return make<Report>([&](sc_report** o) { return sc_do_validate(p.get(), tol, o); });
  }
  if (k == "dephasing" || k == "realization") {
    const Dephasing p = dephasing_of(doc);
    return make<Report>([&](sc_report** o) { return sc_dephasing_validate(p.get(), tol, o); });
  }
  if (k == "pauli") {
    const Pauli p = pauli_of(doc);
    return make<Report>([&](sc_report** o) { return sc_pauli_validate(p.get(), tol, o); });
  }
  invalid("cannot validate " + k);
}

int cmd_validate(const std::string& kind, const std::string& path, double tol) {
  const Document doc = load_document(path, kind);
  const Report r = validate_document(doc, tol);
  std::cout << report_text(r);
  return report_passed(r) ? kOk : kCheckFailed;
}

// ---- apply -------------------------------------------------------------

// Prints q = M p when the input is a qubit Pauli channel.
void pauli_readout(const Pauli& p, const sc_channel* in, const sc_channel* out, double tol) {
  double q_in[4];
  check(sc_pauli_bell_readoff(in, q_in));
  sc_channel* rebuilt = nullptr;
  if (sc_channel_pauli(q_in, &rebuilt) != SC_OK) return;
  const Channel guard(rebuilt);
  if (max_deviation(choi_of(rebuilt), choi_of(in)) > tol) return;
  double q_out[4], oracle[4];
  check(sc_pauli_apply(p.get(), q_in, q_out));
  check(sc_pauli_bell_readoff(out, oracle));
  double dev = 0.0;
  for (int k = 0; k < 4; ++k) dev = std::max(dev, std::fabs(q_out[k] - oracle[k]));
  print_vector(std::cout, "p", q_in, 4);
  print_vector(std::cout, "q", q_out, 4);
  std::cout << "q_readoff_deviation: " << fmt(dev) << '\n';
}

int cmd_apply(const std::string& super_path, const std::string& channel_path, const std::string& out, double tol) {
  const Document sdoc = load_document(super_path, "");
  const Channel phi = channel_of(load_document(channel_path, "channel"));
  Channel image;
  std::optional<Pauli> pauli;
  const std::string& k = sdoc.kind;
  if (k == "du") {
    const DU p = du_of(sdoc);
    image = make<Channel>([&](sc_channel** o) { return sc_du_block_action(p.get(), phi.get(), o); });
  } else if (k == "dephasing" || k == "realization") {
    const Dephasing p = dephasing_of(sdoc);
    image = make<Channel>([&](sc_channel** o) { return sc_dephasing_apply(p.get(), phi.get(), o); });
  } else {
    if (k == "pauli") pauli = pauli_of(sdoc);
    const Super s = super_of(sdoc);
    image = make<Channel>([&](sc_channel** o) { return sc_superchannel_apply(s.get(), phi.get(), o); });
  }
  std::cout << "superchannel: " << k << '\n';
  print_matrix(std::cout, "input_classical", classical_of(phi.get()));
  print_matrix(std::cout, "output_classical", classical_of(image.get()));
  if (pauli) pauli_readout(*pauli, phi.get(), image.get(), tol);
  emit_artifact(channel_json(image.get()), out);
  return kOk;
}

// ---- compose -----------------------------------------------------------

int cmd_compose(const std::string& kind, const std::string& p1, const std::string& p2, const std::string& out,
                double tol) {
  const Document d1 = load_document(p1, kind);
  const Document d2 = load_document(p2, kind);
  std::string json;
  Report r;
  if (kind == "du") {
    const DU a = du_of(d1), b = du_of(d2);
    const DU c = make<DU>([&](sc_du_params** o) { return sc_du_compose(a.get(), b.get(), o); });
    json = text_of([&](char** s) { return sc_du_to_json(c.get(), s); });
    r = make<Report>([&](sc_report** o) { return sc_du_validate(c.get(), tol, o); });
  } else if (kind == "dephasing") {
    const Dephasing a = dephasing_of(d1), b = dephasing_of(d2);
    const Dephasing c = make<Dephasing>([&](sc_dephasing_params** o) { return sc_dephasing_compose(a.get(), b.get(), o); });
    json = text_of([&](char** s) { return sc_dephasing_to_json(c.get(), s); });
    r = make<Report>([&](sc_report** o) { return sc_dephasing_validate(c.get(), tol, o); });
  } else if (kind == "pauli") {
    const Pauli a = pauli_of(d1), b = pauli_of(d2);
    const Pauli c = make<Pauli>([&](sc_pauli_params** o) { return sc_pauli_compose(a.get(), b.get(), o); });
    json = text_of([&](char** s) { return sc_pauli_to_json(c.get(), s); });
    r = make<Report>([&](sc_report** o) { return sc_pauli_validate(c.get(), tol, o); });
  } else if (kind == "do") {
    const Super a = super_of(d1), b = super_of(d2);
    const Super c = make<Super>([&](sc_superchannel** o) { return sc_superchannel_compose(a.get(), b.get(), o); });
    const DO p = make<DO>([&](sc_do_params** o) { return sc_do_from_choi(c.get(), tol, o); });
    json = text_of([&](char** s) { return sc_do_to_json(p.get(), s); });
    r = make<Report>([&](sc_report** o) { return sc_do_validate(p.get(), tol, o); });
  } else if (kind == "superchannel") {
    const Super a = super_of(d1), b = super_of(d2);
    const Super c = make<Super>([&](sc_superchannel** o) { return sc_superchannel_compose(a.get(), b.get(), o); });
    json = text_of([&](char** s) { return sc_superchannel_to_json(c.get(), s); });
    r = make<Report>([&](sc_report** o) { return sc_superchannel_validate(c.get(), tol, o); });
  } else {
    invalid("cannot compose " + kind);
  }
  std::cout << report_text(r);
  emit_artifact(json, out);
  return report_passed(r) ? kOk : kCheckFailed;
}

// ---- covariance --------------------------------------------------------

int cmd_covariance(const std::string& path, const std::string& group, std::size_t samples, std::uint64_t seed,
                   double tol) {
  const Document doc = load_document(path, "");
  Report r;
  if (doc.kind == "channel") {
    const Channel ch = channel_of(doc);
    r = make<Report>(
        [&](sc_report** o) { return sc_channel_covariance(ch.get(), group.c_str(), samples, seed, tol, o); });
  } else {
    const Super s = super_of(doc);
    r = make<Report>(
        [&](sc_report** o) { return sc_superchannel_covariance(s.get(), group.c_str(), samples, seed, tol, o); });
  }
  std::cout << "group: " << group << '\n' << "seed: " << seed << '\n' << report_text(r);
  return report_passed(r) ? kOk : kCheckFailed;
}

// ---- examples ----------------------------------------------------------

std::string data_dir() {
  if (const char* env = std::getenv("SUPERCHAN_DATA_DIR")) return env;
  return SUPERCHAN_DATA_DIR;
}

DU example_superchannel(const std::string& super_path) {
  const std::string path = super_path.empty() ? data_dir() + "/default_du_d2.json" : super_path;
  DU p = du_of(load_document(path, "du"));
  std::size_t d = 0;
  check(sc_du_dim(p.get(), &d));
  if (d != 2) invalid("examples act on qubit channels; " + path + " has d = " + std::to_string(d));
  std::cout << "superchannel: " << (super_path.empty() ? "default_du_d2.json" : path) << '\n';
  return p;
}

// Table entry with one-based labels as printed: X_{ia,jb}.
std::complex<double> entry(const DU& p, char table, int ia, int jb) {
  double z[2];
  check(sc_du_entry(p.get(), table, static_cast<std::size_t>(ia / 10 - 1), static_cast<std::size_t>(ia % 10 - 1),
                    static_cast<std::size_t>(jb / 10 - 1), static_cast<std::size_t>(jb % 10 - 1), z));
  return {z[0], z[1]};
}

double a_entry(const DU& p, int ia, int jb) { return entry(p, 'A', ia, jb).real(); }

constexpr int kLabels[4] = {11, 12, 21, 22};

// Shared tail of the qubit examples: prints both Chois, compares the image
// with the expected display, and writes the image.
int finish_example(const Channel& input, const Channel& image, const Dense& expected, bool checks_ok,
                   const std::string& out, double tol) {
  print_matrix(std::cout, "input_choi", choi_of(input.get()));
  const Dense got = choi_of(image.get());
  print_matrix(std::cout, "output_choi", got);
  const double dev = max_deviation(got, expected);
  std::cout << "display_deviation: " << fmt(dev) << '\n';
  const bool ok = checks_ok && dev <= tol;
  std::cout << "passed: " << yes_no(ok) << '\n';
  emit_artifact(channel_json(image.get()), out);
  return ok ? kOk : kCheckFailed;
}

Dense empty4() { return Dense{4, 4, std::vector<std::complex<double>>(16)}; }

int example_amplitude_damping(double gamma, const std::string& super_path, const std::string& out, double tol) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) invalid("out-of-range: gamma must lie in [0, 1]");
  std::cout << "example: amplitude-damping\n" << "gamma: " << fmt(gamma) << '\n';
  const DU p = example_superchannel(super_path);
  const Channel ad = make<Channel>([&](sc_channel** o) { return sc_channel_amplitude_damping(gamma, o); });
  const Channel image = make<Channel>([&](sc_channel** o) { return sc_du_block_action(p.get(), ad.get(), o); });

  double a[4];
  for (int k = 0; k < 4; ++k) {
    const int ia = kLabels[k];
    a[k] = a_entry(p, ia, 11) + a_entry(p, ia, 21) * gamma + a_entry(p, ia, 22) * (1.0 - gamma);
    std::cout << "a" << k + 1 << ": " << fmt(a[k]) << '\n';
  }
  const double s12 = a[0] + a[1], s34 = a[2] + a[3];
  const bool ok12 = std::fabs(s12 - 1.0) <= tol, ok34 = std::fabs(s34 - 1.0) <= tol;
  std::cout << "a1 + a2 = 1: " << yes_no(ok12) << " (" << fmt(s12) << ")\n";
  std::cout << "a3 + a4 = 1: " << yes_no(ok34) << " (" << fmt(s34) << ")\n";
  const double r = std::sqrt(1.0 - gamma);
  const auto c14 = entry(p, 'D', 11, 22) * r, c41 = entry(p, 'D', 22, 11) * r;
  std::cout << "D_11,22 sqrt(1-gamma): " << fmt(c14) << '\n' << "D_22,11 sqrt(1-gamma): " << fmt(c41) << '\n';

  Dense want = empty4();
  for (int k = 0; k < 4; ++k) want.v[static_cast<std::size_t>(k * 5)] = a[k];
  want.v[3] = c14;
  want.v[12] = c41;
  return finish_example(ad, image, want, ok12 && ok34, out, tol);
}

// Bit-flip and Pauli share one display: diagonal p_ij, corners and centre.
int example_pauli_like(const double x[4], std::complex<double> corner, std::complex<double> centre,
                       const Channel& input, const std::string& super_path, const std::string& out, double tol) {
  const DU p = example_superchannel(super_path);
  const Channel image = make<Channel>([&](sc_channel** o) { return sc_du_block_action(p.get(), input.get(), o); });
  Dense want = empty4();
  bool ok = true;
  for (int row = 0; row < 2; ++row) {
    double block = 0.0;
    for (int k = 2 * row; k < 2 * row + 2; ++k) {
      const int ij = kLabels[k];
      // p_ij over the diagonal (x_11, x_12, x_21, x_22) of the input Choi.
      double v = 0.0;
      for (int m = 0; m < 4; ++m) v += a_entry(p, ij, kLabels[m]) * x[m];
      std::cout << "p_" << ij << ": " << fmt(v) << '\n';
      want.v[static_cast<std::size_t>(k * 5)] = v;
      block += v;
    }
    const bool b = std::fabs(block - 1.0) <= tol;
    std::cout << "p_" << row + 1 << "1 + p_" << row + 1 << "2 = 1: " << yes_no(b) << " (" << fmt(block) << ")\n";
    ok = ok && b;
  }
  want.v[3] = entry(p, 'D', 11, 22) * corner;
  want.v[12] = entry(p, 'D', 22, 11) * corner;
  want.v[6] = entry(p, 'D', 12, 21) * centre;
  want.v[9] = entry(p, 'D', 21, 12) * centre;
  std::cout << "corner D_11,22: " << fmt(want.v[3]) << '\n' << "corner D_22,11: " << fmt(want.v[12]) << '\n';
  std::cout << "centre D_12,21: " << fmt(want.v[6]) << '\n' << "centre D_21,12: " << fmt(want.v[9]) << '\n';
  return finish_example(input, image, want, ok, out, tol);
}

int example_bit_flip(double prob, const std::string& super_path, const std::string& out, double tol) {
  if (!(prob >= 0.0 && prob <= 1.0)) invalid("out-of-range: p must lie in [0, 1]");
  std::cout << "example: bit-flip\n" << "p: " << fmt(prob) << '\n';
  const Channel bf = make<Channel>([&](sc_channel** o) { return sc_channel_bit_flip(prob, o); });
  const double x[4] = {1.0 - prob, prob, prob, 1.0 - prob};
  return example_pauli_like(x, 1.0 - prob, prob, bf, super_path, out, tol);
}

int example_pauli(const std::vector<double>& pv, const std::string& super_path, const std::string& out, double tol) {
  if (pv.size() != 4) invalid("pauli example takes --p p0 p1 p2 p3");
  std::cout << "example: pauli\n";
  print_vector(std::cout, "p", pv.data(), 4);
  const Channel ch = make<Channel>([&](sc_channel** o) { return sc_channel_pauli(pv.data(), o); });
  const double s = pv[0] + pv[3], t = pv[1] + pv[2];
  const double x[4] = {s, t, t, s};
  return example_pauli_like(x, pv[0] - pv[3], pv[1] - pv[2], ch, super_path, out, tol);
}

int example_holevo_werner(std::size_t d, const std::string& out, double tol) {
  if (d < 2) invalid("out-of-range: d must be at least 2");
  std::cout << "example: holevo-werner\n" << "d: " << d << '\n';
  const Channel ch = make<Channel>([&](sc_channel** o) { return sc_channel_holevo_werner(d, o); });
  const Report rc = make<Report>([&](sc_report** o) { return sc_channel_validate(ch.get(), tol, o); });
  std::cout << "channel_valid: " << yes_no(report_passed(rc)) << '\n';
  const double n = static_cast<double>(d * d);
  const double p[4] = {-1.0 / (n - 1.0), 0.0, 0.0, n / (n - 1.0)};
  print_vector(std::cout, "p", p, 4);
  int closed = 0;
  check(sc_superchannel_uu_cp_closed_form(SC_UU_CONJUGATE, p, d, &closed));
  std::cout << "cp_closed_form: " << yes_no(closed == 1) << '\n';
  std::cout << "p3/d^2 + p0: " << fmt(p[3] / n + p[0]) << '\n' << "p3/d^2 - p0: " << fmt(p[3] / n - p[0]) << '\n';
  const Super s = make<Super>([&](sc_superchannel** o) { return sc_superchannel_holevo_werner(d, o); });
  const Report rs = make<Report>([&](sc_report** o) { return sc_superchannel_validate(s.get(), tol, o); });
  const Report cov =
      make<Report>([&](sc_report** o) { return sc_superchannel_covariance(s.get(), "conj-haar", 20, 0, tol, o); });
  std::cout << "superchannel_valid: " << yes_no(report_passed(rs)) << '\n';
  std::cout << "conj_haar_covariant: " << yes_no(report_passed(cov)) << '\n';
  const bool ok = report_passed(rc) && closed == 1 && report_passed(rs) && report_passed(cov);
  std::cout << "passed: " << yes_no(ok) << '\n';
  emit_artifact(text_of([&](char** t) { return sc_superchannel_to_json(s.get(), t); }), out);
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"superchan: quantum channels and superchannels"};
  app.require_subcommand(1);
  double tol = 1e-10;
  std::string out;
  app.add_option("--tol", tol, "Numerical tolerance")->capture_default_str();

  const std::vector<std::string> kinds{"channel", "superchannel", "du", "do", "dephasing", "pauli"};

  std::string kind, path, path2;
  auto* validate = app.add_subcommand("validate", "Run the validator for a document kind");
  validate->add_option("kind", kind, "Document kind")->required()->check(CLI::IsMember(kinds));
  validate->add_option("path", path, "Input JSON")->required();
  validate->add_option("--tol", tol, "Numerical tolerance");

  std::string channel_path;
  auto* apply = app.add_subcommand("apply", "Apply a superchannel to a channel");
  apply->add_option("super", path, "Superchannel JSON")->required();
  apply->add_option("channel", channel_path, "Channel JSON")->required();
  apply->add_option("--out", out, "Write the output channel here");
  apply->add_option("--tol", tol, "Numerical tolerance");

  auto* compose = app.add_subcommand("compose", "Compose two superchannels (first o second)");
  compose->add_option("kind", kind, "Document kind")
      ->required()
      ->check(CLI::IsMember({"superchannel", "du", "do", "dephasing", "pauli"}));
  compose->add_option("first", path, "Applied second")->required();
  compose->add_option("second", path2, "Applied first")->required();
  compose->add_option("--out", out, "Write the composition here");
  compose->add_option("--tol", tol, "Numerical tolerance");

  std::string group;
  std::size_t samples = 50;
  std::uint64_t seed = 0;
  auto* cov = app.add_subcommand("covariance", "Sampled group-conjugation test");
  cov->add_option("path", path, "Channel or superchannel JSON")->required();
  cov->add_option("--group", group, "Group")
      ->required()
      ->check(CLI::IsMember({"du", "do", "haar", "conj-haar", "mixed"}));
  cov->add_option("--samples", samples, "Number of samples")->capture_default_str();
  cov->add_option("--seed", seed, "Sampler seed")->capture_default_str();
  cov->add_option("--tol", tol, "Numerical tolerance");

  std::string name, super_path;
  double gamma = 0.3;
  std::vector<double> pv;
  std::size_t d = 3;
  auto* example = app.add_subcommand("example", "Reproduce a qubit example");
  example->add_option("name", name, "Example")
      ->required()
      ->check(CLI::IsMember({"amplitude-damping", "bit-flip", "pauli", "holevo-werner"}));
  example->add_option("--gamma", gamma, "Damping parameter")->capture_default_str();
  example->add_option("--p", pv, "Flip probability, or p0 p1 p2 p3 for the Pauli example");
  example->add_option("--d", d, "Dimension for holevo-werner")->capture_default_str();
  example->add_option("--super", super_path, "DU superchannel JSON (default: shipped data file)");
  example->add_option("--out", out, "Write the output here");
  example->add_option("--tol", tol, "Numerical tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  try {
    if (*validate) return cmd_validate(kind, path, tol);
    if (*apply) return cmd_apply(path, channel_path, out, tol);
    if (*compose) return cmd_compose(kind, path, path2, out, tol);
    if (*cov) return cmd_covariance(path, group, samples, seed, tol);
    if (name == "amplitude-damping") return example_amplitude_damping(gamma, super_path, out, tol);
    if (name == "bit-flip") {
      if (pv.size() > 1) invalid("bit-flip takes a single --p");
      return example_bit_flip(pv.empty() ? 0.2 : pv[0], super_path, out, tol);
    }
    if (name == "pauli") return example_pauli(pv.empty() ? std::vector<double>{0.7, 0.1, 0.1, 0.1} : pv, super_path, out, tol);
    return example_holevo_werner(d, out, tol);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  }
}
