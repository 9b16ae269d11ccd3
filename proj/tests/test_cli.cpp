// SPDX-FileCopyrightText: Copyright (c) 2026 superchan contributors
// SPDX-License-Identifier: Apache-2.0

// Runs the command-line tool as a subprocess and checks exit codes and
// printed diagnostics. Fixtures are produced through the C interface.

#include <doctest.h>
#include <json.hpp>
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "superchan/superchan.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string output;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SUPERCHAN_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& s, const std::string& what) { return s.find(what) != std::string::npos; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Workdir {
 public:
  Workdir() {
    std::string tmpl = (fs::temp_directory_path() / "superchan_cli_XXXXXX").string();
    REQUIRE(mkdtemp(tmpl.data()) != nullptr);
    dir_ = tmpl;
  }
  ~Workdir() {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

template <class F>
std::string c_json(F&& f) {
  char* s = nullptr;
  REQUIRE(f(&s) == SC_OK);
  std::string out = s;
  sc_string_free(s);
  return out;
}

std::string channel_json(sc_status (*make)(double, sc_channel**), double x) {
  sc_channel* ch = nullptr;
  REQUIRE(make(x, &ch) == SC_OK);
  const std::string s = c_json([&](char** o) { return sc_channel_to_json(ch, o); });
  sc_channel_free(ch);
  return s;
}

std::vector<double> flat_data(const json& op) {
  std::vector<double> v;
  for (const auto& z : op.at("data")) {
    v.push_back(z.at(0).get<double>());
    v.push_back(z.at(1).get<double>());
  }
  return v;
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::fabs(a[k] - b[k]));
  return m;
}

const std::string kDefaultDU = std::string(SUPERCHAN_DATA_DIR) + "/default_du_d2.json";

// Two-dimensional environment, psi = e_0.
std::string realization(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  const json id = {{"dims", {2}}, {"data", {{1, 0}, {0, 0}, {0, 0}, {1, 0}}}};
  const json rot = {{"dims", {2}}, {"data", {{c, 0}, {-s, 0}, {s, 0}, {c, 0}}}};
  const json ph = {{"dims", {2}}, {"data", {{1, 0}, {0, 0}, {0, 0}, {0, 1}}}};
  return json{{"e", 2}, {"U", {id, rot}}, {"V", {id, ph}}, {"psi", {{1, 0}, {0, 0}}}}.dump();
}

}  // namespace

TEST_CASE("validate reports and exit codes") {
  Workdir w;
  sc_du_params* du = nullptr;
  REQUIRE(sc_du_identity(2, &du) == SC_OK);
  const std::string du_id = w.write("du_id.json", c_json([&](char** o) { return sc_du_to_json(du, o); }));
  sc_du_free(du);
  CHECK(run("validate du " + du_id).code == 0);
  CHECK(run("validate du " + kDefaultDU).code == 0);

  json pi = json::array();
  for (int k = 0; k < 4; ++k) pi.push_back({1.0 / 16, 1.0 / 16, 1.0 / 16, 1.0 / 16});
  const std::string uniform = w.write("uniform.json", json{{"pi", pi}}.dump());
  const Run r = run("validate pauli " + uniform);
  CHECK(r.code == 0);
  CHECK(contains(r.output, "du_covariant: true"));

  // Choi with one eigenvalue -0.01.
  json data = json::array();
  for (int k = 0; k < 16; ++k) data.push_back({0.0, 0.0});
  data[0] = data[15] = {1.0, 0.0};
  data[3] = data[12] = {1.01, 0.0};
  const std::string neg =
      w.write("neg.json", json{{"d_in", 2}, {"d_out", 2}, {"choi", {{"dims", {2, 2}}, {"data", data}}}}.dump());
  const Run n = run("validate channel " + neg);
  CHECK(n.code == 3);
  CHECK(contains(n.output, "min_eig: -1.0e-2"));
  CHECK(contains(n.output, "violation: min_eig"));

  const std::string bad = w.write("bad.json", "{\n  \"d_in\": 2,\n  \"d_out\": 2,\n  \"choi\": [1, 2,,\n}\n");
  const Run p = run("validate channel " + bad);
  CHECK(p.code == 2);
  CHECK(contains(p.output, "line 4"));

  CHECK(run("validate du " + neg).code == 2);
  CHECK(run("validate channel " + w.path("missing.json")).code == 2);
  CHECK(run("validate nonsense " + neg).code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("--help").code == 0);

  const std::string dph = w.write("real.json", realization(0.4));
  CHECK(run("validate dephasing " + dph).code == 0);
}

TEST_CASE("apply") {
  Workdir w;
  sc_superchannel* s = nullptr;
  REQUIRE(sc_superchannel_identity(2, 2, &s) == SC_OK);
  const std::string id = w.write("id.json", c_json([&](char** o) { return sc_superchannel_to_json(s, o); }));
  sc_superchannel_free(s);
  const std::string bf_text = channel_json(sc_channel_bit_flip, 0.2);
  const std::string bf = w.write("bf.json", bf_text);
  const Run r = run("apply " + id + " " + bf + " --out " + w.path("out.json"));
  CHECK(r.code == 0);
  CHECK(contains(r.output, "input_classical:\n  [0.8, 0.2]\n  [0.2, 0.8]\n"));
  const json got = json::parse(slurp(w.path("out.json")));
  CHECK(max_diff(flat_data(got.at("choi")), flat_data(json::parse(bf_text).at("choi"))) == 0.0);

  // Default DU set on amplitude damping: the diagonal carries a1..a4.
  const std::string ad = w.write("ad.json", channel_json(sc_channel_amplitude_damping, 0.3));
  const Run a = run("apply " + kDefaultDU + " " + ad + " --out " + w.path("ad_out.json"));
  CHECK(a.code == 0);
  const std::vector<double> v = flat_data(json::parse(slurp(w.path("ad_out.json"))).at("choi"));
  const double want[4] = {0.93, 0.07, 0.454, 0.546};
  for (int k = 0; k < 4; ++k) CHECK(v[static_cast<std::size_t>(2 * (k * 5))] == doctest::Approx(want[k]).epsilon(1e-14));

  // Weight 1/2 on I (x) I and 1/2 on X (x) I: q = (p + (p1, p0, p3, p2)) / 2.
  json pi = json::array();
  for (int k = 0; k < 4; ++k) pi.push_back({0.0, 0.0, 0.0, 0.0});
  pi[0][0] = 0.5;
  pi[1][0] = 0.5;
  const std::string skew = w.write("skew.json", json{{"pi", pi}}.dump());
  const double p[4] = {0.6, 0.2, 0.15, 0.05};
  sc_channel* ch = nullptr;
  REQUIRE(sc_channel_pauli(p, &ch) == SC_OK);
  const std::string pc = w.write("pc.json", c_json([&](char** o) { return sc_channel_to_json(ch, o); }));
  sc_channel_free(ch);
  const Run q = run("apply " + skew + " " + pc + " --out " + w.path("pq.json"));
  CHECK(q.code == 0);
  CHECK(contains(q.output, "q: [0.4, 0.4, 0.1, 0.1]\n"));
  CHECK(contains(q.output, "q_readoff_deviation: "));

  sc_channel* big = nullptr;
  REQUIRE(sc_channel_depolarizing(3, &big) == SC_OK);
  const std::string dep3 = w.write("dep3.json", c_json([&](char** o) { return sc_channel_to_json(big, o); }));
  sc_channel_free(big);
  CHECK(run("apply " + id + " " + dep3).code == 2);
}

TEST_CASE("compose") {
  Workdir w;
  sc_du_params* du = nullptr;
  REQUIRE(sc_du_identity(2, &du) == SC_OK);
  const std::string du_id = w.write("du_id.json", c_json([&](char** o) { return sc_du_to_json(du, o); }));
  sc_du_free(du);
  const Run r = run("compose du " + kDefaultDU + " " + du_id + " --out " + w.path("c.json"));
  CHECK(r.code == 0);
  const json got = json::parse(slurp(w.path("c.json")));
  const json first = json::parse(slurp(kDefaultDU));
  for (const char* t : {"A", "B", "C", "D"}) CHECK(max_diff(flat_data(got.at(t)), flat_data(first.at(t))) < 1e-15);

  // Dephasing composition multiplies the correlation matrices entrywise.
  const std::string r1 = w.write("r1.json", realization(0.4));
  const std::string r2 = w.write("r2.json", realization(1.1));
  CHECK(run("compose dephasing " + r1 + " " + r2 + " --out " + w.path("m.json")).code == 0);
  auto m_big = [](const std::string& text) {
    sc_dephasing_params* p = nullptr;
    REQUIRE(sc_dephasing_from_realization(text.c_str(), &p) == SC_OK);
    const json j = json::parse(c_json([&](char** o) { return sc_dephasing_to_json(p, o); }));
    sc_dephasing_free(p);
    return flat_data(j.at("M_big"));
  };
  const std::vector<double> m1 = m_big(realization(0.4)), m2 = m_big(realization(1.1));
  const std::vector<double> m = flat_data(json::parse(slurp(w.path("m.json"))).at("M_big"));
  for (std::size_t k = 0; k < m.size(); k += 2) {
    const double re = m1[k] * m2[k] - m1[k + 1] * m2[k + 1];
    const double im = m1[k] * m2[k + 1] + m1[k + 1] * m2[k];
    CHECK(std::fabs(m[k] - re) < 1e-15);
    CHECK(std::fabs(m[k + 1] - im) < 1e-15);
  }

  CHECK(run("compose pauli " + du_id + " " + du_id).code == 2);
}

TEST_CASE("covariance") {
  Workdir w;
  const Run r = run("covariance " + kDefaultDU + " --group du --seed 4");
  CHECK(r.code == 0);
  CHECK(contains(r.output, "samples: 50"));

  json pi = json::array();
  for (int k = 0; k < 4; ++k) pi.push_back({0.0, 0.0, 0.0, 0.0});
  pi[0][0] = 0.5;
  pi[1][0] = 0.5;
  const std::string skew = w.write("skew.json", json{{"pi", pi}}.dump());
  const Run s = run("covariance " + skew + " --group du");
  CHECK(s.code == 3);
  CHECK(contains(s.output, "violation: max_deviation"));

  REQUIRE(run("example holevo-werner --d 3 --out " + w.path("hw.json")).code == 0);
  CHECK(run("covariance " + w.path("hw.json") + " --group conj-haar --samples 10").code == 0);
  CHECK(run("covariance " + skew + " --group nope").code == 2);
}

TEST_CASE("examples") {
  Workdir w;
  const Run a = run("example amplitude-damping --gamma 0.3");
  CHECK(a.code == 0);
  CHECK(contains(a.output, "a1: 0.93\na2: 7.0e-2\na3: 0.454\na4: 0.546\n"));
  CHECK(contains(a.output, "a1 + a2 = 1: true"));
  CHECK(contains(a.output, "a3 + a4 = 1: true"));

  const Run b = run("example bit-flip --p 0.2");
  CHECK(b.code == 0);
  CHECK(contains(b.output, "p_11: 0.764\np_12: 0.236\n"));

  const Run p = run("example pauli --p 0.7 0.1 0.1 0.1");
  CHECK(p.code == 0);
  CHECK(contains(p.output, "corner D_11,22: "));
  CHECK(contains(p.output, "centre D_12,21: 0\n"));

  CHECK(run("example amplitude-damping --gamma 1.5").code == 2);
  CHECK(run("example pauli --p 0.5 0.5").code == 2);
  CHECK(run("example bit-flip --super " + w.path("none.json")).code == 2);
}

TEST_CASE("identical invocations give identical bytes") {
  Workdir w;
  const std::string args = "example amplitude-damping --gamma 0.3 --out ";
  const Run r1 = run(args + w.path("one.json"));
  const Run r2 = run(args + w.path("two.json"));
  REQUIRE(r1.code == 0);
  CHECK(slurp(w.path("one.json")) == slurp(w.path("two.json")));
  CHECK(r1.output.substr(0, r1.output.find("artifact:")) == r2.output.substr(0, r2.output.find("artifact:")));
  const Run c1 = run("covariance " + kDefaultDU + " --group do --seed 9");
  const Run c2 = run("covariance " + kDefaultDU + " --group do --seed 9");
  CHECK(c1.output == c2.output);
}
