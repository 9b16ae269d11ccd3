// SPDX-FileCopyrightText: Copyright (c) 2026 superchan contributors
// SPDX-License-Identifier: Apache-2.0

#include "superchan/json_io.hpp"

#include <fstream>
#include <sstream>

#include "superchan/error.hpp"

namespace superchan::json {

namespace {

using Idx = Eigen::Index;

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorCode::Parse, "schema: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) schema_error("expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t positive(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() <= 0) schema_error(std::string(what) + " must be a positive integer");
  return j.get<std::size_t>();
}

double number(const json& j, const char* what) {
  if (!j.is_number()) schema_error(std::string(what) + " must be a number");
  return j.get<double>();
}

Complex complex_from(const json& j) {
  if (!j.is_array() || j.size() != 2) schema_error("complex entries are [re, im] pairs");
  return {number(j[0], "re"), number(j[1], "im")};
}

json complex_to(Complex z) { return json::array({z.real(), z.imag()}); }

}  // namespace

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    for (std::size_t k = 0; k + 1 < upto; ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::Parse, "parse error at line " + std::to_string(line) + ", position " +
                                      std::to_string(col) + ": " + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << dump(j);
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path);
}

json to_json(const MultipartiteOperator& m) {
  json data = json::array();
  const Matrix& x = m.matrix();
  for (Idx r = 0; r < x.rows(); ++r)
    for (Idx c = 0; c < x.cols(); ++c) data.push_back(complex_to(x(r, c)));
  return {{"dims", m.dims()}, {"data", std::move(data)}};
}

MultipartiteOperator operator_from_json(const json& j) {
  const json& jd = field(j, "dims");
  if (!jd.is_array() || jd.empty()) schema_error("dims must be a nonempty array");
  Dims dims;
  for (const auto& v : jd) dims.push_back(positive(v, "dims entry"));
  const std::size_t n = dims_product(dims);
  const json& data = field(j, "data");
  if (!data.is_array() || data.size() != n * n)
    schema_error("data must hold " + std::to_string(n * n) + " entries");
  Matrix m(static_cast<Idx>(n), static_cast<Idx>(n));
  for (std::size_t k = 0; k < n * n; ++k) m(static_cast<Idx>(k / n), static_cast<Idx>(k % n)) = complex_from(data[k]);
  return {std::move(dims), std::move(m)};
}

json table_to_json(const Matrix& m, std::size_t d) { return to_json(MultipartiteOperator(Dims{d, d}, m)); }

Matrix table_from_json(const json& j, std::size_t d, const char* name) {
  MultipartiteOperator m = operator_from_json(j);
  if (m.dims() != Dims{d, d}) schema_error(std::string("table ") + name + " must have dims [d, d]");
  return m.matrix();
}

json to_json(const ChoiChannel& ch) {
  return {{"d_in", ch.d_in()}, {"d_out", ch.d_out()}, {"choi", to_json(ch.choi())}};
}

ChoiChannel channel_from_json(const json& j) {
  const std::size_t din = positive(field(j, "d_in"), "d_in");
  const std::size_t dout = positive(field(j, "d_out"), "d_out");
  MultipartiteOperator c = operator_from_json(field(j, "choi"));
  if (c.dims() != Dims{din, dout}) schema_error("choi dims must be [d_in, d_out]");
  return ChoiChannel(std::move(c));
}

json to_json(const SuperChoi& s) {
  const SuperDims& d = s.dims();
  return {{"dims", {{"A0", d.a0}, {"A1", d.a1}, {"B0", d.b0}, {"B1", d.b1}}}, {"choi", to_json(s.choi())}};
}

SuperChoi superchannel_from_json(const json& j) {
  const json& jd = field(j, "dims");
  const SuperDims d{positive(field(jd, "A0"), "A0"), positive(field(jd, "A1"), "A1"),
                    positive(field(jd, "B0"), "B0"), positive(field(jd, "B1"), "B1")};
  MultipartiteOperator c = operator_from_json(field(j, "choi"));
  if (c.dims() != Dims{d.a0, d.a1, d.b0, d.b1}) schema_error("choi dims must be [A0, A1, B0, B1]");
  return SuperChoi(std::move(c));
}

json to_json(const DUSuperParams& p) {
  const std::size_t d = p.d();
  return {{"d", d},
          {"A", table_to_json(p.A().cast<Complex>(), d)},
          {"B", table_to_json(p.B(), d)},
          {"C", table_to_json(p.C(), d)},
          {"D", table_to_json(p.D(), d)}};
}

DUSuperParams du_from_json(const json& j) {
  const std::size_t d = positive(field(j, "d"), "d");
  const Matrix a = table_from_json(field(j, "A"), d, "A");
  if (a.imag().cwiseAbs().maxCoeff() != 0.0) schema_error("table A must be real");
  return {d, a.real(), table_from_json(field(j, "B"), d, "B"), table_from_json(field(j, "C"), d, "C"),
          table_from_json(field(j, "D"), d, "D")};
}

json to_json(const DOSuperParams& p) {
  json j = {{"d", p.d()}};
  for (DOTable t : kDOTables) j[do_table_name(t)] = table_to_json(p.table(t), p.d());
  return j;
}

DOSuperParams do_from_json(const json& j) {
  const std::size_t d = positive(field(j, "d"), "d");
  std::array<Matrix, 9> t;
  for (DOTable tab : kDOTables)
    t[static_cast<std::size_t>(tab)] = table_from_json(field(j, do_table_name(tab)), d, do_table_name(tab));
  return {d, std::move(t)};
}

json to_json(const DephasingSuperParams& p) {
  return {{"d", p.d()}, {"M_big", table_to_json(p.M_big(), p.d())}};
}

DephasingSuperParams dephasing_from_json(const json& j) {
  const std::size_t d = positive(field(j, "d"), "d");
  return {d, table_from_json(field(j, "M_big"), d, "M_big")};
}

Realization realization_from_json(const json& j) {
  const std::size_t e = positive(field(j, "e"), "e");
  Realization r;
  auto list = [&](const char* key, std::vector<Matrix>& out) {
    const json& arr = field(j, key);
    if (!arr.is_array()) schema_error(std::string(key) + " must be an array of matrices");
    for (const auto& m : arr) {
      MultipartiteOperator op = operator_from_json(m);
      if (op.side() != e) schema_error(std::string(key) + " entries must be e x e");
      out.push_back(op.matrix());
    }
  };
  list("U", r.u);
  list("V", r.v);
  const json& psi = field(j, "psi");
  if (!psi.is_array() || psi.size() != e) schema_error("psi must hold e entries");
  r.psi.resize(static_cast<Idx>(e));
  for (std::size_t k = 0; k < e; ++k) r.psi(static_cast<Idx>(k)) = complex_from(psi[k]);
  return r;
}

json to_json(const Realization& r) {
  const std::size_t e = static_cast<std::size_t>(r.psi.size());
  json u = json::array(), v = json::array(), psi = json::array();
  for (const Matrix& m : r.u) u.push_back(to_json(MultipartiteOperator(Dims{e}, m)));
  for (const Matrix& m : r.v) v.push_back(to_json(MultipartiteOperator(Dims{e}, m)));
  for (Idx k = 0; k < r.psi.size(); ++k) psi.push_back(complex_to(r.psi(k)));
  return {{"e", e}, {"U", u}, {"V", v}, {"psi", psi}};
}

json to_json(const PauliSuperParams& p) {
  json rows = json::array();
  for (int mu = 0; mu < 4; ++mu) {
    json row = json::array();
    for (int nu = 0; nu < 4; ++nu) row.push_back(p.pi(mu, nu));
    rows.push_back(row);
  }
  return {{"pi", rows}};
}

PauliSuperParams pauli_from_json(const json& j) {
  const json& pi = field(j, "pi");
  Eigen::Matrix4d m;
  if (pi.is_array() && pi.size() == 16 && pi[0].is_number()) {
    for (int k = 0; k < 16; ++k) m(k / 4, k % 4) = number(pi[static_cast<std::size_t>(k)], "pi entry");
  } else {
    if (!pi.is_array() || pi.size() != 4) schema_error("pi must be a 4x4 array");
    for (int mu = 0; mu < 4; ++mu) {
      const json& row = pi[static_cast<std::size_t>(mu)];
      if (!row.is_array() || row.size() != 4) schema_error("pi rows must have 4 entries");
      for (int nu = 0; nu < 4; ++nu) m(mu, nu) = number(row[static_cast<std::size_t>(nu)], "pi entry");
    }
  }
  return PauliSuperParams(m);
}

}  // namespace superchan::json
