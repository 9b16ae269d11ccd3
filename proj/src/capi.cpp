// SPDX-FileCopyrightText: Copyright (c) 2026 superchan contributors
// SPDX-License-Identifier: Apache-2.0

#include "superchan/superchan.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "superchan/channel.hpp"
#include "superchan/covariance.hpp"
#include "superchan/dephasing.hpp"
#include "superchan/do_superchannel.hpp"
#include "superchan/du_superchannel.hpp"
#include "superchan/error.hpp"
#include "superchan/json_io.hpp"
#include "superchan/pauli.hpp"
#include "superchan/report.hpp"
#include "superchan/superchannel.hpp"

using namespace superchan;

struct sc_channel {
  ChoiChannel v;
};
struct sc_superchannel {
  SuperChoi v;
};
struct sc_du_params {
  DUSuperParams v;
};
struct sc_do_params {
  DOSuperParams v;
};
struct sc_dephasing_params {
  DephasingSuperParams v;
};
struct sc_pauli_params {
  PauliSuperParams v;
};
struct sc_report {
  Report v;
};

namespace {

thread_local std::string g_last_error;

sc_status map_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return SC_ERR_INVALID_ARGUMENT;
    case ErrorCode::DimensionMismatch: return SC_ERR_DIMENSION_MISMATCH;
    case ErrorCode::OutOfRange: return SC_ERR_OUT_OF_RANGE;
    case ErrorCode::NotHermitian: return SC_ERR_NOT_HERMITIAN;
    case ErrorCode::EigensolverFailure: return SC_ERR_EIGENSOLVER;
    case ErrorCode::NotDUCovariant: return SC_ERR_NOT_DU_COVARIANT;
    case ErrorCode::NotDOCovariant: return SC_ERR_NOT_DO_COVARIANT;
    case ErrorCode::Parse: return SC_ERR_PARSE;
    case ErrorCode::Io: return SC_ERR_IO;
  }
  return SC_ERR_INTERNAL;
}

template <class F>
sc_status guard(F&& f) {
  try {
    g_last_error.clear();
    f();
    return SC_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SC_ERR_INTERNAL;
  }
}

void require(bool cond, const char* what) {
  if (!cond) throw Error(ErrorCode::InvalidArgument, what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Matrix read_complex(const double* re_im, std::size_t rows, std::size_t cols) {
  require(re_im != nullptr, "null matrix buffer");
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t k = 2 * (r * cols + c);
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = Complex(re_im[k], re_im[k + 1]);
    }
  return m;
}

void write_complex(const Matrix& m, double* out, std::size_t len) {
  require(out != nullptr, "null output buffer");
  const auto n = static_cast<std::size_t>(m.rows() * m.cols());
  if (len < 2 * n) throw Error(ErrorCode::DimensionMismatch, "output buffer too small");
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const auto k = 2 * static_cast<std::size_t>(r * m.cols() + c);
      out[k] = m(r, c).real();
      out[k + 1] = m(r, c).imag();
    }
}

template <class T, class V>
void emit(T** out, V&& value) {
  require(out != nullptr, "null output handle");
  *out = new T{std::forward<V>(value)};
}

template <class T>
const T& get(const T* h) {
  if (!h) throw Error(ErrorCode::InvalidArgument, "null handle");
  return *h;
}

std::string read_text(const char* s) {
  require(s != nullptr, "null string");
  return s;
}

std::optional<CovarianceGroup> parse_group(const std::string& name) {
  if (name == "du") return groups::du;
  if (name == "do") return groups::dO;
  if (name == "haar") return groups::haar;
  if (name == "conj-haar") return groups::conj_haar;
  if (name == "mixed") return groups::mixed;
  return std::nullopt;
}

CovarianceGroup require_group(const char* name) {
  const auto g = parse_group(read_text(name));
  if (!g) throw Error(ErrorCode::InvalidArgument, "unknown group: " + std::string(name));
  return *g;
}

UUVariant to_variant(sc_uu_variant v) {
  switch (v) {
    case SC_UU_COVARIANT: return UUVariant::Covariant;
    case SC_UU_CONJUGATE: return UUVariant::Conjugate;
    case SC_UU_MIXED: return UUVariant::Mixed;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown variant");
}

std::array<double, 4> read4(const double* p) {
  require(p != nullptr, "null probability buffer");
  return {p[0], p[1], p[2], p[3]};
}

Report superchannel_full_report(const SuperChoi& s, double tol) {
  const auto generic = validate_superchannel(s, tol);
  const auto tp = tp_preserving_check(s, tol);
  Report r("superchannel");
  r.merge(generic.to_report(), "cp.");
  r.merge(tp.to_report(), "tp.");
  r.set_passed(generic.valid() && tp.passed());
  return r;
}

}  // namespace

extern "C" {

const char* sc_last_error(void) { return g_last_error.c_str(); }

const char* sc_status_name(sc_status status) {
  switch (status) {
    case SC_OK: return "ok";
    case SC_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case SC_ERR_DIMENSION_MISMATCH: return "dimension-mismatch";
    case SC_ERR_OUT_OF_RANGE: return "out-of-range";
    case SC_ERR_NOT_HERMITIAN: return "not-hermitian";
    case SC_ERR_EIGENSOLVER: return "eigensolver-failure";
    case SC_ERR_NOT_DU_COVARIANT: return "not-du-covariant";
    case SC_ERR_NOT_DO_COVARIANT: return "not-do-covariant";
    case SC_ERR_PARSE: return "parse-error";
    case SC_ERR_IO: return "io-error";
    case SC_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

void sc_string_free(char* s) { std::free(s); }

sc_status sc_format_double(double x, char* buf, size_t len) {
  return guard([&] {
    require(buf != nullptr, "null output buffer");
    const std::string s = format_double(x);
    if (len < s.size() + 1) throw Error(ErrorCode::DimensionMismatch, "output buffer too small");
    std::memcpy(buf, s.c_str(), s.size() + 1);
  });
}

const char* sc_version(void) { return "0.1.0"; }

// ---- reports ---------------------------------------------------------------

void sc_report_free(sc_report* r) { delete r; }

int sc_report_passed(const sc_report* r) { return r && r->v.passed() ? 1 : 0; }

sc_status sc_report_to_text(const sc_report* r, char** out) {
  return guard([&] {
    require(out != nullptr, "null output");
    *out = dup_string(get(r).v.to_text());
  });
}

sc_status sc_report_to_json(const sc_report* r, char** out) {
  return guard([&] {
    require(out != nullptr, "null output");
    *out = dup_string(get(r).v.to_json());
  });
}

sc_status sc_report_get_double(const sc_report* r, const char* key, double* out) {
  return guard([&] {
    require(out != nullptr, "null output");
    const auto v = get(r).v.find(read_text(key));
    if (!v) throw Error(ErrorCode::InvalidArgument, "no such key: " + std::string(key));
    if (const auto* d = std::get_if<double>(&*v)) {
      *out = *d;
    } else if (const auto* i = std::get_if<std::int64_t>(&*v)) {
      *out = static_cast<double>(*i);
    } else if (const auto* b = std::get_if<bool>(&*v)) {
      *out = *b ? 1.0 : 0.0;
    } else {
      throw Error(ErrorCode::InvalidArgument, "key is not numeric: " + std::string(key));
    }
  });
}

sc_status sc_report_get_bool(const sc_report* r, const char* key, int* out) {
  return guard([&] {
    require(out != nullptr, "null output");
    const auto v = get(r).v.find(read_text(key));
    if (!v) throw Error(ErrorCode::InvalidArgument, "no such key: " + std::string(key));
    const auto* b = std::get_if<bool>(&*v);
    if (!b) throw Error(ErrorCode::InvalidArgument, "key is not boolean: " + std::string(key));
    *out = *b ? 1 : 0;
  });
}

size_t sc_report_violation_count(const sc_report* r) { return r ? r->v.violations().size() : 0; }

// ---- channels --------------------------------------------------------------

void sc_channel_free(sc_channel* ch) { delete ch; }

sc_status sc_channel_from_json(const char* text, sc_channel** out) {
  return guard([&] { emit(out, json::channel_from_json(json::parse(read_text(text)))); });
}

sc_status sc_channel_load(const char* path, sc_channel** out) {
  return guard([&] { emit(out, json::channel_from_json(json::read_file(read_text(path)))); });
}

sc_status sc_channel_to_json(const sc_channel* ch, char** out) {
  return guard([&] {
    require(out != nullptr, "null output");
    *out = dup_string(json::dump(json::to_json(get(ch).v)));
  });
}

sc_status sc_channel_from_choi(size_t d_in, size_t d_out, const double* re_im, sc_channel** out) {
  return guard([&] {
    const std::size_t n = d_in * d_out;
    emit(out, ChoiChannel(d_in, d_out, read_complex(re_im, n, n)));
  });
}

sc_status sc_channel_dims(const sc_channel* ch, size_t* d_in, size_t* d_out) {
  return guard([&] {
    require(d_in && d_out, "null output");
    *d_in = get(ch).v.d_in();
    *d_out = get(ch).v.d_out();
  });
}

sc_status sc_channel_choi(const sc_channel* ch, double* re_im, size_t len) {
  return guard([&] { write_complex(get(ch).v.matrix(), re_im, len); });
}

sc_status sc_channel_classical(const sc_channel* ch, double* s, size_t len) {
  return guard([&] {
    const RealMatrix m = classical_channel_extract(get(ch).v);
    require(s != nullptr, "null output");
    if (len < static_cast<std::size_t>(m.size())) throw Error(ErrorCode::DimensionMismatch, "output buffer too small");
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c) s[r * m.cols() + c] = m(r, c);
  });
}

sc_status sc_channel_validate(const sc_channel* ch, double tol, sc_report** out) {
  return guard([&] {
    const auto v = validate_channel(get(ch).v, tol);
    emit(out, v.to_report());
  });
}

sc_status sc_channel_compose(const sc_channel* f, const sc_channel* g, sc_channel** out) {
  return guard([&] { emit(out, compose_channels(get(f).v, get(g).v)); });
}

sc_status sc_channel_apply(const sc_channel* ch, const double* rho, double* out, size_t out_len) {
  return guard([&] {
    const auto& c = get(ch).v;
    const Matrix x = read_complex(rho, c.d_in(), c.d_in());
    write_complex(apply_channel(c, x), out, out_len);
  });
}

sc_status sc_channel_covariance(const sc_channel* ch, const char* group, size_t samples, uint64_t seed,
                                double tol, sc_report** out) {
  return guard([&] {
    const auto& c = get(ch).v;
    if (c.d_in() != c.d_out()) throw Error(ErrorCode::DimensionMismatch, "covariance check needs d_in == d_out");
    const std::string g = read_text(group);
    GroupKind kind;
    Link link = Link::Same;
    if (g == "du") {
      kind = GroupKind::DiagonalUnitary;
    } else if (g == "do") {
      kind = GroupKind::DiagonalOrthogonal;
    } else if (g == "haar") {
      kind = GroupKind::HaarUnitary;
    } else if (g == "conj-haar") {
      kind = GroupKind::HaarUnitary;
      link = Link::Conjugate;
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown channel group: " + g);
    }
    GroupSampler sampler(kind, c.d_in(), seed);
    emit(out, channel_covariance_check(c, sampler, link, samples, tol).to_report());
  });
}

sc_status sc_channel_identity(size_t d, sc_channel** out) {
  return guard([&] { emit(out, channels::identity(d)); });
}
sc_status sc_channel_depolarizing(size_t d, sc_channel** out) {
  return guard([&] { emit(out, channels::depolarizing(d)); });
}
sc_status sc_channel_transpose(size_t d, sc_channel** out) {
  return guard([&] { emit(out, channels::transpose_map(d)); });
}
sc_status sc_channel_amplitude_damping(double gamma, sc_channel** out) {
  return guard([&] { emit(out, channels::amplitude_damping(gamma)); });
}
sc_status sc_channel_bit_flip(double p, sc_channel** out) {
  return guard([&] { emit(out, channels::bit_flip(p)); });
}
sc_status sc_channel_pauli(const double p[4], sc_channel** out) {
  return guard([&] { emit(out, channels::pauli_channel(read4(p))); });
}
sc_status sc_channel_dephasing(size_t d, const double* m, sc_channel** out) {
  return guard([&] { emit(out, channels::dephasing_channel(read_complex(m, d, d))); });
}
sc_status sc_channel_unitary_covariant(double lambda, size_t d, sc_channel** out) {
  return guard([&] { emit(out, channels::unitary_covariant(lambda, d)); });
}
sc_status sc_channel_conjugate_covariant(double mu, size_t d, sc_channel** out) {
  return guard([&] { emit(out, channels::conjugate_covariant(mu, d)); });
}
sc_status sc_channel_holevo_werner(size_t d, sc_channel** out) {
  return guard([&] { emit(out, channels::holevo_werner(d)); });
}
sc_status sc_channel_orthogonal_covariant(double alpha, double beta, size_t d, sc_channel** out) {
  return guard([&] { emit(out, channels::orthogonal_covariant(alpha, beta, d)); });
}

// ---- generic superchannels --------------------------------------------------

void sc_superchannel_free(sc_superchannel* s) { delete s; }

sc_status sc_superchannel_from_json(const char* text, sc_superchannel** out) {
  return guard([&] { emit(out, json::superchannel_from_json(json::parse(read_text(text)))); });
}

sc_status sc_superchannel_load(const char* path, sc_superchannel** out) {
  return guard([&] { emit(out, json::superchannel_from_json(json::read_file(read_text(path)))); });
}

sc_status sc_superchannel_to_json(const sc_superchannel* s, char** out) {
  return guard([&] {
    require(out != nullptr, "null output");
    *out = dup_string(json::dump(json::to_json(get(s).v)));
  });
}

sc_status sc_superchannel_dims(const sc_superchannel* s, size_t dims[4]) {
  return guard([&] {
    require(dims != nullptr, "null output");
    const auto& d = get(s).v.dims();
    dims[0] = d.a0;
    dims[1] = d.a1;
    dims[2] = d.b0;
    dims[3] = d.b1;
  });
}

sc_status sc_superchannel_choi(const sc_superchannel* s, double* re_im, size_t len) {
  return guard([&] { write_complex(get(s).v.matrix(), re_im, len); });
}

sc_status sc_superchannel_identity(size_t d_a0, size_t d_a1, sc_superchannel** out) {
  return guard([&] { emit(out, identity_superchannel(d_a0, d_a1)); });
}

sc_status sc_superchannel_sandwich(const sc_channel* n0, const sc_channel* n1, sc_superchannel** out) {
  return guard([&] { emit(out, sandwich_superchannel(get(n0).v, get(n1).v)); });
}

sc_status sc_superchannel_apply(const sc_superchannel* s, const sc_channel* phi, sc_channel** out) {
  return guard([&] { emit(out, apply_superchannel(get(s).v, get(phi).v)); });
}

sc_status sc_superchannel_compose(const sc_superchannel* s2, const sc_superchannel* s1, sc_superchannel** out) {
  return guard([&] { emit(out, compose_superchannels(get(s2).v, get(s1).v)); });
}

sc_status sc_superchannel_validate(const sc_superchannel* s, double tol, sc_report** out) {
  return guard([&] { emit(out, superchannel_full_report(get(s).v, tol)); });
}

sc_status sc_superchannel_tp_check(const sc_superchannel* s, double tol, sc_report** out, sc_channel** induced) {
  return guard([&] {
    auto tp = tp_preserving_check(get(s).v, tol);
    require(out != nullptr, "null output");
    auto report = std::make_unique<sc_report>(sc_report{tp.to_report()});
    if (induced) *induced = new sc_channel{tp.induced};
    *out = report.release();
  });
}

sc_status sc_superchannel_covariance(const sc_superchannel* s, const char* group, size_t samples,
                                     uint64_t seed, double tol, sc_report** out) {
  return guard([&] {
    const auto g = require_group(group);
    emit(out, superchannel_covariance_check(get(s).v, g, samples, seed, tol).to_report());
  });
}

sc_status sc_superchannel_classical(const sc_superchannel* s, double tol, double* T, size_t len,
                                    sc_report** out) {
  return guard([&] {
    const auto cl = classical_superchannel_extract(get(s).v);
    if (T) {
      if (len < static_cast<std::size_t>(cl.T.size()))
        throw Error(ErrorCode::DimensionMismatch, "output buffer too small");
      for (Eigen::Index r = 0; r < cl.T.rows(); ++r)
        for (Eigen::Index c = 0; c < cl.T.cols(); ++c) T[r * cl.T.cols() + c] = cl.T(r, c);
    }
    Report r("classical");
    r.add("min_entry", cl.min_entry);
    r.add("marginal_deviation", cl.marginal_deviation);
    r.add("normalization_deviation", cl.normalization_deviation);
    if (cl.min_entry < -tol) r.add_violation("negative_entry", -cl.min_entry);
    if (cl.marginal_deviation > tol) r.add_violation("marginal", cl.marginal_deviation);
    if (cl.normalization_deviation > tol) r.add_violation("normalization", cl.normalization_deviation);
    emit(out, std::move(r));
  });
}

sc_status sc_superchannel_uu(sc_uu_variant variant, const double p[4], size_t d, sc_superchannel** out) {
  return guard([&] { emit(out, uu_superchannel(UUFamilyParams(to_variant(variant), read4(p), d))); });
}

sc_status sc_superchannel_uu_cp_closed_form(sc_uu_variant variant, const double p[4], size_t d, int* out) {
  return guard([&] {
    require(out != nullptr, "null output");
    *out = uu_cp_closed_form(UUFamilyParams(to_variant(variant), read4(p), d)) ? 1 : 0;
  });
}

sc_status sc_superchannel_holevo_werner(size_t d, sc_superchannel** out) {
  return guard([&] { emit(out, holevo_werner_superchannel(d)); });
}

// ---- DU superchannels --------------------------------------------------------

void sc_du_free(sc_du_params* p) { delete p; }

sc_status sc_du_from_json(const char* text, sc_du_params** out) {
  return guard([&] { emit(out, json::du_from_json(json::parse(read_text(text)))); });
}

sc_status sc_du_load(const char* path, sc_du_params** out) {
  return guard([&] { emit(out, json::du_from_json(json::read_file(read_text(path)))); });
}

sc_status sc_du_to_json(const sc_du_params* p, char** out) {
  return guard([&] {
    require(out != nullptr, "null output");
    *out = dup_string(json::dump(json::to_json(get(p).v)));
  });
}

sc_status sc_du_dim(const sc_du_params* p, size_t* d) {
  return guard([&] {
    require(d != nullptr, "null output");
    *d = get(p).v.d();
  });
}

sc_status sc_du_identity(size_t d, sc_du_params** out) {
  return guard([&] { emit(out, du_identity(d)); });
}

sc_status sc_du_build_choi(const sc_du_params* p, sc_superchannel** out) {
  return guard([&] { emit(out, build_choi(get(p).v)); });
}

sc_status sc_du_from_choi(const sc_superchannel* s, double tol, sc_du_params** out) {
  return guard([&] { emit(out, du_from_choi(get(s).v, tol)); });
}

sc_status sc_du_tp_check(const sc_du_params* p, double tol, sc_report** out) {
  return guard([&] { emit(out, du_tp_check(get(p).v, tol).to_report()); });
}

sc_status sc_du_cp_check(const sc_du_params* p, double tol, sc_report** out) {
  return guard([&] { emit(out, du_cp_check(get(p).v, tol).to_report()); });
}

sc_status sc_du_validate(const sc_du_params* p, double tol, sc_report** out) {
  return guard([&] {
    const auto& params = get(p).v;
    const auto tp = du_tp_check(params, tol);
    const auto cp = du_cp_check(params, tol);
    const auto generic = superchannel_full_report(build_choi(params), tol);
    Report r("du-superchannel");
    r.merge(tp.to_report(), "tp.");
    r.merge(cp.to_report(), "cp.");
    r.merge(generic, "generic.");
    r.add("closed_form_valid", tp.passed() && cp.closed_form());
    r.add("agrees", (tp.passed() && cp.closed_form()) == generic.passed());
    r.set_passed(tp.passed() && cp.passed() && generic.passed());
    emit(out, std::move(r));
  });
}

sc_status sc_du_compose(const sc_du_params* p, const sc_du_params* q, sc_du_params** out) {
  return guard([&] { emit(out, du_compose(get(p).v, get(q).v)); });
}

sc_status sc_du_block_action(const sc_du_params* p, const sc_channel* phi, sc_channel** out) {
  return guard([&] {
    const auto& params = get(p).v;
    const auto& c = get(phi).v;
    if (c.d_in() != params.d() || c.d_out() != params.d())
      throw Error(ErrorCode::DimensionMismatch, "channel dimension does not match superchannel");
    emit(out, ChoiChannel(params.d(), params.d(), du_block_action(params, c.matrix())));
  });
}

sc_status sc_du_action_on_identity(const sc_du_params* p, sc_channel** out) {
  return guard([&] { emit(out, du_action_on_identity(get(p).v).channel); });
}

sc_status sc_du_preserves_do(const sc_du_params* p, size_t n, uint64_t seed, double tol, sc_report** out) {
  return guard([&] { emit(out, du_preserves_do_check(get(p).v, n, tol, seed).to_report()); });
}

sc_status sc_du_entry(const sc_du_params* p, char table, size_t i, size_t a, size_t j, size_t b, double out[2]) {
  return guard([&] {
    const auto& params = get(p).v;
    require(out != nullptr, "null output");
    const std::size_t d = params.d();
    if (i >= d || a >= d || j >= d || b >= d) throw Error(ErrorCode::OutOfRange, "index out of range");
    Complex v;
    switch (table) {
      case 'A': v = params.A(i, a, j, b); break;
      case 'B': v = params.B(i, a, j, b); break;
      case 'C': v = params.C(i, a, j, b); break;
      case 'D': v = params.D(i, a, j, b); break;
      default: throw Error(ErrorCode::InvalidArgument, "table must be one of A, B, C, D");
    }
    out[0] = v.real();
    out[1] = v.imag();
  });
}

// ---- DO superchannels --------------------------------------------------------

void sc_do_free(sc_do_params* p) { delete p; }

sc_status sc_do_from_json(const char* text, sc_do_params** out) {
  return guard([&] { emit(out, json::do_from_json(json::parse(read_text(text)))); });
}

sc_status sc_do_load(const char* path, sc_do_params** out) {
  return guard([&] { emit(out, json::do_from_json(json::read_file(read_text(path)))); });
}

sc_status sc_do_to_json(const sc_do_params* p, char** out) {
  return guard([&] {
    require(out != nullptr, "null output");
    *out = dup_string(json::dump(json::to_json(get(p).v)));
  });
}

sc_status sc_do_build_choi(const sc_do_params* p, sc_superchannel** out) {
  return guard([&] { emit(out, do_build_choi(get(p).v)); });
}

sc_status sc_do_from_choi(const sc_superchannel* s, double tol, sc_do_params** out) {
  return guard([&] { emit(out, do_from_choi(get(s).v, tol)); });
}

sc_status sc_do_embed_du(const sc_du_params* p, sc_do_params** out) {
  return guard([&] { emit(out, do_embed_du(get(p).v)); });
}

sc_status sc_do_validate(const sc_do_params* p, double tol, sc_report** out) {
  return guard([&] { emit(out, do_validate(get(p).v, tol).to_report()); });
}

// ---- dephasing superchannels ---------------------------------------------------

void sc_dephasing_free(sc_dephasing_params* p) { delete p; }

sc_status sc_dephasing_from_json(const char* text, sc_dephasing_params** out) {
  return guard([&] { emit(out, json::dephasing_from_json(json::parse(read_text(text)))); });
}

sc_status sc_dephasing_load(const char* path, sc_dephasing_params** out) {
  return guard([&] { emit(out, json::dephasing_from_json(json::read_file(read_text(path)))); });
}

sc_status sc_dephasing_to_json(const sc_dephasing_params* p, char** out) {
  return guard([&] {
    require(out != nullptr, "null output");
    *out = dup_string(json::dump(json::to_json(get(p).v)));
  });
}

sc_status sc_dephasing_from_realization(const char* text, sc_dephasing_params** out) {
  return guard([&] {
    const auto r = json::realization_from_json(json::parse(read_text(text)));
    emit(out, dephasing_from_realization(r.u, r.v, r.psi));
  });
}

sc_status sc_dephasing_validate(const sc_dephasing_params* p, double tol, sc_report** out) {
  return guard([&] { emit(out, dephasing_validate(get(p).v, tol).to_report()); });
}

sc_status sc_dephasing_choi(const sc_dephasing_params* p, sc_superchannel** out) {
  return guard([&] { emit(out, dephasing_super_choi(get(p).v)); });
}

sc_status sc_dephasing_apply(const sc_dephasing_params* p, const sc_channel* phi, sc_channel** out) {
  return guard([&] { emit(out, dephasing_super_apply(get(p).v, get(phi).v)); });
}

sc_status sc_dephasing_compose(const sc_dephasing_params* p, const sc_dephasing_params* q,
                               sc_dephasing_params** out) {
  return guard([&] { emit(out, dephasing_compose(get(p).v, get(q).v)); });
}

sc_status sc_dephasing_embed_du(const sc_dephasing_params* p, sc_du_params** out) {
  return guard([&] { emit(out, dephasing_embed_du(get(p).v)); });
}

sc_status sc_dephasing_on_dephasing(const sc_dephasing_params* p, const double* m, double* out, size_t len) {
  return guard([&] {
    const auto& params = get(p).v;
    write_complex(dephasing_on_dephasing(params, read_complex(m, params.d(), params.d())), out, len);
  });
}

// ---- Pauli superchannels --------------------------------------------------------

void sc_pauli_free(sc_pauli_params* p) { delete p; }

sc_status sc_pauli_create(const double pi[16], sc_pauli_params** out) {
  return guard([&] {
    require(pi != nullptr, "null buffer");
    Eigen::Matrix4d m;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m(r, c) = pi[4 * r + c];
    emit(out, PauliSuperParams(m));
  });
}

sc_status sc_pauli_from_json(const char* text, sc_pauli_params** out) {
  return guard([&] { emit(out, json::pauli_from_json(json::parse(read_text(text)))); });
}

sc_status sc_pauli_load(const char* path, sc_pauli_params** out) {
  return guard([&] { emit(out, json::pauli_from_json(json::read_file(read_text(path)))); });
}

sc_status sc_pauli_to_json(const sc_pauli_params* p, char** out) {
  return guard([&] {
    require(out != nullptr, "null output");
    *out = dup_string(json::dump(json::to_json(get(p).v)));
  });
}

sc_status sc_pauli_choi(const sc_pauli_params* p, sc_superchannel** out) {
  return guard([&] { emit(out, pauli_super_choi(get(p).v)); });
}

sc_status sc_pauli_from_choi(const sc_superchannel* s, double tol, sc_pauli_params** out) {
  return guard([&] { emit(out, pauli_from_choi(get(s).v, tol)); });
}

sc_status sc_pauli_du_check(const sc_pauli_params* p, double tol, sc_report** out) {
  return guard([&] { emit(out, pauli_du_check(get(p).v, tol).to_report()); });
}

sc_status sc_pauli_validate(const sc_pauli_params* p, double tol, sc_report** out) {
  return guard([&] {
    const auto& params = get(p).v;
    const auto generic = superchannel_full_report(pauli_super_choi(params), tol);
    const auto du = pauli_du_check(params, tol);
    Report r("pauli-superchannel");
    r.merge(generic, "generic.");
    r.merge(du.to_report(), "du.");
    r.add("du_covariant", du.du_covariant());
    r.set_passed(generic.passed() && du.agrees());
    emit(out, std::move(r));
  });
}

sc_status sc_pauli_bistochastic(const sc_pauli_params* p, double m[16]) {
  return guard([&] {
    require(m != nullptr, "null output");
    const Eigen::Matrix4d b = pauli_induced_bistochastic(get(p).v);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m[4 * r + c] = b(r, c);
  });
}

sc_status sc_pauli_apply(const sc_pauli_params* p, const double q_in[4], double q_out[4]) {
  return guard([&] {
    require(q_out != nullptr, "null output");
    const auto q = pauli_apply(get(p).v, read4(q_in));
    for (int k = 0; k < 4; ++k) q_out[k] = q[static_cast<std::size_t>(k)];
  });
}

sc_status sc_pauli_bell_readoff(const sc_channel* ch, double q[4]) {
  return guard([&] {
    require(q != nullptr, "null output");
    const auto r = bell_diagonal_readoff(get(ch).v);
    for (int k = 0; k < 4; ++k) q[k] = r[static_cast<std::size_t>(k)];
  });
}

sc_status sc_pauli_marginal(const sc_pauli_params* p, sc_channel** out) {
  return guard([&] { emit(out, pauli_marginal_channel(get(p).v)); });
}

sc_status sc_pauli_compose(const sc_pauli_params* p2, const sc_pauli_params* p1, sc_pauli_params** out) {
  return guard([&] { emit(out, pauli_compose(get(p2).v, get(p1).v)); });
}

}  // extern "C"
