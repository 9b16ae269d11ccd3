// SPDX-FileCopyrightText: Copyright (c) 2026 superchan contributors
// SPDX-License-Identifier: Apache-2.0

#include "superchan/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace superchan {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const bool sci = x != 0.0 && std::fabs(x) < 0.1;
  auto res = sci ? std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific, 11)
                 : std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12);
  std::string s(buf, res.ptr);
  if (!sci) return s;
  // to_chars gives e.g. "-1.00000000000e-02"; rewrite as "-1.0e-2".
  const auto e = s.find('e');
  std::string mant = s.substr(0, e);
  std::string expo = s.substr(e + 1);
  while (mant.back() == '0') mant.pop_back();
  if (mant.back() == '.') mant += '0';
  bool neg = !expo.empty() && expo[0] == '-';
  std::size_t k = (!expo.empty() && (expo[0] == '-' || expo[0] == '+')) ? 1 : 0;
  while (k + 1 < expo.size() && expo[k] == '0') ++k;
  return mant + "e" + (neg ? "-" : "") + expo.substr(k);
}

Report& Report::add(const std::string& key, ReportValue value) {
  for (auto& kv : entries_)
    if (kv.first == key) {
      kv.second = std::move(value);
      return *this;
    }
  entries_.emplace_back(key, std::move(value));
  return *this;
}

Report& Report::add_violation(const std::string& name, double magnitude) {
  violations_.push_back({name, magnitude});
  passed_ = false;
  return *this;
}

Report& Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& kv : other.entries_) add(prefix + kv.first, kv.second);
  for (const auto& v : other.violations_) violations_.push_back({prefix + v.name, v.magnitude});
  if (!other.passed_) passed_ = false;
  return *this;
}

std::optional<ReportValue> Report::find(const std::string& key) const {
  for (const auto& kv : entries_)
    if (kv.first == key) return kv.second;
  return std::nullopt;
}

namespace {

std::string value_text(const ReportValue& v) {
  struct Visitor {
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(double d) const { return format_double(d); }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, v);
}

}  // namespace

std::string Report::to_text() const {
  std::ostringstream os;
  if (!title_.empty()) os << "report: " << title_ << '\n';
  for (const auto& kv : entries_) os << kv.first << ": " << value_text(kv.second) << '\n';
  for (const auto& v : violations_) os << "violation: " << v.name << " = " << format_double(v.magnitude) << '\n';
  os << "passed: " << (passed_ ? "true" : "false") << '\n';
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["title"] = title_;
  j["passed"] = passed_;
  nlohmann::ordered_json entries = nlohmann::ordered_json::object();
  for (const auto& kv : entries_)
    std::visit([&](const auto& x) { entries[kv.first] = x; }, kv.second);
  j["entries"] = entries;
  nlohmann::ordered_json viol = nlohmann::ordered_json::array();
  for (const auto& v : violations_) viol.push_back({{"name", v.name}, {"magnitude", v.magnitude}});
  j["violations"] = viol;
  return j.dump(2);
}

}  // namespace superchan
