// SPDX-FileCopyrightText: Copyright (c) 2026 superchan contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace superchan {

using ReportValue = std::variant<bool, std::int64_t, double, std::string>;

struct Violation {
  std::string name;
  double magnitude;
};

// Ordered key/value diagnostics produced by the validators. The overall
// verdict is `passed`; every failing check is also listed as a violation
// carrying its magnitude.
class Report {
 public:
  explicit Report(std::string title = {}) : title_(std::move(title)) {}

  Report& add(const std::string& key, ReportValue value);
  Report& add_violation(const std::string& name, double magnitude);
  // Copies all entries and violations of another report under a key prefix.
  Report& merge(const Report& other, const std::string& prefix);

  void set_passed(bool passed) noexcept { passed_ = passed; }
  bool passed() const noexcept { return passed_; }
  const std::string& title() const noexcept { return title_; }

  const std::vector<std::pair<std::string, ReportValue>>& entries() const noexcept { return entries_; }
  const std::vector<Violation>& violations() const noexcept { return violations_; }
  std::optional<ReportValue> find(const std::string& key) const;

  // "key: value" lines.
  std::string to_text() const;
  std::string to_json() const;

 private:
  std::string title_;
  bool passed_ = true;
  std::vector<std::pair<std::string, ReportValue>> entries_;
  std::vector<Violation> violations_;
};

// Twelve significant digits with trailing zeros dropped; magnitudes below
// 0.1 use a compact scientific form such as -1.0e-2. Used for text output
// only; JSON keeps the exact value.
std::string format_double(double x);

}  // namespace superchan
