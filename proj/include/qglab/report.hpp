// Check records and the JSON certificate format.
#pragma once

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace qglab {

inline constexpr const char* kVersion = "1.0.0";

struct CheckRecord {
  std::string suite;
  std::string check;
  std::string group;
  std::string construction;
  std::string anchor;
  double residual = 0.0;
  std::optional<double> bound;
  double tolerance = 0.0;
  bool pass = false;

  /// pass ⇔ residual ≤ tolerance.
  static CheckRecord residual_check(std::string suite, std::string check, std::string anchor, double residual,
                                    double tolerance) {
    CheckRecord r;
    r.suite = std::move(suite);
    r.check = std::move(check);
    r.anchor = std::move(anchor);
    r.residual = residual;
    r.tolerance = tolerance;
    r.pass = residual <= tolerance;
    return r;
  }

  /// pass ⇔ residual ≤ bound + tolerance.
  static CheckRecord bound_check(std::string suite, std::string check, std::string anchor, double value,
                                 double bound, double slack) {
    CheckRecord r;
    r.suite = std::move(suite);
    r.check = std::move(check);
    r.anchor = std::move(anchor);
    r.residual = value;
    r.bound = bound;
    r.tolerance = slack;
    r.pass = value <= bound + slack;
    return r;
  }

  /// Lower bound check: pass ⇔ residual ≥ tolerance.
  static CheckRecord floor_check(std::string suite, std::string check, std::string anchor, double value,
                                 double floor) {
    CheckRecord r;
    r.suite = std::move(suite);
    r.check = std::move(check);
    r.anchor = std::move(anchor);
    r.residual = value;
    r.tolerance = floor;
    r.pass = value >= floor;
    return r;
  }

  /// Report-only entry; never fails.
  static CheckRecord observation(std::string suite, std::string check, std::string anchor, double value) {
    CheckRecord r;
    r.suite = std::move(suite);
    r.check = std::move(check);
    r.anchor = std::move(anchor);
    r.residual = value;
    r.tolerance = 0.0;
    r.pass = true;
    return r;
  }
};

/// Outcome of an inequality certificate: value ≤ bound + slack.
struct CertRecord {
  double value = 0.0;
  double bound = 0.0;
  double slack = 1e-9;
  double epsilon = 0.0;

  bool holds() const { return value <= bound + slack; }
  double margin() const { return value - bound; }
};

struct CheckReport {
  std::uint64_t seed = 0;
  std::vector<CheckRecord> records;

  void add(CheckRecord r) { records.push_back(std::move(r)); }

  void append(const CheckReport& other) {
    records.insert(records.end(), other.records.begin(), other.records.end());
  }

  /// Stamps group and construction on every record that lacks them.
  CheckReport& label(const std::string& group, const std::string& construction) {
    for (auto& r : records) {
      if (r.group.empty()) r.group = group;
      if (r.construction.empty()) r.construction = construction;
    }
    return *this;
  }

  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](auto& r) { return !r.pass; }));
  }
  bool all_pass() const { return failures() == 0; }

  const CheckRecord* find(const std::string& check) const {
    for (auto& r : records)
      if (r.check == check) return &r;
    return nullptr;
  }

  void sort() {
    std::stable_sort(records.begin(), records.end(), [](const CheckRecord& a, const CheckRecord& b) {
      return std::tie(a.suite, a.group, a.construction, a.check) <
             std::tie(b.suite, b.group, b.construction, b.check);
    });
  }
};

/// Decimal string with 17 significant digits.
inline std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline nlohmann::ordered_json to_json(const CheckReport& report) {
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  j["seed"] = report.seed;
  auto records = nlohmann::ordered_json::array();
  for (const auto& r : report.records) {
    nlohmann::ordered_json e;
    e["suite"] = r.suite;
    e["check"] = r.check;
    e["group"] = r.group;
    e["construction"] = r.construction;
    e["anchor"] = r.anchor;
    e["residual"] = format_real(r.residual);
    e["bound"] = r.bound ? nlohmann::ordered_json(format_real(*r.bound)) : nlohmann::ordered_json(nullptr);
    e["tolerance"] = format_real(r.tolerance);
    e["pass"] = r.pass;
    records.push_back(std::move(e));
  }
  j["records"] = std::move(records);
  const auto failed = report.failures();
  j["summary"] = {{"total", report.records.size()},
                  {"passed", report.records.size() - failed},
                  {"failed", failed}};
  return j;
}

inline std::string serialize(const CheckReport& report) { return to_json(report).dump(2) + "\n"; }

}  // namespace qglab
