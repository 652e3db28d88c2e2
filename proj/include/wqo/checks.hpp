#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wqo/json_io.hpp"

namespace wqo {

enum class CheckStatus { Pass, Fail, ReportOnly };

std::string status_name(CheckStatus s);

struct CheckReport {
  std::string check;
  std::string module;
  std::string statement;  // what the check samples, in plain words
  CheckStatus status = CheckStatus::Pass;
  long long instances = 0;
  // Counterexamples on failure; on success, a few facts observed.
  Json witnesses = Json::array();
  double elapsed_ms = 0;
};

struct CheckOptions {
  std::uint64_t seed = 7;
  std::optional<int> size;  // per-check structural cap; each check documents its meaning
};

struct CheckInfo {
  std::string name;
  std::string module;
  bool report_only = false;
  std::function<CheckReport(const CheckOptions&)> run;
};

// Fixed order; the suite runs and prints checks in this order.
const std::vector<CheckInfo>& check_registry();

// Throws UnknownName for an unknown check.
CheckReport run_check(const std::string& name, const CheckOptions& opts);

struct SuiteReport {
  std::uint64_t seed = 0;
  std::vector<CheckReport> checks;
  bool ok() const;
};

// `only` filters by module name (or check name). Parallel runs produce the
// same reports as serial ones, in registry order.
SuiteReport run_suite(const CheckOptions& opts, const std::optional<std::string>& only, bool parallel);

Json to_json(const CheckReport& r, bool timing = true);
Json to_json(const SuiteReport& r, bool timing = true);
std::string to_text(const CheckReport& r);
std::string to_text(const SuiteReport& r);

}  // namespace wqo
