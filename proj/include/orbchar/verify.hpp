#pragma once

#include "json.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace orbchar {

enum class CheckStatus { pass, fail, discrepancy };

std::string_view to_string(CheckStatus s);  // "pass", "fail", "paper-discrepancy"

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  long order = 200;           // exact identities, q-powers
  long numeric_order = 10000; // numeric quantum dimensions
  // the numeric check is judged at the last (smallest) y
  std::vector<double> y_schedule{0.02, 0.01, 0.005};
  double tolerance = 5e-2;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<CheckResult> checks;

  std::size_t count(CheckStatus s) const;
  bool ok() const { return count(CheckStatus::fail) == 0; }
  int exit_code() const { return ok() ? 0 : 1; }
  nlohmann::json to_json() const;
  std::string to_text() const;
};

VerifyReport run_verify(const VerifyOptions& options);

// individual checks, also used by the acceptance suite
CheckResult check_group_tables();
CheckResult check_numeric_qdims(const std::vector<double>& y_schedule, double tolerance, long order);
CheckResult check_twisted_qdim_discrepancy();
CheckResult check_s4_label_discrepancy();

}  // namespace orbchar
