#pragma once

#include <string>
#include <vector>

namespace casimir {

// One row of the validation report. status is PASS/FAIL for gated checks
// and INFO for measured-discrepancy diagnostics.
struct CheckResult {
  std::string id;
  std::string status;
  double engine = 0.0;
  double oracle = 0.0;
  double deviation = 0.0;  // relative unless the note says otherwise
  double tolerance = 0.0;  // 0 for INFO rows
  std::string note;
};

// Every engine-vs-oracle and oracle-vs-oracle check, in a fixed order with
// fixed seeds; the report is byte-identical across runs.
std::vector<CheckResult> validate_all();

std::string validate_report_csv(const std::vector<CheckResult>& results);
bool all_pass(const std::vector<CheckResult>& results);

// Independent quadrature route for the two-sphere angular average of
// (|x-x'|/R)^p, used as the arbiter for the P_p series/recursion and the
// printed sphere formulas.
double sphere_pair_power_mean_quad(int p, double a_hat, double b_hat,
                                   int polar_order, int azimuthal_order);

}  // namespace casimir
