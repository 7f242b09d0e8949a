#pragma once

#include <string>
#include <vector>

#include "su3/cg.hpp"
#include "su3/json_io.hpp"

namespace su3 {

struct RunConfig {
  uint64_t seed = 12345;
  double tol_override = 0.0;  // 0 keeps the per-check defaults
  int gauss_order = 24;
  long mc_samples = 100000;
};

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool pass() const;
};

// Suites: fundamental, adjoint, diffops, irreps, haar, cg.
const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const RunConfig& cfg);
std::vector<SuiteReport> run_all(const RunConfig& cfg);

std::string report_to_json(const SuiteReport& rep);
std::string reports_to_json(const std::vector<SuiteReport>& reps);

}  // namespace su3
