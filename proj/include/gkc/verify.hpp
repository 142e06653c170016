#pragma once

#include <string>
#include <vector>

namespace gkc {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;  // measured quantities vs the pinned bound
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
};

struct VerifyOptions {
  int quad_order = 64;  // eigen suite only
};

/// Known suites: eigen, oracle, theorem1, theorem2, poisson, clt, mc, mgf,
/// qpt, all. Unknown names throw std::invalid_argument. Every tolerance is
/// fixed inside; suites take no tuning parameters beyond quad_order.
SuiteReport run_suite(const std::string& suite, const VerifyOptions& opts = {});

std::vector<std::string> suite_names();

}  // namespace gkc
