#pragma once

#include <string>
#include <vector>

#include "csv.hpp"

namespace optocav::cli {

/// One oracle comparison; passes when metric <= tolerance.
struct CheckResult {
  std::string name;
  double metric = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Route equivalence at alpha = 2, k = 0.5, tau = 0.7.
std::vector<CheckResult> check_small_alpha();
/// 1 - purity of the field at tau = 2 pi.
std::vector<CheckResult> check_disentangle();
/// 1 - fidelity between the factorised and matrix-exponential evolutions.
std::vector<CheckResult> check_closed_form_vs_expm();

const std::vector<std::string>& oracle_presets();
std::vector<CheckResult> run_preset(const std::string& preset);

Table checks_table(const std::vector<CheckResult>& r);

}  // namespace optocav::cli
