#pragma once

#include <string>
#include <vector>

#include "csv.hpp"
#include "optocav/phase.hpp"

namespace optocav::cli {

/// count points from start to stop inclusive; count 0 gives an empty axis.
struct Axis {
  std::string name;
  double start = 0.0;
  double stop = 0.0;
  long count = 0;

  std::vector<double> values() const;
};

/// Parses "name=start:stop:count".
Axis parse_axis(const std::string& text);

const std::vector<std::string>& sweep_axis_names();
const std::vector<std::string>& sweep_observables();

inline constexpr double kMaxSweepPoints = 1e7;

struct SweepRequest {
  std::vector<Axis> axes;  // at most two
  std::vector<std::string> observables;  // empty means all
  double k = 7.0;
  double tau = 0.01;
  double alpha = 100.0;
  double phi_alpha = 0.0;
  double phi = 0.0;
  double lambda = 0.0;  // scaled constant force
  BStrategy strategy = BStrategy::automatic;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Rows in lexicographic axis order (first axis outermost). f_min uses the
/// interferometer preset mirror with t = tau / omega_m.
Table run_sweep(const SweepRequest& r);

}  // namespace optocav::cli
