#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace rpe {

struct BoundParams {
  std::int64_t n = 370;      // samples per sequence
  std::int64_t l_max = 1024; // power of two
  double delta = 0.0;        // additive signal error; finite bound needs < 1/sqrt(8)
};

// Worst-case RMSE upper bound for the full ladder: a per-generation Hoeffding
// tail on each channel crossing the deterministic angular margin left by
// delta, union-bounded over generations, with failures costing pi and success
// costing the floor pi/(2*l_max). Returns the vacuous sentinel pi when
// delta >= 1/sqrt(8).
double rmse_bound(const BoundParams& params);

// sqrt(mean((estimate - reference)^2)) with differences wrapped into
// (-pi, pi].
double rmse_over_trials(const std::vector<double>& estimates, double reference);

// Signed mean of the wrapped differences; the systematic component that
// rmse_over_trials mixes with trial scatter.
double mean_estimate_error(const std::vector<double>& estimates, double reference);

struct ScalingFit {
  double exponent = 0.0;   // power-law slope
  double constant = 0.0;   // prefactor at unit abscissa
  double r_squared = 0.0;  // fit quality in log-log space
};

// Least-squares line through (log x, log y); needs at least 3 points, all
// coordinates positive.
ScalingFit scaling_fit(const std::vector<std::pair<double, double>>& points);

}  // namespace rpe
