#include "rpe/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rpe/estimator.hpp"

namespace rpe {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_power_of_two(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

}  // namespace

double rmse_bound(const BoundParams& params) {
  if (params.n < 1) {
    throw std::invalid_argument("samples per sequence must be at least 1");
  }
  if (!is_power_of_two(params.l_max)) {
    throw std::invalid_argument("l_max must be a positive power of two");
  }
  if (!(params.delta >= 0.0) || !std::isfinite(params.delta)) {
    throw std::invalid_argument("delta must be finite and nonnegative");
  }

  const double threshold = 1.0 / std::sqrt(8.0);
  if (params.delta >= threshold) return kPi;

  // Angular margin the bias leaves before a generation can be misassigned;
  // its chord per channel is what sampling noise must cross.
  const double margin = kPi / 2.0 - std::asin(std::sqrt(8.0) * params.delta);
  const double u = std::sin(margin) / (2.0 * std::numbers::sqrt2);
  const double per_generation = 4.0 * std::exp(-2.0 * static_cast<double>(params.n) * u * u);

  int generations = 0;
  for (std::int64_t l = 1; l <= params.l_max; l *= 2) ++generations;
  const double p_fail = std::min(1.0, static_cast<double>(generations) * per_generation);

  const double floor = kPi / (2.0 * static_cast<double>(params.l_max));
  return std::sqrt((1.0 - p_fail) * floor * floor + p_fail * kPi * kPi);
}

double rmse_over_trials(const std::vector<double>& estimates, double reference) {
  if (estimates.empty()) {
    throw std::invalid_argument("RMSE needs at least one estimate");
  }
  double sum_sq = 0.0;
  for (double estimate : estimates) {
    const double diff = wrap_angle(estimate - reference);
    sum_sq += diff * diff;
  }
  return std::sqrt(sum_sq / static_cast<double>(estimates.size()));
}

double mean_estimate_error(const std::vector<double>& estimates, double reference) {
  if (estimates.empty()) {
    throw std::invalid_argument("mean error needs at least one estimate");
  }
  double sum = 0.0;
  for (double estimate : estimates) sum += wrap_angle(estimate - reference);
  return sum / static_cast<double>(estimates.size());
}

ScalingFit scaling_fit(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) {
    throw std::invalid_argument("power-law fit needs at least 3 points");
  }
  for (const auto& [x, y] : points) {
    if (!(x > 0.0) || !(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
      throw std::invalid_argument("power-law fit needs positive finite coordinates");
    }
  }

  const double count = static_cast<double>(points.size());
  double mean_lx = 0.0, mean_ly = 0.0;
  for (const auto& [x, y] : points) {
    mean_lx += std::log(x);
    mean_ly += std::log(y);
  }
  mean_lx /= count;
  mean_ly /= count;

  double sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : points) {
    const double dx = std::log(x) - mean_lx;
    sxx += dx * dx;
    sxy += dx * (std::log(y) - mean_ly);
  }
  if (sxx == 0.0) {
    throw std::invalid_argument("power-law fit needs at least two distinct abscissas");
  }

  ScalingFit fit;
  fit.exponent = sxy / sxx;
  fit.constant = std::exp(mean_ly - fit.exponent * mean_lx);

  double ss_res = 0.0, ss_tot = 0.0;
  for (const auto& [x, y] : points) {
    const double ly = std::log(y);
    const double predicted = mean_ly + fit.exponent * (std::log(x) - mean_lx);
    ss_res += (ly - predicted) * (ly - predicted);
    ss_tot += (ly - mean_ly) * (ly - mean_ly);
  }
  fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

}  // namespace rpe
