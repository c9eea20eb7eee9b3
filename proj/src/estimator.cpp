#include "rpe/estimator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rpe/errors.hpp"

namespace rpe {

namespace {

constexpr double kPi = std::numbers::pi;

std::string repeated_germ_key(PhaseTarget target, std::int64_t count) {
  const std::string label = to_string(target_germ(target));
  std::string key;
  key.reserve(label.size() * static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) key += label;
  return key;
}

}  // namespace

double wrap_angle(double angle) {
  double w = angle - 2.0 * kPi * std::ceil((angle - kPi) / (2.0 * kPi));
  if (w <= -kPi) w += 2.0 * kPi;
  if (w > kPi) w -= 2.0 * kPi;
  return w;
}

double RpeEstimate::error_from_ideal() const { return phase - kPi / 2.0; }

RpeEstimate robust_phase_estimation(const CanonicalSignal& signal) {
  if (signal.empty()) {
    throw std::invalid_argument("phase estimation needs at least one generation");
  }
  for (const Generation& gen : signal) {
    if (!(gen.samples >= 1.0)) {
      throw std::invalid_argument("every generation needs at least one sample");
    }
    if (gen.x < 0.0 || gen.x > gen.samples || gen.y < 0.0 || gen.y > gen.samples) {
      throw std::invalid_argument("channel counts must lie in [0, samples]");
    }
  }

  RpeEstimate result;
  result.l_max = std::int64_t{1} << (signal.size() - 1);

  double estimate = 0.0;
  for (std::size_t i = 0; i < signal.size(); ++i) {
    const Generation& gen = signal[i];
    const double length = static_cast<double>(std::int64_t{1} << i);
    const double cx = gen.x - gen.samples / 2.0;
    const double cy = gen.y - gen.samples / 2.0;
    if (cx == 0.0 && cy == 0.0) {
      // The empirical point carries no angle; keep the previous estimate.
      result.degenerate_generations.push_back(static_cast<int>(i) + 1);
      result.per_generation.push_back(estimate);
      continue;
    }
    // Phase residue modulo 2pi/L, shifted by whole periods into the window
    // (estimate - pi/L, estimate + pi/L].
    double current = std::atan2(cy, cx) / length;
    const double period = 2.0 * kPi / length;
    const double shift = std::floor((estimate + kPi / length - current) / period);
    current += shift * period;
    estimate = current;
    result.per_generation.push_back(estimate);
  }

  result.phase = wrap_angle(estimate);
  return result;
}

CanonicalSignal canonicalize(const Dataset& data, PhaseTarget target) {
  const double samples = static_cast<double>(data.samples_per_sequence());
  CanonicalSignal signal;
  for (std::int64_t k = 1;; k *= 2) {
    const DatasetEntry* cos_entry = data.find(repeated_germ_key(target, k));
    const DatasetEntry* sin_entry = data.find(repeated_germ_key(target, k + 1));
    if (cos_entry == nullptr && sin_entry == nullptr) break;
    if (cos_entry == nullptr) {
      throw MalformedDataset("dataset is missing sequence '" +
                             repeated_germ_key(target, k) + "'");
    }
    if (sin_entry == nullptr) {
      // germ^2 doubles as the first rung's sine row, so its presence alone
      // does not imply a second rung; anything longer in the dataset does.
      const bool ladder_continues =
          data.find(repeated_germ_key(target, 2 * k)) != nullptr ||
          data.find(repeated_germ_key(target, 2 * k + 1)) != nullptr;
      if (k == 2 && !ladder_continues) break;
      throw MalformedDataset("dataset is missing sequence '" +
                             repeated_germ_key(target, k + 1) + "'");
    }
    signal.push_back({samples, static_cast<double>(cos_entry->n0),
                      static_cast<double>(sin_entry->n1)});
  }
  if (signal.empty()) {
    throw MalformedDataset("dataset is missing sequence '" +
                           repeated_germ_key(target, 1) + "'");
  }
  return signal;
}

RpeEstimate estimate_phase(const Dataset& data, PhaseTarget target) {
  RpeEstimate result = robust_phase_estimation(canonicalize(data, target));
  result.target = target;
  return result;
}

}  // namespace rpe
