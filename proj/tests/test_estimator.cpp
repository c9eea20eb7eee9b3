#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "rpe/errors.hpp"
#include "rpe/estimator.hpp"
#include "rpe/simulator.hpp"

using namespace rpe;

namespace {

constexpr double kPi = std::numbers::pi;

// Exact expected counts for a phase, the contract the estimator is pinned to.
CanonicalSignal exact_signal(double phi, int generations, double bias_x = 0.0,
                             double bias_y = 0.0) {
  CanonicalSignal signal;
  for (int i = 0; i < generations; ++i) {
    const double length = static_cast<double>(std::int64_t{1} << i);
    const double x = std::clamp((1.0 + std::cos(length * phi)) / 2.0 + bias_x, 0.0, 1.0);
    const double y = std::clamp((1.0 + std::sin(length * phi)) / 2.0 + bias_y, 0.0, 1.0);
    signal.push_back({1.0, x, y});
  }
  return signal;
}

SequenceSpec x_power(std::int64_t reps) { return {{}, {GateLabel::Gx}, reps, {}}; }

}  // namespace

TEST_SUITE("rpe_estimator") {

TEST_CASE("single generation reads the plain arctangent") {
  CHECK(robust_phase_estimation({{100.0, 100.0, 50.0}}).phase == doctest::Approx(0.0));
  CHECK(robust_phase_estimation({{100.0, 50.0, 100.0}}).phase ==
        doctest::Approx(kPi / 2.0));
  CHECK(robust_phase_estimation({{100.0, 0.0, 50.0}}).phase == doctest::Approx(kPi));
}

TEST_CASE("two generations refine within the window") {
  // Counts from phi = pi/2: generation 1 at (0, +1), generation 2 at (-1, 0).
  const RpeEstimate estimate =
      robust_phase_estimation({{100.0, 50.0, 100.0}, {100.0, 0.0, 50.0}});
  CHECK(estimate.phase == doctest::Approx(kPi / 2.0));
  REQUIRE(estimate.per_generation.size() == 2);
  CHECK(estimate.per_generation[0] == doctest::Approx(kPi / 2.0));
}

TEST_CASE("exact signals round-trip any phase") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> phase(-kPi, kPi);
  for (int trial = 0; trial < 100; ++trial) {
    const double phi = phase(rng);
    const RpeEstimate estimate = robust_phase_estimation(exact_signal(phi, 11));
    CHECK(std::abs(estimate.phase - phi) < 1e-9);
  }
  CHECK(std::abs(robust_phase_estimation(exact_signal(2.337, 11)).phase - 2.337) < 1e-9);
}

TEST_CASE("estimate lands in the final resolution window") {
  const RpeEstimate estimate = robust_phase_estimation(exact_signal(1.0, 11));
  CHECK(estimate.l_max == 1024);
  CHECK(std::abs(estimate.phase - 1.0) <= kPi / 2048.0);
  CHECK(estimate.error_from_ideal() == doctest::Approx(estimate.phase - kPi / 2.0));
}

TEST_CASE("window consistency holds even for garbage counts") {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    CanonicalSignal signal;
    const int generations = 1 + static_cast<int>(unit(rng) * 10.0);
    for (int i = 0; i < generations; ++i) {
      signal.push_back({50.0, 50.0 * unit(rng), 50.0 * unit(rng)});
    }
    const RpeEstimate estimate = robust_phase_estimation(signal);
    for (std::size_t i = 1; i < estimate.per_generation.size(); ++i) {
      const double window = kPi / static_cast<double>(std::int64_t{1} << i);
      const double step =
          std::abs(estimate.per_generation[i] - estimate.per_generation[i - 1]);
      CHECK(step <= window + 1e-12);
    }
  }
}

TEST_CASE("truncating generations reproduces the intermediate estimates") {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    CanonicalSignal signal;
    for (int i = 0; i < 8; ++i) {
      signal.push_back({30.0, 30.0 * unit(rng), 30.0 * unit(rng)});
    }
    const RpeEstimate full = robust_phase_estimation(signal);
    for (std::size_t cut = 1; cut <= signal.size(); ++cut) {
      CanonicalSignal prefix(signal.begin(), signal.begin() + cut);
      CHECK(robust_phase_estimation(prefix).per_generation.back() ==
            full.per_generation[cut - 1]);
    }
  }
}

TEST_CASE("centered counts carry no angle and are flagged") {
  CanonicalSignal signal = exact_signal(0.7, 5);
  signal[2] = {80.0, 40.0, 40.0};
  const RpeEstimate estimate = robust_phase_estimation(signal);
  REQUIRE(estimate.degenerate_generations == std::vector<int>{3});
  CHECK(estimate.per_generation[2] == estimate.per_generation[1]);

  const RpeEstimate all_centered = robust_phase_estimation({{10.0, 5.0, 5.0}});
  CHECK(all_centered.phase == 0.0);
  CHECK(all_centered.degenerate_generations == std::vector<int>{1});
}

TEST_CASE("signal validation") {
  CHECK_THROWS_AS(robust_phase_estimation({}), std::invalid_argument);
  CHECK_THROWS_AS(robust_phase_estimation({{0.5, 0.2, 0.2}}), std::invalid_argument);
  CHECK_THROWS_AS(robust_phase_estimation({{10.0, 11.0, 5.0}}), std::invalid_argument);
  CHECK_THROWS_AS(robust_phase_estimation({{10.0, 5.0, -1.0}}), std::invalid_argument);
}

TEST_CASE("constant biases below the threshold cannot move the estimate far") {
  // Exact probabilities, deterministic bias on both channels, all four
  // constant sign patterns: the ladder still pins the phase to its final
  // window.
  for (double phi : {-2.9, -1.3, -0.4, 0.02, 0.7, 1.57, 2.2, 3.1}) {
    for (double sx : {0.3, -0.3}) {
      for (double sy : {0.3, -0.3}) {
        const RpeEstimate estimate =
            robust_phase_estimation(exact_signal(phi, 11, sx, sy));
        CHECK(std::abs(wrap_angle(estimate.phase - phi)) <= kPi / 2048.0);
      }
    }
  }
}

TEST_CASE("wrap_angle maps onto the half-open interval") {
  CHECK(wrap_angle(0.0) == 0.0);
  CHECK(wrap_angle(kPi) == doctest::Approx(kPi));
  CHECK(wrap_angle(-kPi) == doctest::Approx(kPi));
  CHECK(wrap_angle(kPi + 0.1) == doctest::Approx(-kPi + 0.1));
  CHECK(wrap_angle(-kPi - 0.1) == doctest::Approx(kPi - 0.1));
  CHECK(wrap_angle(3.0 * kPi) == doctest::Approx(kPi));
  CHECK(wrap_angle(-6.0 * kPi + 0.25) == doctest::Approx(0.25));
}

TEST_CASE("counts map onto the cosine and sine channels") {
  Dataset data(DesignKind::RpeAlpha, 100);
  data.add(x_power(1), 100, 0);   // never excited: cos channel at +1
  data.add(x_power(2), 25, 75);   // sine channel of rung one
  data.add(x_power(3), 50, 50);
  data.add(x_power(4), 10, 90);
  data.add(x_power(5), 60, 40);

  const CanonicalSignal signal = canonicalize(data, PhaseTarget::Alpha);
  REQUIRE(signal.size() == 3);
  CHECK(signal[0].samples == 100.0);
  CHECK(signal[0].x == 100.0);  // x = n0 of germ^1
  CHECK(signal[0].y == 75.0);   // y = n1 of germ^2
  CHECK(signal[1].x == 25.0);   // n0 of germ^2
  CHECK(signal[1].y == 50.0);   // n1 of germ^3
  CHECK(signal[2].x == 10.0);
  CHECK(signal[2].y == 40.0);

  Dataset saturated(DesignKind::RpeAlpha, 100);
  saturated.add(x_power(1), 0, 100);  // always excited: cos channel at -1
  saturated.add(x_power(2), 50, 50);
  CHECK(canonicalize(saturated, PhaseTarget::Alpha)[0].x == 0.0);
}

TEST_CASE("a one-rung dataset is a complete ladder") {
  Dataset data(DesignKind::RpeAlpha, 50);
  data.add(x_power(1), 25, 25);
  data.add(x_power(2), 0, 50);
  CHECK(canonicalize(data, PhaseTarget::Alpha).size() == 1);
}

TEST_CASE("missing rungs are reported by sequence") {
  const ExperimentDesign design = rpe_design(PhaseTarget::Alpha, 8);
  const Dataset full =
      sample_dataset(design, GateParams::ideal(), SpamModel::ideal(), 50, 3);

  auto rebuild_without = [&](const std::string& dropped) {
    Dataset data(full.kind(), full.samples_per_sequence());
    for (const DatasetEntry& entry : full.entries()) {
      if (entry.sequence.key() != dropped) data.add(entry.sequence, entry.n0, entry.n1);
    }
    return data;
  };

  CHECK_THROWS_WITH_AS(canonicalize(rebuild_without("GxGxGx"), PhaseTarget::Alpha),
                       "dataset is missing sequence 'GxGxGx'", MalformedDataset);
  CHECK_THROWS_WITH_AS(canonicalize(rebuild_without("GxGxGxGx"), PhaseTarget::Alpha),
                       "dataset is missing sequence 'GxGxGxGx'", MalformedDataset);
  CHECK_THROWS_WITH_AS(canonicalize(full, PhaseTarget::Epsilon),
                       "dataset is missing sequence 'Gy'", MalformedDataset);
}

TEST_CASE("high-statistics sine channel matches the germ-power oracle") {
  GateParams params = GateParams::ideal();
  params.x_angle = kPi / 2.0 + 1e-4;
  const std::int64_t n = 1000000;
  const Dataset data = sample_dataset(rpe_design(PhaseTarget::Alpha, 8), params,
                                      SpamModel::ideal(), n, 77);

  const CanonicalSignal signal = canonicalize(data, PhaseTarget::Alpha);
  REQUIRE(signal.size() == 4);
  const double sin_estimate = 2.0 * signal[2].y / static_cast<double>(n) - 1.0;
  const double tolerance = 3.0 * std::sqrt(1.0 / (4.0 * static_cast<double>(n)));
  CHECK(std::abs(sin_estimate - std::sin(4.0 * params.x_angle)) < tolerance);
}

TEST_CASE("estimates recover a simulated rotation angle") {
  GateParams params = GateParams::ideal();
  params.x_angle = kPi / 2.0;
  const Dataset data = sample_dataset(rpe_design(PhaseTarget::Alpha, 1024), params,
                                      SpamModel::ideal(), 370, 2024);
  const RpeEstimate estimate = estimate_phase(data, PhaseTarget::Alpha);
  CHECK(estimate.target == PhaseTarget::Alpha);
  CHECK(estimate.l_max == 1024);
  CHECK(std::abs(estimate.error_from_ideal()) <= kPi / 2048.0);
}

TEST_CASE("tomography datasets feed both phase ladders") {
  GateParams params = GateParams::ideal();
  params.x_angle = kPi / 2.0 + 2e-3;
  params.y_angle = kPi / 2.0 - 1e-3;
  const Dataset data =
      sample_dataset(gst_design(64), params, SpamModel::ideal(), 370, 5);

  const RpeEstimate alpha = estimate_phase(data, PhaseTarget::Alpha);
  const RpeEstimate epsilon = estimate_phase(data, PhaseTarget::Epsilon);
  CHECK(alpha.l_max == 64);
  CHECK(std::abs(wrap_angle(alpha.phase - params.x_angle)) <= kPi / 128.0);
  CHECK(std::abs(wrap_angle(epsilon.phase - params.y_angle)) <= kPi / 128.0);
}

}  // TEST_SUITE
