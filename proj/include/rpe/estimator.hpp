#pragma once

#include <cstdint>
#include <vector>

#include "rpe/gate_label.hpp"
#include "rpe/simulator.hpp"

namespace rpe {

// One generation of the phase-estimation signal: with L = 2^(i-1) for the
// i-th generation, samples*(1+cos(L*phi))/2 is the expected cosine count and
// samples*(1+sin(L*phi))/2 the expected sine count. Real-valued counts are
// allowed so exact probabilities can be fed in directly.
struct Generation {
  double samples = 0.0;
  double x = 0.0;  // cosine-channel count in [0, samples]
  double y = 0.0;  // sine-channel count in [0, samples]
};

using CanonicalSignal = std::vector<Generation>;

struct RpeEstimate {
  double phase = 0.0;  // final estimate, wrapped into (-pi, pi]
  std::vector<double> per_generation;  // unwrapped intermediate estimates
  std::vector<int> degenerate_generations;  // 1-based indices that carried no angle
  std::int64_t l_max = 0;
  PhaseTarget target = PhaseTarget::Alpha;

  double error_from_ideal() const;  // phase - pi/2
};

// Successive range refinement: per generation the empirical point
// (x - m/2, y - m/2) fixes the phase modulo 2pi/L, and the residue class is
// shifted into the half-open window (prev - pi/L, prev + pi/L]. A generation
// whose point sits exactly at the origin fixes nothing; the previous estimate
// is kept and the generation flagged.
RpeEstimate robust_phase_estimation(const CanonicalSignal& signal);

// Maps a ladder dataset onto the canonical signal: for generation i with
// k = 2^(i-1), x_i = n0(germ^k) and y_i = n1(germ^(k+1)), so that a rotation
// by theta from |0> measured against |1> round-trips to theta. Generations
// are detected from the dataset; a half-present generation throws
// MalformedDataset naming the missing sequence.
CanonicalSignal canonicalize(const Dataset& data, PhaseTarget target);

// canonicalize then robust_phase_estimation.
RpeEstimate estimate_phase(const Dataset& data, PhaseTarget target);

// Wraps an angle into (-pi, pi].
double wrap_angle(double angle);

}  // namespace rpe
