#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rpe/gate_label.hpp"

namespace rpe {

// One circuit: prep fiducial, germ repeated germ_reps times, measurement
// fiducial. The gate list actually executed is expanded().
struct SequenceSpec {
  std::vector<GateLabel> prep;
  std::vector<GateLabel> germ;
  std::int64_t germ_reps = 1;
  std::vector<GateLabel> meas;

  std::vector<GateLabel> expanded() const;
  std::int64_t expanded_length() const;

  // Canonical text form of the expanded gate list, e.g. "GxGxGy". Two specs
  // with equal keys run the identical circuit.
  std::string key() const;
};

bool operator==(const SequenceSpec& a, const SequenceSpec& b);

std::string sequence_key(const std::vector<GateLabel>& gates);

enum class DesignKind { RpeAlpha, RpeEpsilon, Gst };

std::string to_string(DesignKind kind);
DesignKind design_kind_from_string(const std::string& text);

struct ExperimentDesign {
  DesignKind kind = DesignKind::RpeAlpha;
  int generations = 0;  // log2(l_max) + 1
  std::vector<SequenceSpec> sequences;
};

struct SampleCount {
  std::int64_t sequence_count = 0;
  std::int64_t total_samples = 0;
};

// Phase-estimation ladder for one germ: per generation m = 0..log2(l_max),
// a cosine row (germ^(2^m), measured directly) and a sine row (one extra
// germ application acting as the measurement fiducial).
ExperimentDesign rpe_design(PhaseTarget target, std::int64_t l_max);

// Full fiducial x germ x fiducial set with germ repetitions chosen so the
// germ block length stays near 2^m; duplicates (same expanded circuit) are
// dropped, keeping the first occurrence.
ExperimentDesign gst_design(std::int64_t l_max);

SampleCount count_samples(const ExperimentDesign& design, std::int64_t samples_per_sequence);

}  // namespace rpe
