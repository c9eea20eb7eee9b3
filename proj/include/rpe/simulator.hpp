#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "rpe/ptm.hpp"
#include "rpe/sequences.hpp"

namespace rpe {

// State preparation and measurement model. Deviations of prep from |0> and of
// effect_one from |1><1| are what bias the measured signals; the resulting
// additive error is a measured property (measured_additive_error below), not
// a free parameter.
struct SpamModel {
  StateVec prep = StateVec::zero_state();
  EffectVec effect_one = EffectVec::one_effect();

  static SpamModel ideal();
  // Depolarized preparation plus classical readout flips: the recorded
  // outcome is 1 with probability flip_zero when the true outcome is 0 and
  // with probability 1 - flip_one when it is 1.
  static SpamModel with_errors(double prep_depol, double flip_zero, double flip_one);

  double prep_distance_to_ideal() const;
};

struct DatasetEntry {
  SequenceSpec sequence;
  std::int64_t n0 = 0;
  std::int64_t n1 = 0;
};

// Outcome counts per sequence, every entry with the same shot count N.
// Entries are keyed by the expanded gate string, so two specs that run the
// identical circuit share one entry (first spec's form is kept).
class Dataset {
 public:
  Dataset(DesignKind kind, std::int64_t samples_per_sequence);

  // A repeated key with identical counts is ignored; conflicting counts or
  // n0 + n1 != N throw MalformedDataset.
  void add(const SequenceSpec& sequence, std::int64_t n0, std::int64_t n1);

  DesignKind kind() const { return kind_; }
  std::int64_t samples_per_sequence() const { return samples_per_sequence_; }
  const std::vector<DatasetEntry>& entries() const { return entries_; }

  // Lookup by expanded gate string; nullptr when absent.
  const DatasetEntry* find(const std::string& key) const;

 private:
  DesignKind kind_;
  std::int64_t samples_per_sequence_;
  std::vector<DatasetEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Probability of outcome 1 for the expanded circuit applied to the model's
// preparation.
double sequence_probability(const SequenceSpec& sequence, const GateParams& params,
                            const SpamModel& spam);

// Draws n1 ~ Binomial(n, p) per sequence. Each sequence uses an independent
// substream derived from (seed, expanded key), so the result is independent
// of iteration order and bit-identical across runs and platforms.
Dataset sample_dataset(const ExperimentDesign& design, const GateParams& params,
                       const SpamModel& spam, std::int64_t samples_per_sequence,
                       std::uint64_t seed);

// Per sequence, keeps n_sub of the N recorded shots chosen uniformly without
// replacement (counts drawn hypergeometrically). n_sub > N throws.
Dataset subsample(const Dataset& source, std::int64_t n_sub, std::uint64_t seed);

// Largest deviation, over the phase-estimation ladder for `target`, of the
// model's outcome probabilities from the canonical signal at the germ's true
// eigenphase: (1 - cos(k phi))/2 for germ^k rows, (1 + sin(k phi))/2 for
// germ^(k+1) rows. This is the additive error the robustness threshold is
// stated against.
double measured_additive_error(PhaseTarget target, std::int64_t l_max,
                               const GateParams& params, const SpamModel& spam);

}  // namespace rpe
