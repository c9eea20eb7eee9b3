#include "rpe/simulator.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rpe/errors.hpp"
#include "rpe/rng.hpp"

namespace rpe {

SpamModel SpamModel::ideal() { return SpamModel{}; }

SpamModel SpamModel::with_errors(double prep_depol, double flip_zero, double flip_one) {
  if (!(prep_depol >= 0.0 && prep_depol <= 1.0)) {
    throw std::invalid_argument("prep depolarization must lie in [0, 1]");
  }
  if (!(flip_zero >= 0.0 && flip_zero <= 1.0) || !(flip_one >= 0.0 && flip_one <= 1.0)) {
    throw std::invalid_argument("readout flip probabilities must lie in [0, 1]");
  }
  SpamModel spam;
  spam.prep = StateVec::from_bloch({0.0, 0.0, 1.0 - prep_depol});
  spam.effect_one.coords = (1.0 - flip_one) * EffectVec::one_effect().coords +
                           flip_zero * EffectVec::zero_effect().coords;
  return spam;
}

double SpamModel::prep_distance_to_ideal() const {
  return trace_distance(prep, StateVec::zero_state());
}

Dataset::Dataset(DesignKind kind, std::int64_t samples_per_sequence)
    : kind_(kind), samples_per_sequence_(samples_per_sequence) {
  if (samples_per_sequence < 0) {
    throw std::invalid_argument("samples per sequence must be nonnegative");
  }
}

void Dataset::add(const SequenceSpec& sequence, std::int64_t n0, std::int64_t n1) {
  std::string key = sequence.key();
  if (n0 < 0 || n1 < 0 || n0 + n1 != samples_per_sequence_) {
    throw MalformedDataset("counts for sequence '" + key + "' do not sum to " +
                           std::to_string(samples_per_sequence_));
  }
  if (auto it = index_.find(key); it != index_.end()) {
    const DatasetEntry& existing = entries_[it->second];
    if (existing.n0 != n0 || existing.n1 != n1) {
      throw MalformedDataset("conflicting counts for duplicate sequence '" + key + "'");
    }
    return;
  }
  index_.emplace(std::move(key), entries_.size());
  entries_.push_back({sequence, n0, n1});
}

const DatasetEntry* Dataset::find(const std::string& key) const {
  auto it = index_.find(key);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

double sequence_probability(const SequenceSpec& sequence, const GateParams& params,
                            const SpamModel& spam) {
  const Ptm gx = gate_ptm(params, GateLabel::Gx);
  const Ptm gy = gate_ptm(params, GateLabel::Gy);
  auto pick = [&](GateLabel label) -> const Ptm& {
    return label == GateLabel::Gx ? gx : gy;
  };

  // Germ repetitions are collapsed into one power so long circuits stay
  // logarithmic in the repetition count.
  std::vector<Ptm> circuit;
  circuit.reserve(sequence.prep.size() + 1 + sequence.meas.size());
  for (GateLabel g : sequence.prep) circuit.push_back(pick(g));
  if (!sequence.germ.empty() && sequence.germ_reps > 0) {
    Ptm germ_map = Ptm::identity();
    for (GateLabel g : sequence.germ) germ_map = compose(germ_map, pick(g));
    circuit.push_back(ptm_power(germ_map, sequence.germ_reps));
  }
  for (GateLabel g : sequence.meas) circuit.push_back(pick(g));

  return outcome_probability(spam.effect_one, circuit, spam.prep);
}

Dataset sample_dataset(const ExperimentDesign& design, const GateParams& params,
                       const SpamModel& spam, std::int64_t samples_per_sequence,
                       std::uint64_t seed) {
  if (samples_per_sequence < 1) {
    throw std::invalid_argument("samples per sequence must be at least 1");
  }
  params.validate();
  Dataset data(design.kind, samples_per_sequence);
  for (const SequenceSpec& seq : design.sequences) {
    const double p = sequence_probability(seq, params, spam);
    Rng rng(derive_stream(seed, "sample:" + seq.key()));
    const std::int64_t n1 = rng.binomial(samples_per_sequence, p);
    data.add(seq, samples_per_sequence - n1, n1);
  }
  return data;
}

Dataset subsample(const Dataset& source, std::int64_t n_sub, std::uint64_t seed) {
  if (n_sub < 0 || n_sub > source.samples_per_sequence()) {
    throw std::invalid_argument("subsample size must lie in [0, N], got " +
                                std::to_string(n_sub));
  }
  Dataset out(source.kind(), n_sub);
  for (const DatasetEntry& entry : source.entries()) {
    Rng rng(derive_stream(seed, "subsample:" + entry.sequence.key()));
    const std::int64_t n1 = rng.hypergeometric(entry.n1, entry.n0, n_sub);
    out.add(entry.sequence, n_sub - n1, n1);
  }
  return out;
}

double measured_additive_error(PhaseTarget target, std::int64_t l_max,
                               const GateParams& params, const SpamModel& spam) {
  params.validate();
  const double phi = eigenframe(gate_ptm(params, target_germ(target))).phi;
  const ExperimentDesign design = rpe_design(target, l_max);

  // Ladder rows alternate cosine (germ^k) and sine (germ^(k+1)) per
  // generation.
  double worst = 0.0;
  for (std::size_t row = 0; row < design.sequences.size(); ++row) {
    const SequenceSpec& seq = design.sequences[row];
    const double k = static_cast<double>(std::int64_t{1} << (row / 2));
    const bool sine_row = (row % 2) == 1;
    const double ideal =
        sine_row ? (1.0 + std::sin(k * phi)) / 2.0 : (1.0 - std::cos(k * phi)) / 2.0;
    const double actual = sequence_probability(seq, params, spam);
    worst = std::max(worst, std::abs(actual - ideal));
  }
  return worst;
}

}  // namespace rpe
