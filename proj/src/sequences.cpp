#include "rpe/sequences.hpp"

#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace rpe {

namespace {

bool is_power_of_two(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

int log2_exact(std::int64_t v) {
  int k = 0;
  while ((std::int64_t{1} << k) < v) ++k;
  return k;
}

void require_power_of_two(std::int64_t l_max) {
  if (!is_power_of_two(l_max)) {
    throw std::invalid_argument("l_max must be a positive power of two, got " +
                                std::to_string(l_max));
  }
}

const std::vector<std::vector<GateLabel>>& gst_fiducials() {
  using enum GateLabel;
  static const std::vector<std::vector<GateLabel>> fiducials = {
      {}, {Gx}, {Gy}, {Gx, Gx}, {Gx, Gx, Gx}, {Gy, Gy, Gy}};
  return fiducials;
}

const std::vector<std::vector<GateLabel>>& gst_germs() {
  using enum GateLabel;
  static const std::vector<std::vector<GateLabel>> germs = {
      {Gx},
      {Gy},
      {Gx, Gy},
      {Gy, Gy, Gy, Gx},
      {Gy, Gx, Gy, Gx, Gx, Gx},
      {Gy, Gx, Gy, Gy, Gx, Gx},
      {Gy, Gy, Gy, Gx, Gy, Gx},
      {Gx, Gx, Gy, Gx, Gy, Gy}};
  return germs;
}

}  // namespace

std::vector<GateLabel> SequenceSpec::expanded() const {
  std::vector<GateLabel> gates;
  gates.reserve(prep.size() + germ.size() * static_cast<std::size_t>(germ_reps) + meas.size());
  gates.insert(gates.end(), prep.begin(), prep.end());
  for (std::int64_t r = 0; r < germ_reps; ++r) {
    gates.insert(gates.end(), germ.begin(), germ.end());
  }
  gates.insert(gates.end(), meas.begin(), meas.end());
  return gates;
}

std::int64_t SequenceSpec::expanded_length() const {
  return static_cast<std::int64_t>(prep.size()) +
         static_cast<std::int64_t>(germ.size()) * germ_reps +
         static_cast<std::int64_t>(meas.size());
}

std::string SequenceSpec::key() const { return sequence_key(expanded()); }

bool operator==(const SequenceSpec& a, const SequenceSpec& b) {
  return a.key() == b.key();
}

std::string sequence_key(const std::vector<GateLabel>& gates) {
  std::string key;
  key.reserve(gates.size() * 2);
  for (GateLabel g : gates) key += to_string(g);
  return key;
}

std::string to_string(DesignKind kind) {
  switch (kind) {
    case DesignKind::RpeAlpha: return "RPE-alpha";
    case DesignKind::RpeEpsilon: return "RPE-epsilon";
    case DesignKind::Gst: return "GST";
  }
  throw std::invalid_argument("unknown design kind");
}

DesignKind design_kind_from_string(const std::string& text) {
  if (text == "RPE-alpha") return DesignKind::RpeAlpha;
  if (text == "RPE-epsilon") return DesignKind::RpeEpsilon;
  if (text == "GST") return DesignKind::Gst;
  throw std::invalid_argument("unknown design kind: " + text);
}

ExperimentDesign rpe_design(PhaseTarget target, std::int64_t l_max) {
  require_power_of_two(l_max);
  const GateLabel germ = target_germ(target);
  const int generations = log2_exact(l_max) + 1;

  ExperimentDesign design;
  design.kind = target == PhaseTarget::Alpha ? DesignKind::RpeAlpha : DesignKind::RpeEpsilon;
  design.generations = generations;
  for (int m = 0; m < generations; ++m) {
    const std::int64_t reps = std::int64_t{1} << m;
    design.sequences.push_back({{}, {germ}, reps, {}});
    design.sequences.push_back({{}, {germ}, reps, {germ}});
  }
  return design;
}

ExperimentDesign gst_design(std::int64_t l_max) {
  require_power_of_two(l_max);
  const int generations = log2_exact(l_max) + 1;
  const auto& fiducials = gst_fiducials();
  const auto& germs = gst_germs();

  ExperimentDesign design;
  design.kind = DesignKind::Gst;
  design.generations = generations;
  std::unordered_set<std::string> seen;
  for (int m = 0; m < generations; ++m) {
    const std::int64_t target_len = std::int64_t{1} << m;
    for (const auto& germ : germs) {
      const std::int64_t reps =
          std::max<std::int64_t>(1, target_len / static_cast<std::int64_t>(germ.size()));
      for (const auto& prep : fiducials) {
        for (const auto& meas : fiducials) {
          SequenceSpec spec{prep, germ, reps, meas};
          if (seen.insert(spec.key()).second) {
            design.sequences.push_back(std::move(spec));
          }
        }
      }
    }
  }
  return design;
}

SampleCount count_samples(const ExperimentDesign& design, std::int64_t samples_per_sequence) {
  if (samples_per_sequence <= 0) {
    throw std::invalid_argument("samples per sequence must be positive");
  }
  SampleCount count;
  count.sequence_count = static_cast<std::int64_t>(design.sequences.size());
  count.total_samples = count.sequence_count * samples_per_sequence;
  return count;
}

}  // namespace rpe
