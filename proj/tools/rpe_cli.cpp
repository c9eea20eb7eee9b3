// Command-line surface for the phase-estimation toolkit: designs, simulated
// or subsampled datasets, estimates, analytic bound curves, and scaling runs.

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "rpe/bounds.hpp"
#include "rpe/errors.hpp"
#include "rpe/estimator.hpp"
#include "rpe/io.hpp"
#include "rpe/ptm.hpp"
#include "rpe/rng.hpp"
#include "rpe/sequences.hpp"
#include "rpe/simulator.hpp"

namespace {

struct ModelFlags {
  double x_angle = rpe::GateParams::ideal().x_angle;
  double y_angle = rpe::GateParams::ideal().y_angle;
  double y_tilt = 0.0;
  double depol_x = 1.0;
  double depol_y = 1.0;
  double prep_depol = 0.0;
  double flip0 = 0.0;
  double flip1 = 0.0;

  rpe::GateParams params() const {
    return {x_angle, y_angle, y_tilt, depol_x, depol_y};
  }
  rpe::SpamModel spam() const {
    return rpe::SpamModel::with_errors(prep_depol, flip0, flip1);
  }
};

void add_model_flags(CLI::App* cmd, ModelFlags& m) {
  cmd->add_option("--x-angle", m.x_angle, "X rotation angle in radians (default pi/2)");
  cmd->add_option("--y-angle", m.y_angle, "Y rotation angle in radians (default pi/2)");
  cmd->add_option("--y-tilt", m.y_tilt, "Y axis tilt toward X in radians");
  cmd->add_option("--depol-x", m.depol_x,
                  "depolarization survival per X application (1 = noiseless)");
  cmd->add_option("--depol-y", m.depol_y,
                  "depolarization survival per Y application (1 = noiseless)");
  cmd->add_option("--prep-depol", m.prep_depol, "preparation depolarization in [0, 1]");
  cmd->add_option("--flip0", m.flip0, "probability a 0 outcome is recorded as 1");
  cmd->add_option("--flip1", m.flip1, "probability a 1 outcome is recorded as 0");
}

rpe::DesignKind parse_kind(const std::string& text) {
  if (text == "alpha") return rpe::DesignKind::RpeAlpha;
  if (text == "epsilon") return rpe::DesignKind::RpeEpsilon;
  if (text == "gst") return rpe::DesignKind::Gst;
  throw std::invalid_argument("unknown design kind '" + text + "' (alpha|epsilon|gst)");
}

rpe::ExperimentDesign build_design(rpe::DesignKind kind, std::int64_t l_max) {
  switch (kind) {
    case rpe::DesignKind::RpeAlpha: return rpe::rpe_design(rpe::PhaseTarget::Alpha, l_max);
    case rpe::DesignKind::RpeEpsilon:
      return rpe::rpe_design(rpe::PhaseTarget::Epsilon, l_max);
    case rpe::DesignKind::Gst: return rpe::gst_design(l_max);
  }
  throw std::invalid_argument("unknown design kind");
}

// Entropy-seeds when the flag was omitted and reports what was used, so any
// run can be reproduced afterwards.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  std::random_device device;
  const std::uint64_t seed =
      (static_cast<std::uint64_t>(device()) << 32) ^ static_cast<std::uint64_t>(device());
  std::printf("seed = %" PRIu64 "\n", seed);
  return seed;
}

rpe::PhaseTarget resolve_target(const std::optional<std::string>& flag,
                                rpe::DesignKind kind) {
  if (flag) return rpe::phase_target_from_string(*flag);
  switch (kind) {
    case rpe::DesignKind::RpeAlpha: return rpe::PhaseTarget::Alpha;
    case rpe::DesignKind::RpeEpsilon: return rpe::PhaseTarget::Epsilon;
    case rpe::DesignKind::Gst:
      throw std::invalid_argument("this dataset needs an explicit --target (alpha|epsilon)");
  }
  throw std::invalid_argument("unknown design kind");
}

std::vector<std::int64_t> ladder_up_to(std::int64_t l_max) {
  std::vector<std::int64_t> lengths;
  for (std::int64_t l = 1; l <= l_max; l *= 2) lengths.push_back(l);
  return lengths;
}

void print_fit(const rpe::ScalingFit& fit) {
  std::printf("fit: exponent = %.6f, constant = %.6g, r_squared = %.6f\n", fit.exponent,
              fit.constant, fit.r_squared);
}

int run_design(rpe::DesignKind kind, std::int64_t l_max, std::int64_t n,
               const std::string& out) {
  const rpe::ExperimentDesign design = build_design(kind, l_max);
  const rpe::SampleCount count = rpe::count_samples(design, n);
  rpe::write_text_atomic(out, rpe::design_to_json(design));
  std::printf("%s: %" PRId64 " sequences, %" PRId64 " total samples at n = %" PRId64 "\n",
              rpe::to_string(design.kind).c_str(), count.sequence_count, count.total_samples,
              n);
  return 0;
}

int run_simulate(rpe::DesignKind kind, std::int64_t l_max, std::int64_t n,
                 const ModelFlags& model, const std::optional<std::uint64_t>& seed_flag,
                 const std::string& out) {
  const rpe::ExperimentDesign design = build_design(kind, l_max);
  const std::uint64_t seed = resolve_seed(seed_flag);
  const rpe::Dataset data = rpe::sample_dataset(design, model.params(), model.spam(), n, seed);
  rpe::write_text_atomic(out, rpe::dataset_to_json(data));
  std::printf("%s: %zu sequences sampled at n = %" PRId64 "\n",
              rpe::to_string(data.kind()).c_str(), data.entries().size(), n);
  return 0;
}

int run_subsample(const std::string& in, std::int64_t n_sub,
                  const std::optional<std::uint64_t>& seed_flag, const std::string& out) {
  const rpe::Dataset source = rpe::ingest_dataset(in);
  const std::uint64_t seed = resolve_seed(seed_flag);
  const rpe::Dataset sub = rpe::subsample(source, n_sub, seed);
  rpe::write_text_atomic(out, rpe::dataset_to_json(sub));
  std::printf("subsampled %zu sequences to n = %" PRId64 "\n", sub.entries().size(), n_sub);
  return 0;
}

int run_estimate(const std::string& in, const std::optional<std::string>& target_flag,
                 const std::optional<std::string>& out) {
  const rpe::Dataset data = rpe::ingest_dataset(in);
  const rpe::PhaseTarget target = resolve_target(target_flag, data.kind());
  const rpe::RpeEstimate estimate = rpe::estimate_phase(data, target);
  std::printf("target = %s\nphase = %.17g\nerror from pi/2 = %.17g\n",
              rpe::to_string(target).c_str(), estimate.phase, estimate.error_from_ideal());
  if (!estimate.degenerate_generations.empty()) {
    std::printf("degenerate generations:");
    for (int g : estimate.degenerate_generations) std::printf(" %d", g);
    std::printf("\n");
  }
  if (out) rpe::write_text_atomic(*out, rpe::estimate_to_json(estimate));
  return 0;
}

int run_bound(const std::vector<std::int64_t>& l_maxes, const std::vector<std::int64_t>& ns,
              const std::vector<double>& deltas, const std::optional<std::string>& out) {
  std::vector<std::vector<double>> rows;
  for (std::int64_t l_max : l_maxes) {
    for (std::int64_t n : ns) {
      for (double delta : deltas) {
        const double bound = rpe::rmse_bound({n, l_max, delta});
        rows.push_back({static_cast<double>(l_max), static_cast<double>(n), delta, bound});
      }
    }
  }
  if (out) {
    rpe::write_csv_atomic(*out, "l_max,n,delta,bound", rows);
  } else {
    std::printf("l_max,n,delta,bound\n");
    for (const auto& row : rows) {
      std::printf("%g,%g,%.17g,%.17g\n", row[0], row[1], row[2], row[3]);
    }
  }
  return 0;
}

struct ScalingConfig {
  std::string mode = "heisenberg";
  std::string resample = "fresh";
  std::optional<std::string> in;  // master dataset file (implies subsample)
  std::optional<std::string> target_flag;
  std::int64_t l_max = 1024;
  std::int64_t n = 16;
  std::vector<std::int64_t> n_list = {8, 16, 32, 64, 128, 256};
  std::int64_t master_n = 370;
  int trials = 100;
  ModelFlags model;
  std::optional<std::uint64_t> seed_flag;
  std::optional<std::string> out;
};

// One RMSE point: `trials` estimates against `reference`, each trial's
// dataset produced by `make_dataset(trial)`.
template <typename MakeDataset>
std::pair<double, double> rmse_point(int trials, rpe::PhaseTarget target, double reference,
                                     int generations, MakeDataset&& make_dataset) {
  std::vector<double> phases;
  phases.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    const rpe::Dataset data = make_dataset(t);
    rpe::CanonicalSignal signal = rpe::canonicalize(data, target);
    if (static_cast<int>(signal.size()) < generations) {
      throw rpe::MalformedDataset("dataset ladder is shorter than requested");
    }
    signal.resize(static_cast<std::size_t>(generations));
    phases.push_back(rpe::robust_phase_estimation(signal).phase);
  }
  return {rpe::rmse_over_trials(phases, reference),
          rpe::mean_estimate_error(phases, reference)};
}

int run_scaling(const ScalingConfig& config) {
  if (config.mode != "heisenberg" && config.mode != "sql") {
    throw std::invalid_argument("unknown scaling mode '" + config.mode +
                                "' (heisenberg|sql)");
  }
  if (config.resample != "fresh" && config.resample != "subsample") {
    throw std::invalid_argument("unknown resample mode '" + config.resample +
                                "' (fresh|subsample)");
  }
  if (config.trials < 1) throw std::invalid_argument("trials must be at least 1");

  const bool from_file = config.in.has_value();
  const bool use_subsample = from_file || config.resample == "subsample";
  const std::uint64_t seed = resolve_seed(config.seed_flag);

  const rpe::GateParams params = config.model.params();
  const rpe::SpamModel spam = config.model.spam();

  // Master dataset and reference phase. Simulations are scored against the
  // model's true eigenphase; ingested data against the full-data estimate.
  std::optional<rpe::Dataset> master;
  rpe::PhaseTarget target = rpe::PhaseTarget::Alpha;
  double reference = 0.0;
  if (from_file) {
    master = rpe::ingest_dataset(*config.in);
    target = resolve_target(config.target_flag, master->kind());
    reference = rpe::estimate_phase(*master, target).phase;
  } else {
    target = config.target_flag ? rpe::phase_target_from_string(*config.target_flag)
                                : rpe::PhaseTarget::Alpha;
    reference = rpe::eigenframe(rpe::gate_ptm(params, rpe::target_germ(target))).phi;
    if (use_subsample) {
      const rpe::ExperimentDesign design = rpe::rpe_design(target, config.l_max);
      master = rpe::sample_dataset(design, params, spam, config.master_n,
                                   rpe::derive_stream(seed, "master"));
    }
  }

  std::vector<std::vector<double>> rows;
  std::vector<std::pair<double, double>> points;

  auto emit_point = [&](double abscissa, std::pair<double, double> stats) {
    std::printf("abscissa = %10.0f  rmse = %.6e  mean error = %+.6e\n", abscissa,
                stats.first, stats.second);
    rows.push_back({abscissa, stats.first});
    points.emplace_back(abscissa, stats.first);
  };

  if (config.mode == "heisenberg") {
    for (std::int64_t lm : ladder_up_to(config.l_max)) {
      const int generations = static_cast<int>(ladder_up_to(lm).size());
      const std::string label = "scaling:" + std::to_string(lm) + ":";
      auto make_dataset = [&](int t) {
        const std::uint64_t trial_seed = rpe::derive_stream(seed, label + std::to_string(t));
        if (use_subsample) return rpe::subsample(*master, config.n, trial_seed);
        return rpe::sample_dataset(rpe::rpe_design(target, lm), params, spam, config.n,
                                   trial_seed);
      };
      emit_point(static_cast<double>(lm),
                 rmse_point(config.trials, target, reference, generations, make_dataset));
    }
  } else {
    const int generations = static_cast<int>(ladder_up_to(config.l_max).size());
    const std::int64_t sequence_count =
        static_cast<std::int64_t>(rpe::rpe_design(target, config.l_max).sequences.size());
    for (std::int64_t n : config.n_list) {
      const std::string label = "scaling:n" + std::to_string(n) + ":";
      auto make_dataset = [&](int t) {
        const std::uint64_t trial_seed = rpe::derive_stream(seed, label + std::to_string(t));
        if (use_subsample) return rpe::subsample(*master, n, trial_seed);
        return rpe::sample_dataset(rpe::rpe_design(target, config.l_max), params, spam, n,
                                   trial_seed);
      };
      emit_point(static_cast<double>(n * sequence_count),
                 rmse_point(config.trials, target, reference, generations, make_dataset));
    }
  }

  const rpe::ScalingFit fit = rpe::scaling_fit(points);
  print_fit(fit);
  if (config.out) rpe::write_csv_atomic(*config.out, "abscissa,rmse", rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust phase estimation toolkit for single-qubit gate calibration"};
  app.require_subcommand(1);

  std::string kind_text = "alpha";
  std::int64_t l_max = 1024;
  std::int64_t n = 370;
  std::int64_t n_sub = 0;
  std::optional<std::uint64_t> seed_flag;
  std::optional<std::string> target_flag;
  std::string in_path;
  std::string out_path;
  std::optional<std::string> opt_out;
  ModelFlags model;

  auto* design = app.add_subcommand("design", "emit an experiment design as JSON");
  design->add_option("--kind", kind_text, "alpha | epsilon | gst")->capture_default_str();
  design->add_option("--lmax", l_max, "largest germ power, power of two")
      ->capture_default_str();
  design->add_option("--n", n, "samples per sequence used for the accounting line")
      ->capture_default_str();
  design->add_option("--out", out_path, "output JSON path")->required();

  auto* simulate = app.add_subcommand("simulate", "sample a synthetic dataset as JSON");
  simulate->add_option("--kind", kind_text, "alpha | epsilon | gst")->capture_default_str();
  simulate->add_option("--lmax", l_max, "largest germ power, power of two")
      ->capture_default_str();
  simulate->add_option("--n", n, "samples per sequence")->capture_default_str();
  simulate->add_option("--seed", seed_flag, "RNG seed (entropy when omitted)");
  simulate->add_option("--out", out_path, "output JSON path")->required();
  add_model_flags(simulate, model);

  auto* subsample =
      app.add_subcommand("subsample", "draw a smaller dataset without replacement");
  subsample->add_option("--in", in_path, "source dataset JSON")->required();
  subsample->add_option("--n-sub", n_sub, "samples per sequence to keep")->required();
  subsample->add_option("--seed", seed_flag, "RNG seed (entropy when omitted)");
  subsample->add_option("--out", out_path, "output JSON path")->required();

  auto* estimate = app.add_subcommand("estimate", "run phase estimation on a dataset");
  estimate->add_option("--in", in_path, "dataset JSON")->required();
  estimate->add_option("--target", target_flag,
                       "alpha | epsilon (defaults to the dataset kind)");
  estimate->add_option("--out", opt_out, "optional per-generation JSON output");

  std::vector<std::int64_t> bound_lmaxes = {1024};
  std::vector<std::int64_t> bound_ns = {370};
  std::vector<double> bound_deltas = {0.1};
  auto* bound = app.add_subcommand("bound", "evaluate the analytic RMSE bound");
  bound->add_option("--lmax", bound_lmaxes, "l_max values (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  bound->add_option("--n", bound_ns, "samples per sequence (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  bound->add_option("--delta", bound_deltas, "additive errors (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  bound->add_option("--out", opt_out, "optional CSV path (stdout when omitted)");

  ScalingConfig scaling_config;
  auto* scaling = app.add_subcommand("scaling", "Monte Carlo RMSE scaling study");
  scaling->add_option("--mode", scaling_config.mode, "heisenberg | sql")
      ->capture_default_str();
  scaling->add_option("--resample", scaling_config.resample,
                      "fresh datasets per trial or subsample of one master (fresh|subsample)")
      ->capture_default_str();
  scaling->add_option("--in", scaling_config.in,
                      "master dataset JSON (implies subsampling; reference is the "
                      "full-data estimate)");
  scaling->add_option("--target", scaling_config.target_flag, "alpha | epsilon");
  scaling->add_option("--lmax", scaling_config.l_max, "largest germ power")
      ->capture_default_str();
  scaling->add_option("--n", scaling_config.n, "samples per sequence (heisenberg mode)")
      ->capture_default_str();
  scaling->add_option("--n-list", scaling_config.n_list,
                      "samples-per-sequence sweep (sql mode, comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  scaling->add_option("--master-n", scaling_config.master_n,
                      "master dataset size for --resample subsample")
      ->capture_default_str();
  scaling->add_option("--trials", scaling_config.trials, "trials per point")
      ->capture_default_str();
  scaling->add_option("--seed", scaling_config.seed_flag, "RNG seed (entropy when omitted)");
  scaling->add_option("--out", scaling_config.out, "optional CSV path");
  add_model_flags(scaling, scaling_config.model);

  CLI11_PARSE(app, argc, argv);

  try {
    if (design->parsed()) return run_design(parse_kind(kind_text), l_max, n, out_path);
    if (simulate->parsed()) {
      return run_simulate(parse_kind(kind_text), l_max, n, model, seed_flag, out_path);
    }
    if (subsample->parsed()) return run_subsample(in_path, n_sub, seed_flag, out_path);
    if (estimate->parsed()) return run_estimate(in_path, target_flag, opt_out);
    if (bound->parsed()) return run_bound(bound_lmaxes, bound_ns, bound_deltas, opt_out);
    if (scaling->parsed()) return run_scaling(scaling_config);
  } catch (const rpe::ParseError& e) {
    std::fprintf(stderr, "error[parse]: %s\n", e.what());
    return 3;
  } catch (const rpe::MalformedDataset& e) {
    std::fprintf(stderr, "error[malformed-dataset]: %s\n", e.what());
    return 4;
  } catch (const rpe::DegenerateRealSpectrum& e) {
    std::fprintf(stderr, "error[degenerate-spectrum]: %s\n", e.what());
    return 5;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error[invalid-argument]: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error[internal]: %s\n", e.what());
    return 10;
  }
  return 0;
}
