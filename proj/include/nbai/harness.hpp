#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "nbai/core.hpp"
#include "nbai/random.hpp"
#include "nbai/strategies.hpp"

namespace nbai {

// (lo, hi) is assigned to the arms in a random order each trial.
struct VariancePair {
  double lo = 1.0;
  double hi = 1.0;

  friend bool operator==(const VariancePair&, const VariancePair&) = default;
};

// Whether pair values are variances (default) or standard deviations.
enum class PairValues { Variances, StdDevs };

struct ExperimentSpec {
  std::string setting_id = "setting";
  double mu1 = 1.0;
  std::vector<double> mu2_list;
  std::vector<VariancePair> variance_pairs;
  PairValues pair_values = PairValues::Variances;
  std::vector<StrategyKind> strategies{kAllStrategies.begin(),
                                       kAllStrategies.end()};
  int trials = 1000;
  ExperimentConfig config;

  // Throws ValidationError.
  void validate() const;
};

// One (mu2, variance pair) combination of a spec.
struct Cell {
  double mu1 = 0.0;
  double mu2 = 0.0;
  VariancePair pair;
  PairValues pair_values = PairValues::Variances;
};

// mu2 varies slowest, then variance pair.
std::vector<Cell> expand_cells(const ExperimentSpec& spec);

BanditInstance sample_instance(const Cell& cell, Rng& rng);

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t cell_index,
                         std::uint64_t trial_index);

struct TrialResult {
  // [strategy][checkpoint]
  std::vector<std::vector<ArmId>> recommendations;
  // [strategy][arm]
  std::vector<std::array<std::int64_t, 2>> arm_draw_counts;
  // Normalized AIPW score per round after the forced prefix; filled only when
  // requested and an NA-AIPW strategy is present.
  std::vector<double> psi;
};

struct TrialOptions {
  bool collect_psi = false;
  // Records every reward a strategy observes, for stream-sharing checks.
  std::vector<std::vector<Observation>>* observations = nullptr;
};

// Rewards are drawn as one (Y1, Y2) pair per round from a stream keyed by
// trial_seed alone; each strategy sees the entry for the arm it chose.
TrialResult run_trial(const BanditInstance& instance,
                      std::span<const StrategyKind> strategies,
                      const ExperimentConfig& config, std::uint64_t seed,
                      const TrialOptions& options = {});

struct AggregateResult {
  std::size_t cell_index = 0;
  Cell cell;
  StrategyKind strategy = StrategyKind::NaAipw;
  std::vector<int> checkpoints;
  std::vector<std::int64_t> error_counts;
  std::int64_t trials = 0;

  double p_error(std::size_t k) const {
    return static_cast<double>(error_counts[k]) / static_cast<double>(trials);
  }
};

struct RunOptions {
  // 0 picks std::thread::hardware_concurrency().
  unsigned workers = 1;
  // Called once per finished cell; calls are serialized.
  std::function<void(std::size_t done, std::size_t total)> on_cell_done;
};

// Results are ordered by cell then by spec strategy order. Independent of
// worker count and scheduling.
std::vector<AggregateResult> run_experiment(const ExperimentSpec& spec,
                                            const RunOptions& options = {});

struct MdsDiagnostic {
  double mean = 0.0;
  double second_moment = 0.0;
  std::int64_t rounds_used = 0;
};

// Runs NA-AIPW for n_rounds and averages Psi_t and Psi_t^2 over the rounds
// after the forced prefix, using the true gap and (sigma1 + sigma2)^2.
MdsDiagnostic mds_diagnostic(const BanditInstance& instance,
                             const ExperimentConfig& config, int n_rounds,
                             std::uint64_t seed);

// -log(p)/T; +infinity when p == 0.
double empirical_rate(double p_error, int T);

}  // namespace nbai
