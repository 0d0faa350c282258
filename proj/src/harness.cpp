#include "nbai/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <memory>
#include <mutex>
#include <thread>

#include "nbai/error.hpp"
#include "nbai/estimators.hpp"
#include "nbai/theory.hpp"

namespace nbai {

void ExperimentSpec::validate() const {
  config.validate();
  if (setting_id.empty() ||
      setting_id.find_first_of(",\"\r\n") != std::string::npos) {
    throw Error(ErrorCode::ValidationError,
                "setting_id must be nonempty and free of commas, quotes and "
                "line breaks");
  }
  if (trials < 1) {
    throw Error(ErrorCode::ValidationError, "trials must be at least 1");
  }
  if (mu2_list.empty()) {
    throw Error(ErrorCode::ValidationError, "mu2 list must be nonempty");
  }
  if (variance_pairs.empty()) {
    throw Error(ErrorCode::ValidationError,
                "variance pair list must be nonempty");
  }
  if (strategies.empty()) {
    throw Error(ErrorCode::ValidationError, "strategy list must be nonempty");
  }
  for (double mu2 : mu2_list) {
    if (mu2 == mu1) {
      throw Error(ErrorCode::ValidationError,
                  "mu2 equals mu1: no unique best arm");
    }
  }
  for (const VariancePair& p : variance_pairs) {
    if (!(p.lo > 0.0) || !(p.hi > 0.0)) {
      throw Error(ErrorCode::ValidationError,
                  "variance pair entries must be positive");
    }
  }
  for (std::size_t i = 0; i < strategies.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (strategies[i] == strategies[j]) {
        throw Error(ErrorCode::ValidationError,
                    "duplicate strategy '" +
                        std::string(strategy_name(strategies[i])) + "'");
      }
    }
  }
}

std::vector<Cell> expand_cells(const ExperimentSpec& spec) {
  std::vector<Cell> cells;
  for (double mu2 : spec.mu2_list) {
    for (const VariancePair& p : spec.variance_pairs) {
      cells.push_back({spec.mu1, mu2, p, spec.pair_values});
    }
  }
  return cells;
}

BanditInstance sample_instance(const Cell& cell, Rng& rng) {
  double lo = cell.pair.lo;
  double hi = cell.pair.hi;
  if (cell.pair_values == PairValues::StdDevs) {
    lo *= lo;
    hi *= hi;
  }
  const bool flip = rng.uniform() >= 0.5;
  BanditInstance inst{cell.mu1, cell.mu2, flip ? hi : lo, flip ? lo : hi};
  inst.validate();
  return inst;
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t cell_index,
                         std::uint64_t trial_index) {
  return split_seed({master_seed, cell_index, trial_index});
}

namespace {

std::uint64_t stream_seed(std::uint64_t seed, Stream stream,
                          std::uint64_t offset = 0) {
  return split_seed({seed, static_cast<std::uint64_t>(stream) + offset});
}

}  // namespace

TrialResult run_trial(const BanditInstance& instance,
                      std::span<const StrategyKind> strategies,
                      const ExperimentConfig& config, std::uint64_t seed,
                      const TrialOptions& options) {
  config.validate();
  instance.validate();
  const std::size_t n_strat = strategies.size();

  std::vector<std::unique_ptr<Strategy>> players;
  std::vector<Rng> strategy_rngs;
  players.reserve(n_strat);
  strategy_rngs.reserve(n_strat);
  for (StrategyKind kind : strategies) {
    players.push_back(make_strategy(kind, instance, config));
    strategy_rngs.emplace_back(stream_seed(
        seed, Stream::Strategy, static_cast<std::uint64_t>(kind)));
  }
  Rng rewards(stream_seed(seed, Stream::Rewards));

  const auto psi_it =
      std::find(strategies.begin(), strategies.end(), StrategyKind::NaAipw);
  const bool want_psi = options.collect_psi && psi_it != strategies.end();
  const std::size_t psi_index =
      static_cast<std::size_t>(psi_it - strategies.begin());
  const double delta = gap(instance);
  const double v = aipw_variance(instance.sigma(ArmId::Arm1),
                                 instance.sigma(ArmId::Arm2));

  TrialResult result;
  result.recommendations.assign(n_strat, {});
  for (auto& r : result.recommendations) r.reserve(config.checkpoints.size());
  if (want_psi) result.psi.reserve(static_cast<std::size_t>(config.horizon));
  if (options.observations) options.observations->assign(n_strat, {});

  const double sd1 = instance.sigma(ArmId::Arm1);
  const double sd2 = instance.sigma(ArmId::Arm2);
  std::size_t next_checkpoint = 0;
  for (int t = 1; t <= config.horizon; ++t) {
    const double y1 = rewards.normal(instance.mu1, sd1);
    const double y2 = rewards.normal(instance.mu2, sd2);
    for (std::size_t s = 0; s < n_strat; ++s) {
      Strategy& player = *players[s];
      const ArmId arm = player.next_arm(t, strategy_rngs[s]);
      const double y = arm == ArmId::Arm1 ? y1 : y2;
      if (want_psi && s == psi_index && t > config.init_rounds) {
        const NuisanceEstimates& nu = player.state().nuisance_current;
        result.psi.push_back(normalized_score(
            aipw_score(arm, y, nu, ArmId::Arm1),
            aipw_score(arm, y, nu, ArmId::Arm2), delta, v));
      }
      if (options.observations) {
        (*options.observations)[s].push_back({t, arm, y});
      }
      player.record(t, arm, y);
    }
    if (next_checkpoint < config.checkpoints.size() &&
        config.checkpoints[next_checkpoint] == t) {
      for (std::size_t s = 0; s < n_strat; ++s) {
        result.recommendations[s].push_back(players[s]->recommend(t));
      }
      ++next_checkpoint;
    }
  }

  result.arm_draw_counts.reserve(n_strat);
  for (const auto& p : players) {
    result.arm_draw_counts.push_back(
        {p->state().stats[0].count, p->state().stats[1].count});
  }
  return result;
}

std::vector<AggregateResult> run_experiment(const ExperimentSpec& spec,
                                            const RunOptions& options) {
  spec.validate();
  const std::vector<Cell> cells = expand_cells(spec);
  const std::size_t n_cells = cells.size();
  const std::size_t n_strat = spec.strategies.size();
  const std::size_t n_ck = spec.config.checkpoints.size();
  const std::size_t trials = static_cast<std::size_t>(spec.trials);
  const std::size_t total_items = n_cells * trials;

  unsigned workers = options.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, std::max<std::size_t>(1, total_items)));

  auto slot = [&](std::size_t cell, std::size_t s, std::size_t k) {
    return (cell * n_strat + s) * n_ck + k;
  };

  // Integer counts merge exactly, so the result does not depend on which
  // worker ran which trial.
  std::vector<std::vector<std::int64_t>> partial(
      workers, std::vector<std::int64_t>(n_cells * n_strat * n_ck, 0));
  std::vector<std::atomic<std::size_t>> remaining(n_cells);
  for (auto& r : remaining) r.store(trials);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> cells_done{0};
  std::atomic<bool> failed{false};
  std::mutex mu;
  std::exception_ptr error;

  auto work = [&](unsigned w) {
    std::vector<std::int64_t>& counts = partial[w];
    try {
      for (;;) {
        if (failed.load(std::memory_order_relaxed)) return;
        const std::size_t item = next.fetch_add(1);
        if (item >= total_items) return;
        const std::size_t c = item / trials;
        const std::size_t i = item % trials;
        const std::uint64_t seed =
            trial_seed(spec.config.master_seed, c, i);
        Rng inst_rng(split_seed({seed, static_cast<std::uint64_t>(
                                           Stream::Instance)}));
        const BanditInstance inst = sample_instance(cells[c], inst_rng);
        const ArmId best = best_arm(inst);
        const TrialResult tr =
            run_trial(inst, spec.strategies, spec.config, seed);
        for (std::size_t s = 0; s < n_strat; ++s) {
          for (std::size_t k = 0; k < n_ck; ++k) {
            if (tr.recommendations[s][k] != best) ++counts[slot(c, s, k)];
          }
        }
        if (remaining[c].fetch_sub(1) == 1 && options.on_cell_done) {
          std::lock_guard lock(mu);
          options.on_cell_done(++cells_done, n_cells);
        }
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!error) error = std::current_exception();
      failed.store(true);
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  if (error) std::rethrow_exception(error);

  std::vector<AggregateResult> out;
  out.reserve(n_cells * n_strat);
  for (std::size_t c = 0; c < n_cells; ++c) {
    for (std::size_t s = 0; s < n_strat; ++s) {
      AggregateResult agg;
      agg.cell_index = c;
      agg.cell = cells[c];
      agg.strategy = spec.strategies[s];
      agg.checkpoints = spec.config.checkpoints;
      agg.trials = spec.trials;
      agg.error_counts.assign(n_ck, 0);
      for (std::size_t k = 0; k < n_ck; ++k) {
        for (const auto& p : partial) agg.error_counts[k] += p[slot(c, s, k)];
      }
      out.push_back(std::move(agg));
    }
  }
  return out;
}

MdsDiagnostic mds_diagnostic(const BanditInstance& instance,
                             const ExperimentConfig& config, int n_rounds,
                             std::uint64_t seed) {
  if (n_rounds < 1000) {
    throw Error(ErrorCode::ValidationError,
                "diagnostic needs at least 1000 rounds");
  }
  ExperimentConfig cfg = config;
  cfg.horizon = n_rounds;
  cfg.checkpoints = {n_rounds};
  const StrategyKind kind = StrategyKind::NaAipw;
  TrialOptions opts;
  opts.collect_psi = true;
  const TrialResult tr = run_trial(instance, std::span(&kind, 1), cfg, seed, opts);

  MdsDiagnostic d;
  d.rounds_used = static_cast<std::int64_t>(tr.psi.size());
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double p : tr.psi) {
    sum += p;
    sum_sq += p * p;
  }
  d.mean = sum / static_cast<double>(d.rounds_used);
  d.second_moment = sum_sq / static_cast<double>(d.rounds_used);
  return d;
}

double empirical_rate(double p_error, int T) {
  if (p_error <= 0.0) return std::numeric_limits<double>::infinity();
  const double rate = -std::log(p_error) / static_cast<double>(T);
  return rate == 0.0 ? 0.0 : rate;  // no "-0" for p == 1
}

}  // namespace nbai
