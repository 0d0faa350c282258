#include "nbai/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nbai/error.hpp"
#include "nbai/theory.hpp"

namespace nbai {

std::string_view strategy_name(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::NaAipw: return "na-aipw";
    case StrategyKind::NaIpw: return "na-ipw";
    case StrategyKind::NaSa: return "na-sa";
    case StrategyKind::Oracle: return "oracle";
    case StrategyKind::Uniform: return "uniform";
  }
  return "unknown";
}

StrategyKind parse_strategy(std::string_view name) {
  for (StrategyKind k : kAllStrategies) {
    if (strategy_name(k) == name) return k;
  }
  throw Error(ErrorCode::ValidationError,
              "unknown strategy '" + std::string(name) + "'");
}

NuisanceEstimates prefix_nuisance(const StrategyState& state,
                                  const TruncationConstants& trunc) {
  NuisanceEstimates nu;
  for (int a = 0; a < 2; ++a) {
    const RunningArmStats& s = state.stats[a];
    nu.mu_hat[a] =
        s.count > 0 ? truncate(mean_tilde(s), -trunc.c_mu, trunc.c_mu) : 0.0;
    nu.sigma_hat[a] =
        s.count > 0 ? truncate(sigma_tilde(s), trunc.sigma_lo(),
                               trunc.sigma_hi())
                    : trunc.sigma_lo();
  }
  nu.w_hat = {0.5, 0.5};
  return nu;
}

ArmId na_next_arm(int t, StrategyState& state, Rng& rng,
                  const ExperimentConfig& cfg) {
  const double u = rng.uniform();
  if (t <= cfg.init_rounds) {
    state.nuisance_current = prefix_nuisance(state, cfg.trunc);
    return t % 2 == 1 ? ArmId::Arm1 : ArmId::Arm2;
  }
  NuisanceEstimates nu = nuisance(state.stats[0], state.stats[1], cfg.trunc);
  if (cfg.mixing) {
    const double alpha = 1.0 / static_cast<double>(t);
    nu.w_hat[0] = alpha / 2.0 + (1.0 - alpha) * nu.w_hat[0];
    nu.w_hat[1] = 1.0 - nu.w_hat[0];
  }
  state.nuisance_current = nu;
  return u < nu.w_hat[0] ? ArmId::Arm1 : ArmId::Arm2;
}

void record_observation(int t, ArmId arm, double reward, StrategyState& state) {
  if (t != state.round + 1) {
    throw Error(ErrorCode::OutOfOrder,
                "record at round " + std::to_string(t) + " after round " +
                    std::to_string(state.round));
  }
  RunningArmStats& s = state.stats[index(arm)];
  s = update(s, reward);
  state.round = t;
}

void record(int t, ArmId arm, double reward, StrategyState& state) {
  if (t != state.round + 1) {
    throw Error(ErrorCode::OutOfOrder,
                "record at round " + std::to_string(t) + " after round " +
                    std::to_string(state.round));
  }
  const NuisanceEstimates& nu = state.nuisance_current;
  for (ArmId target : {ArmId::Arm1, ArmId::Arm2}) {
    state.aipw_sums[index(target)] += aipw_score(arm, reward, nu, target);
    state.ipw_sums[index(target)] += ipw_score(arm, reward, nu, target);
  }
  record_observation(t, arm, reward, state);
}

namespace {

void require_current(int t, const StrategyState& state) {
  if (t != state.round || t < 1) {
    throw Error(ErrorCode::OutOfOrder,
                "recommend at round " + std::to_string(t) +
                    " but state is at round " + std::to_string(state.round));
  }
}

// Ties go to Arm1.
ArmId pick(double score1, double score2) {
  return score1 >= score2 ? ArmId::Arm1 : ArmId::Arm2;
}

}  // namespace

// Sums rather than averages: dividing both by t does not change the order.
ArmId recommend_na_aipw(int t, const StrategyState& state) {
  require_current(t, state);
  return pick(state.aipw_sums[0], state.aipw_sums[1]);
}

ArmId recommend_na_ipw(int t, const StrategyState& state) {
  require_current(t, state);
  return pick(state.ipw_sums[0], state.ipw_sums[1]);
}

ArmId recommend_na_sa(int t, const StrategyState& state) {
  require_current(t, state);
  return pick(mean_tilde(state.stats[0]), mean_tilde(state.stats[1]));
}

namespace {

int oracle_arm1_count(int T, double w1) {
  const int n1 = static_cast<int>(std::nearbyint(w1 * static_cast<double>(T)));
  return std::clamp(n1, 1, T - 1);
}

}  // namespace

std::vector<ArmId> oracle_schedule(int T, double sigma1, double sigma2) {
  if (T < 2) {
    throw Error(ErrorCode::ValidationError, "oracle schedule needs T >= 2");
  }
  const double w1 = target_allocation(sigma1, sigma2).first;
  const int n1 = oracle_arm1_count(T, w1);
  std::vector<ArmId> out(static_cast<std::size_t>(T), ArmId::Arm2);
  std::fill_n(out.begin(), n1, ArmId::Arm1);
  return out;
}

ArmId uniform_next_arm(int t) { return t % 2 == 1 ? ArmId::Arm1 : ArmId::Arm2; }

NeymanStrategy::NeymanStrategy(StrategyKind kind, const ExperimentConfig& cfg)
    : kind_(kind), cfg_(cfg) {
  if (kind != StrategyKind::NaAipw && kind != StrategyKind::NaIpw &&
      kind != StrategyKind::NaSa) {
    throw Error(ErrorCode::ValidationError,
                "NeymanStrategy needs na-aipw, na-ipw or na-sa");
  }
}

ArmId NeymanStrategy::next_arm(int t, Rng& rng) {
  return na_next_arm(t, state_, rng, cfg_);
}

void NeymanStrategy::record(int t, ArmId arm, double reward) {
  nbai::record(t, arm, reward, state_);
}

ArmId NeymanStrategy::recommend(int t) const {
  switch (kind_) {
    case StrategyKind::NaAipw: return recommend_na_aipw(t, state_);
    case StrategyKind::NaIpw: return recommend_na_ipw(t, state_);
    default: return recommend_na_sa(t, state_);
  }
}

OracleStrategy::OracleStrategy(double sigma1, double sigma2,
                               std::span<const int> checkpoints, int horizon) {
  const double w1 = target_allocation(sigma1, sigma2).first;
  std::vector<int> bounds(checkpoints.begin(), checkpoints.end());
  if (bounds.empty() || bounds.back() < horizon) bounds.push_back(horizon);
  int prev_end = 0;
  int arm1_so_far = 0;
  for (int end : bounds) {
    const int len = end - prev_end;
    int n1 = 0;
    if (end >= 2) {
      n1 = std::clamp(oracle_arm1_count(end, w1) - arm1_so_far, 0, len);
    } else {
      n1 = len;
    }
    segments_.push_back({end, prev_end + n1});
    arm1_so_far += n1;
    prev_end = end;
  }
}

ArmId OracleStrategy::next_arm(int t, Rng& rng) {
  rng.uniform();
  while (current_ + 1 < segments_.size() && t > segments_[current_].end) {
    ++current_;
  }
  return t <= segments_[current_].arm1_end ? ArmId::Arm1 : ArmId::Arm2;
}

void OracleStrategy::record(int t, ArmId arm, double reward) {
  record_observation(t, arm, reward, state_);
}

ArmId OracleStrategy::recommend(int t) const {
  return recommend_na_sa(t, state_);
}

ArmId UniformStrategy::next_arm(int t, Rng& rng) {
  rng.uniform();
  return uniform_next_arm(t);
}

void UniformStrategy::record(int t, ArmId arm, double reward) {
  record_observation(t, arm, reward, state_);
}

ArmId UniformStrategy::recommend(int t) const {
  return recommend_na_sa(t, state_);
}

std::unique_ptr<Strategy> make_strategy(StrategyKind kind,
                                        const BanditInstance& instance,
                                        const ExperimentConfig& cfg) {
  switch (kind) {
    case StrategyKind::Oracle:
      return std::make_unique<OracleStrategy>(
          instance.sigma(ArmId::Arm1), instance.sigma(ArmId::Arm2),
          cfg.checkpoints, cfg.horizon);
    case StrategyKind::Uniform:
      return std::make_unique<UniformStrategy>();
    default:
      return std::make_unique<NeymanStrategy>(kind, cfg);
  }
}

}  // namespace nbai
