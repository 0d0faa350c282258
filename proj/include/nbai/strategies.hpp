#pragma once

#include <array>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "nbai/core.hpp"
#include "nbai/estimators.hpp"
#include "nbai/random.hpp"

namespace nbai {

enum class StrategyKind { NaAipw, NaIpw, NaSa, Oracle, Uniform };

inline constexpr std::array<StrategyKind, 5> kAllStrategies{
    StrategyKind::NaAipw, StrategyKind::NaIpw, StrategyKind::NaSa,
    StrategyKind::Oracle, StrategyKind::Uniform};

std::string_view strategy_name(StrategyKind kind);

// Throws ValidationError for unknown names.
StrategyKind parse_strategy(std::string_view name);

// Adaptive state of one strategy within one trial. nuisance_current holds
// the estimates frozen before the draw of round `round + 1`.
struct StrategyState {
  std::array<RunningArmStats, 2> stats{};
  NuisanceEstimates nuisance_current;
  std::array<double, 2> aipw_sums{0.0, 0.0};
  std::array<double, 2> ipw_sums{0.0, 0.0};
  int round = 0;

  const RunningArmStats& arm(ArmId a) const { return stats[index(a)]; }
};

// Estimates used during the forced prefix: w = (1/2, 1/2), mu_hat the
// truncated running mean, or 0 for an arm not yet observed.
NuisanceEstimates prefix_nuisance(const StrategyState& state,
                                  const TruncationConstants& trunc);

// Neyman sampling rule shared by NA-AIPW, NA-IPW and NA-SA. Consumes exactly
// one uniform from rng on every round.
ArmId na_next_arm(int t, StrategyState& state, Rng& rng,
                  const ExperimentConfig& cfg);

// Appends the observation and accumulates AIPW and IPW scores using
// state.nuisance_current. Throws OutOfOrder unless t == round + 1.
void record(int t, ArmId arm, double reward, StrategyState& state);

// Stats-only variant for strategies without propensities.
void record_observation(int t, ArmId arm, double reward, StrategyState& state);

ArmId recommend_na_aipw(int t, const StrategyState& state);
ArmId recommend_na_ipw(int t, const StrategyState& state);
ArmId recommend_na_sa(int t, const StrategyState& state);

// Arm1 for the first round-half-even(w1*T) rounds (clamped to [1, T-1]),
// Arm2 afterwards.
std::vector<ArmId> oracle_schedule(int T, double sigma1, double sigma2);

// Arm1 on odd rounds, Arm2 on even rounds.
ArmId uniform_next_arm(int t);

class Strategy {
 public:
  virtual ~Strategy() = default;

  virtual StrategyKind kind() const = 0;
  virtual ArmId next_arm(int t, Rng& rng) = 0;
  virtual void record(int t, ArmId arm, double reward) = 0;
  // Callable at any round without touching state; t must equal state().round.
  virtual ArmId recommend(int t) const = 0;

  const StrategyState& state() const { return state_; }

 protected:
  StrategyState state_;
};

class NeymanStrategy final : public Strategy {
 public:
  NeymanStrategy(StrategyKind kind, const ExperimentConfig& cfg);

  StrategyKind kind() const override { return kind_; }
  ArmId next_arm(int t, Rng& rng) override;
  void record(int t, ArmId arm, double reward) override;
  ArmId recommend(int t) const override;

 private:
  StrategyKind kind_;
  ExperimentConfig cfg_;
};

// Known-variance Neyman split. Within each segment between consecutive
// checkpoints the arm-1 rounds come first, sized so that the arm-1 count at
// every checkpoint c is round-half-even(w1*c) clamped to [1, c-1]. With a
// single checkpoint at T this is exactly oracle_schedule(T, ...).
class OracleStrategy final : public Strategy {
 public:
  OracleStrategy(double sigma1, double sigma2, std::span<const int> checkpoints,
                 int horizon);

  StrategyKind kind() const override { return StrategyKind::Oracle; }
  ArmId next_arm(int t, Rng& rng) override;
  void record(int t, ArmId arm, double reward) override;
  ArmId recommend(int t) const override;

 private:
  struct Segment {
    int end;       // last round of the segment
    int arm1_end;  // rounds in (start, arm1_end] draw Arm1
  };
  std::vector<Segment> segments_;
  std::size_t current_ = 0;
};

class UniformStrategy final : public Strategy {
 public:
  StrategyKind kind() const override { return StrategyKind::Uniform; }
  ArmId next_arm(int t, Rng& rng) override;
  void record(int t, ArmId arm, double reward) override;
  ArmId recommend(int t) const override;
};

// Oracle reads the true variances from instance; the others ignore it.
std::unique_ptr<Strategy> make_strategy(StrategyKind kind,
                                        const BanditInstance& instance,
                                        const ExperimentConfig& cfg);

}  // namespace nbai
