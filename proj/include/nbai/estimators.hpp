#pragma once

#include <array>
#include <cstdint>

#include "nbai/core.hpp"

namespace nbai {

// Per-arm count, sum and sum of squares of observed rewards.
struct RunningArmStats {
  std::int64_t count = 0;
  double sum = 0.0;
  double sum_sq = 0.0;

  friend bool operator==(const RunningArmStats&,
                         const RunningArmStats&) = default;
};

RunningArmStats update(RunningArmStats stats, double reward);

// Plain sample mean.
double mean_tilde(const RunningArmStats& stats);

// Plug-in (divide-by-count) standard deviation, clamped at zero before sqrt.
double sigma_tilde(const RunningArmStats& stats);

// Truncated plug-in estimates used by the adaptive strategies at one round.
// w_hat is the probability with which arms are actually drawn.
struct NuisanceEstimates {
  std::array<double, 2> mu_hat{0.0, 0.0};
  std::array<double, 2> sigma_hat{1.0, 1.0};
  std::array<double, 2> w_hat{0.5, 0.5};

  double mu(ArmId a) const { return mu_hat[index(a)]; }
  double w(ArmId a) const { return w_hat[index(a)]; }
};

NuisanceEstimates nuisance(const RunningArmStats& stats1,
                           const RunningArmStats& stats2,
                           const TruncationConstants& trunc);

// AIPW score psi_{target,t}: inverse-propensity residual plus plug-in mean.
double aipw_score(ArmId drawn, double reward, const NuisanceEstimates& nu,
                  ArmId target);

double ipw_score(ArmId drawn, double reward, const NuisanceEstimates& nu,
                 ArmId target);

}  // namespace nbai
