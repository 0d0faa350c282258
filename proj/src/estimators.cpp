#include "nbai/estimators.hpp"

#include <algorithm>
#include <cmath>

#include "nbai/error.hpp"

namespace nbai {

RunningArmStats update(RunningArmStats stats, double reward) {
  stats.count += 1;
  stats.sum += reward;
  stats.sum_sq += reward * reward;
  return stats;
}

namespace {

void require_observations(const RunningArmStats& stats) {
  if (stats.count <= 0) {
    throw Error(ErrorCode::NoObservations, "arm has no observations");
  }
}

}  // namespace

double mean_tilde(const RunningArmStats& stats) {
  require_observations(stats);
  return stats.sum / static_cast<double>(stats.count);
}

double sigma_tilde(const RunningArmStats& stats) {
  require_observations(stats);
  const double n = static_cast<double>(stats.count);
  const double m = stats.sum / n;
  return std::sqrt(std::max(0.0, stats.sum_sq / n - m * m));
}

NuisanceEstimates nuisance(const RunningArmStats& stats1,
                           const RunningArmStats& stats2,
                           const TruncationConstants& trunc) {
  NuisanceEstimates nu;
  const RunningArmStats* stats[2] = {&stats1, &stats2};
  for (int a = 0; a < 2; ++a) {
    nu.mu_hat[a] = truncate(mean_tilde(*stats[a]), -trunc.c_mu, trunc.c_mu);
    nu.sigma_hat[a] =
        truncate(sigma_tilde(*stats[a]), trunc.sigma_lo(), trunc.sigma_hi());
  }
  nu.w_hat[0] = nu.sigma_hat[0] / (nu.sigma_hat[0] + nu.sigma_hat[1]);
  nu.w_hat[1] = 1.0 - nu.w_hat[0];
  return nu;
}

double aipw_score(ArmId drawn, double reward, const NuisanceEstimates& nu,
                  ArmId target) {
  const double mu = nu.mu(target);
  if (drawn != target) return mu;
  return (reward - mu) / nu.w(target) + mu;
}

double ipw_score(ArmId drawn, double reward, const NuisanceEstimates& nu,
                 ArmId target) {
  if (drawn != target) return 0.0;
  return reward / nu.w(target);
}

}  // namespace nbai
