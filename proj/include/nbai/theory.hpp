#pragma once

#include <array>
#include <utility>

#include "nbai/core.hpp"

namespace nbai {

// Closed-form quantities for a two-armed Gaussian instance. Sigmas are
// standard deviations throughout this header.

struct RateReport {
  double delta = 0.0;
  std::array<double, 2> w_star{0.5, 0.5};
  double v_aipw = 0.0;
  double rate_lower_bound = 0.0;
  double rate_ipw = 0.0;
  std::array<double, 2> zeta{0.0, 0.0};
};

// Neyman allocation sigma_a / (sigma_1 + sigma_2).
std::pair<double, double> target_allocation(double sigma1, double sigma2);

// (sigma_1 + sigma_2)^2, the asymptotic variance of the AIPW gap estimate.
double aipw_variance(double sigma1, double sigma2);

double lower_bound_rate(double delta, double sigma1, double sigma2);

double ipw_rate(double delta, double mu1, double mu2, double sigma1,
                double sigma2);

double normalized_score(double psi1, double psi2, double delta, double v);

double normal_cdf(double x);

// Misidentification probability of a fixed Neyman split with exact counts.
double oracle_exact_error(double delta, double sigma1, double sigma2, int T);

RateReport rate_report(const BanditInstance& instance);

}  // namespace nbai
