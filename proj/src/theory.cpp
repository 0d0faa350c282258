#include "nbai/theory.hpp"

#include <cmath>

#include "nbai/error.hpp"

namespace nbai {

namespace {

void require_positive_sigmas(double sigma1, double sigma2) {
  if (!(sigma1 > 0.0) || !(sigma2 > 0.0)) {
    throw Error(ErrorCode::NonPositiveSigma, "sigmas must be positive");
  }
}

}  // namespace

std::pair<double, double> target_allocation(double sigma1, double sigma2) {
  require_positive_sigmas(sigma1, sigma2);
  const double w1 = sigma1 / (sigma1 + sigma2);
  return {w1, 1.0 - w1};
}

double aipw_variance(double sigma1, double sigma2) {
  require_positive_sigmas(sigma1, sigma2);
  const double s = sigma1 + sigma2;
  return s * s;
}

double lower_bound_rate(double delta, double sigma1, double sigma2) {
  return delta * delta / (2.0 * aipw_variance(sigma1, sigma2));
}

double ipw_rate(double delta, double mu1, double mu2, double sigma1,
                double sigma2) {
  require_positive_sigmas(sigma1, sigma2);
  const double zeta1 = mu1 * mu1 + sigma1 * sigma1;
  const double zeta2 = mu2 * mu2 + sigma2 * sigma2;
  const double denom =
      2.0 * (sigma1 + sigma2) * (zeta1 / sigma1 + zeta2 / sigma2);
  return delta * delta / denom;
}

double normalized_score(double psi1, double psi2, double delta, double v) {
  if (!(v > 0.0)) {
    throw Error(ErrorCode::NonPositiveVariance, "variance must be positive");
  }
  return (psi1 - psi2 - delta) / std::sqrt(v);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

// n1 = w1*T rounding is ignored: the gap estimate is treated as Gaussian with
// variance (sigma1 + sigma2)^2 / T.
double oracle_exact_error(double delta, double sigma1, double sigma2, int T) {
  require_positive_sigmas(sigma1, sigma2);
  return normal_cdf(-delta * std::sqrt(static_cast<double>(T)) /
                    (sigma1 + sigma2));
}

RateReport rate_report(const BanditInstance& instance) {
  instance.validate();
  const double s1 = instance.sigma(ArmId::Arm1);
  const double s2 = instance.sigma(ArmId::Arm2);
  RateReport r;
  r.delta = gap(instance);
  const auto [w1, w2] = target_allocation(s1, s2);
  r.w_star = {w1, w2};
  r.v_aipw = aipw_variance(s1, s2);
  r.rate_lower_bound = lower_bound_rate(r.delta, s1, s2);
  r.rate_ipw = ipw_rate(r.delta, instance.mu1, instance.mu2, s1, s2);
  r.zeta = {instance.mu1 * instance.mu1 + instance.var1,
            instance.mu2 * instance.mu2 + instance.var2};
  return r;
}

}  // namespace nbai
