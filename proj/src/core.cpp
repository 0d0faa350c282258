#include "nbai/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nbai/error.hpp"

namespace nbai {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EqualMeans: return "EqualMeans";
    case ErrorCode::InvalidBounds: return "InvalidBounds";
    case ErrorCode::NoObservations: return "NoObservations";
    case ErrorCode::OutOfOrder: return "OutOfOrder";
    case ErrorCode::NonPositiveSigma: return "NonPositiveSigma";
    case ErrorCode::NonPositiveVariance: return "NonPositiveVariance";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

double BanditInstance::sigma(ArmId a) const { return std::sqrt(variance(a)); }

void BanditInstance::validate() const {
  if (!(var1 > 0.0) || !(var2 > 0.0) || !std::isfinite(var1) ||
      !std::isfinite(var2)) {
    throw Error(ErrorCode::ValidationError,
                "instance variances must be positive and finite");
  }
  if (!std::isfinite(mu1) || !std::isfinite(mu2)) {
    throw Error(ErrorCode::ValidationError, "instance means must be finite");
  }
}

double TruncationConstants::sigma_lo() const { return std::sqrt(c_sigma2); }

double TruncationConstants::sigma_hi() const {
  return 1.0 / std::sqrt(c_sigma2);
}

void TruncationConstants::validate() const {
  if (!(c_mu > 0.0)) {
    throw Error(ErrorCode::ValidationError, "c_mu must be positive");
  }
  if (!(c_sigma2 > 0.0) || c_sigma2 > 1.0) {
    throw Error(ErrorCode::ValidationError, "c_sigma2 must lie in (0, 1]");
  }
}

void ExperimentConfig::validate() const {
  trunc.validate();
  if (horizon < 2) {
    throw Error(ErrorCode::ValidationError, "horizon must be at least 2");
  }
  if (init_rounds < 2 || init_rounds % 2 != 0) {
    throw Error(ErrorCode::ValidationError,
                "init_rounds must be even and at least 2");
  }
  if (init_rounds > horizon) {
    throw Error(ErrorCode::ValidationError,
                "init_rounds must not exceed horizon");
  }
  if (checkpoints.empty()) {
    throw Error(ErrorCode::ValidationError, "checkpoints must be nonempty");
  }
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    const int c = checkpoints[i];
    if (c < init_rounds || c > horizon) {
      throw Error(ErrorCode::ValidationError,
                  "checkpoint " + std::to_string(c) +
                      " outside [init_rounds, horizon]");
    }
    if (i > 0 && c <= checkpoints[i - 1]) {
      throw Error(ErrorCode::ValidationError,
                  "checkpoints must be strictly ascending");
    }
  }
}

std::vector<int> checkpoint_grid(int step, int horizon) {
  if (step < 1) {
    throw Error(ErrorCode::ValidationError, "checkpoint step must be >= 1");
  }
  std::vector<int> out;
  for (int t = step; t <= horizon; t += step) out.push_back(t);
  return out;
}

ArmId best_arm(const BanditInstance& instance) {
  if (instance.mu1 == instance.mu2) {
    throw Error(ErrorCode::EqualMeans, "no unique best arm: equal means");
  }
  return instance.mu1 > instance.mu2 ? ArmId::Arm1 : ArmId::Arm2;
}

double gap(const BanditInstance& instance) { return instance.mu1 - instance.mu2; }

double truncate(double v, double lo, double hi) {
  if (lo > hi) {
    throw Error(ErrorCode::InvalidBounds, "truncate: lower bound above upper");
  }
  return std::min(std::max(v, lo), hi);
}

}  // namespace nbai
