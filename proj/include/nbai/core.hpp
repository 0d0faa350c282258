#pragma once

#include <cstdint>
#include <vector>

namespace nbai {

enum class ArmId : int { Arm1 = 0, Arm2 = 1 };

constexpr ArmId other(ArmId a) {
  return a == ArmId::Arm1 ? ArmId::Arm2 : ArmId::Arm1;
}

constexpr int index(ArmId a) { return static_cast<int>(a); }

constexpr int arm_number(ArmId a) { return index(a) + 1; }

// Two-armed Gaussian environment. Variances, not standard deviations.
struct BanditInstance {
  double mu1 = 0.0;
  double mu2 = 0.0;
  double var1 = 1.0;
  double var2 = 1.0;

  double mean(ArmId a) const { return a == ArmId::Arm1 ? mu1 : mu2; }
  double variance(ArmId a) const { return a == ArmId::Arm1 ? var1 : var2; }
  double sigma(ArmId a) const;

  // Throws ValidationError unless both variances are positive and finite.
  void validate() const;
};

struct TruncationConstants {
  double c_mu = 100.0;
  double c_sigma2 = 1e-4;

  double sigma_lo() const;
  double sigma_hi() const;

  void validate() const;
};

struct ExperimentConfig {
  int horizon = 10000;
  // Forced alternation prefix. Two rounds (one sample per arm) is the
  // minimum; it leaves a zero empirical sd that starves one arm for hundreds
  // of rounds, so the default gives each arm five samples.
  int init_rounds = 10;
  TruncationConstants trunc;
  std::vector<int> checkpoints;
  std::uint64_t master_seed = 0;
  // Mixes the sampling probability towards 1/2 with weight 1/t.
  bool mixing = false;

  void validate() const;
};

// {step, 2*step, ...} up to and including horizon when divisible.
std::vector<int> checkpoint_grid(int step, int horizon);

struct Observation {
  int round = 1;
  ArmId arm = ArmId::Arm1;
  double reward = 0.0;
};

ArmId best_arm(const BanditInstance& instance);

// Signed mu1 - mu2.
double gap(const BanditInstance& instance);

double truncate(double v, double lo, double hi);

}  // namespace nbai
