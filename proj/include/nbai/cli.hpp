#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "nbai/core.hpp"

namespace nbai::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kRuntime = 2 };

struct RunArgs {
  std::string spec_path;
  std::string out_path;  // empty writes to `out`
  std::optional<std::uint64_t> seed;
  unsigned workers = 1;
  std::optional<int> checkpoint_step;
  std::optional<int> trials;
  std::optional<int> horizon;
  bool progress = true;
};

struct BoundsArgs {
  double mu1 = 0.0;
  double mu2 = 0.0;
  double sigma1 = 1.0;
  double sigma2 = 1.0;
  std::optional<int> horizon;
};

struct DiagnoseArgs {
  double mu1 = 0.0;
  double mu2 = 0.0;
  double sigma1 = 1.0;
  double sigma2 = 1.0;
  int rounds = 100000;
  std::uint64_t seed = 0;
  int init_rounds = ExperimentConfig{}.init_rounds;
};

// Data goes to `out`, messages to `err`.
int cmd_run(const RunArgs& args, std::ostream& out, std::ostream& err);
int cmd_bounds(const BoundsArgs& args, std::ostream& out, std::ostream& err);
int cmd_diagnose(const DiagnoseArgs& args, std::ostream& out,
                 std::ostream& err);

// Tolerances reported by `diagnose`.
double diagnose_mean_tolerance(std::int64_t rounds_used);
inline constexpr double kSecondMomentLo = 0.93;
inline constexpr double kSecondMomentHi = 1.07;

}  // namespace nbai::cli
