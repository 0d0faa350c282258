#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "nbai/harness.hpp"

namespace nbai {

// Command-line values that take precedence over the file.
struct SpecOverrides {
  std::optional<int> trials;
  std::optional<int> horizon;
  std::optional<int> checkpoint_step;
  std::optional<std::uint64_t> master_seed;
};

// Parses a YAML experiment description. Recognized keys:
//   setting_id, mu1, mu2 (list), variance_pairs (list of [lo, hi]),
//   pair_values (variances | std_devs), strategies (list), trials, horizon,
//   checkpoint_step, checkpoints (list), init_rounds, c_mu, c_sigma2,
//   mixing, seed.
// Unknown keys and malformed values throw ParseError naming the line and
// field; invariant violations throw ValidationError.
ExperimentSpec parse_spec_text(const std::string& text,
                               const std::string& default_id = "setting",
                               const SpecOverrides& overrides = {});

ExperimentSpec parse_spec(const std::filesystem::path& path,
                          const SpecOverrides& overrides = {});

}  // namespace nbai
