#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>

#include "nbai/harness.hpp"

namespace nbai {

inline constexpr const char* kCsvHeader =
    "setting_id,strategy,mu1,mu2,var_pair,T,trials,errors,p_error,"
    "rate_empirical,rate_lower_bound";

// printf %.17g.
std::string format_real(double x);

// Writes one '#' metadata line, the header, and one row per
// (result, checkpoint). Infinite empirical rates are written as empty fields.
void write_csv(std::ostream& os, const ExperimentSpec& spec,
               std::span<const AggregateResult> results);

}  // namespace nbai
