#include "nbai/csv.hpp"

#include <cmath>
#include <cstdio>

#include "nbai/theory.hpp"

#ifndef NBAI_BUILD_ID
#define NBAI_BUILD_ID "unknown"
#endif

namespace nbai {

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

double cell_lower_bound_rate(const Cell& cell) {
  double s_lo = cell.pair.lo;
  double s_hi = cell.pair.hi;
  if (cell.pair_values == PairValues::Variances) {
    s_lo = std::sqrt(s_lo);
    s_hi = std::sqrt(s_hi);
  }
  return lower_bound_rate(cell.mu1 - cell.mu2, s_lo, s_hi);
}

}  // namespace

void write_csv(std::ostream& os, const ExperimentSpec& spec,
               std::span<const AggregateResult> results) {
  os << "# build=" << NBAI_BUILD_ID << " seed=" << spec.config.master_seed
     << " generator=" << kGeneratorName << " pair_values="
     << (spec.pair_values == PairValues::Variances ? "variances" : "std_devs")
     << '\n';
  os << kCsvHeader << '\n';
  for (const AggregateResult& r : results) {
    const std::string var_pair =
        format_real(r.cell.pair.lo) + ":" + format_real(r.cell.pair.hi);
    const std::string lb = format_real(cell_lower_bound_rate(r.cell));
    for (std::size_t k = 0; k < r.checkpoints.size(); ++k) {
      const double p = r.p_error(k);
      const double rate = empirical_rate(p, r.checkpoints[k]);
      os << spec.setting_id << ',' << strategy_name(r.strategy) << ','
         << format_real(r.cell.mu1) << ',' << format_real(r.cell.mu2) << ','
         << var_pair << ',' << r.checkpoints[k] << ',' << r.trials << ','
         << r.error_counts[k] << ',' << format_real(p) << ','
         << (std::isinf(rate) ? std::string() : format_real(rate)) << ','
         << lb << '\n';
    }
  }
}

}  // namespace nbai
