#include "nbai/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "nbai/csv.hpp"
#include "nbai/error.hpp"
#include "nbai/harness.hpp"
#include "nbai/spec_file.hpp"
#include "nbai/theory.hpp"

namespace nbai::cli {

namespace {

int report(const Error& e, std::ostream& err) {
  err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
  switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::ValidationError:
    case ErrorCode::EqualMeans:
    case ErrorCode::NonPositiveSigma:
    case ErrorCode::NonPositiveVariance:
      return kUsage;
    default:
      return kRuntime;
  }
}

}  // namespace

int cmd_run(const RunArgs& args, std::ostream& out, std::ostream& err) {
  try {
    SpecOverrides ov;
    ov.trials = args.trials;
    ov.horizon = args.horizon;
    ov.checkpoint_step = args.checkpoint_step;
    ov.master_seed = args.seed;
    const ExperimentSpec spec = parse_spec(args.spec_path, ov);

    RunOptions opts;
    opts.workers = args.workers;
    if (args.progress) {
      opts.on_cell_done = [&err, &spec](std::size_t done, std::size_t total) {
        err << spec.setting_id << ": cell " << done << "/" << total
            << " done\n";
      };
    }
    const auto results = run_experiment(spec, opts);

    std::ostringstream csv;
    write_csv(csv, spec, results);
    if (args.out_path.empty()) {
      out << csv.str();
      out.flush();
    } else {
      std::ofstream f(args.out_path, std::ios::binary | std::ios::trunc);
      if (!f || !(f << csv.str()) || !f.flush()) {
        err << "error: cannot write " << args.out_path << '\n';
        return kRuntime;
      }
    }
    return kOk;
  } catch (const Error& e) {
    return report(e, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntime;
  }
}

int cmd_bounds(const BoundsArgs& args, std::ostream& out, std::ostream& err) {
  try {
    if (!(args.sigma1 > 0.0) || !(args.sigma2 > 0.0)) {
      throw Error(ErrorCode::NonPositiveSigma, "sigmas must be positive");
    }
    const BanditInstance inst{args.mu1, args.mu2, args.sigma1 * args.sigma1,
                              args.sigma2 * args.sigma2};
    const ArmId best = best_arm(inst);
    const RateReport r = rate_report(inst);
    out << "best_arm " << arm_number(best) << '\n'
        << "delta " << format_real(r.delta) << '\n'
        << "w_star " << format_real(r.w_star[0]) << ' '
        << format_real(r.w_star[1]) << '\n'
        << "v_aipw " << format_real(r.v_aipw) << '\n'
        << "zeta " << format_real(r.zeta[0]) << ' ' << format_real(r.zeta[1])
        << '\n'
        << "rate_lower_bound " << format_real(r.rate_lower_bound) << '\n'
        << "rate_ipw " << format_real(r.rate_ipw) << '\n';
    if (args.horizon) {
      if (*args.horizon < 1) {
        throw Error(ErrorCode::ValidationError, "horizon must be positive");
      }
      out << "oracle_error T=" << *args.horizon << ' '
          << format_real(oracle_exact_error(std::abs(r.delta), args.sigma1,
                                            args.sigma2, *args.horizon))
          << '\n';
    }
    return kOk;
  } catch (const Error& e) {
    return report(e, err);
  }
}

double diagnose_mean_tolerance(std::int64_t rounds_used) {
  return std::max(0.02, 4.0 / std::sqrt(static_cast<double>(rounds_used)));
}

int cmd_diagnose(const DiagnoseArgs& args, std::ostream& out,
                 std::ostream& err) {
  try {
    if (!(args.sigma1 > 0.0) || !(args.sigma2 > 0.0)) {
      throw Error(ErrorCode::NonPositiveSigma, "sigmas must be positive");
    }
    const BanditInstance inst{args.mu1, args.mu2, args.sigma1 * args.sigma1,
                              args.sigma2 * args.sigma2};
    best_arm(inst);
    ExperimentConfig cfg;
    cfg.init_rounds = args.init_rounds;
    const MdsDiagnostic d = mds_diagnostic(inst, cfg, args.rounds, args.seed);
    const double tol = diagnose_mean_tolerance(d.rounds_used);
    const bool mean_ok = std::abs(d.mean) <= tol;
    const bool m2_ok =
        d.second_moment >= kSecondMomentLo && d.second_moment <= kSecondMomentHi;
    out << "rounds_used " << d.rounds_used << '\n'
        << "mean_psi " << format_real(d.mean) << '\n'
        << "second_moment " << format_real(d.second_moment) << '\n'
        << "mean_check |mean| <= " << format_real(tol) << ' '
        << (mean_ok ? "PASS" : "FAIL") << '\n'
        << "second_moment_check in [" << kSecondMomentLo << ", "
        << kSecondMomentHi << "] " << (m2_ok ? "PASS" : "FAIL") << '\n';
    return kOk;
  } catch (const Error& e) {
    return report(e, err);
  }
}

}  // namespace nbai::cli
