#include <iostream>

#include <CLI11.hpp>

#include "nbai/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Fixed-budget best-arm identification laboratory"};
  app.require_subcommand(1);

  nbai::cli::RunArgs run;
  std::uint64_t run_seed = 0;
  auto* run_cmd = app.add_subcommand("run", "run a Monte Carlo experiment");
  run_cmd->add_option("spec", run.spec_path, "experiment spec file")
      ->required()
      ->check(CLI::ExistingFile);
  run_cmd->add_option("--out", run.out_path, "CSV output path (default stdout)");
  auto* seed_opt = run_cmd->add_option("--seed", run_seed, "master seed");
  run_cmd->add_option("--workers", run.workers, "worker threads (0 = all cores)");
  run_cmd->add_option("--checkpoint-step", run.checkpoint_step)
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--trials", run.trials);
  run_cmd->add_option("--horizon", run.horizon, "override the budget T");
  run_cmd->add_flag("!--quiet", run.progress, "suppress per-cell progress");

  nbai::cli::BoundsArgs bounds;
  auto* bounds_cmd =
      app.add_subcommand("bounds", "print closed-form rates for an instance");
  bounds_cmd->add_option("--mu1", bounds.mu1)->required();
  bounds_cmd->add_option("--mu2", bounds.mu2)->required();
  bounds_cmd->add_option("--sigma1", bounds.sigma1, "standard deviation")
      ->required();
  bounds_cmd->add_option("--sigma2", bounds.sigma2, "standard deviation")
      ->required();
  bounds_cmd->add_option("--horizon", bounds.horizon,
                         "also print the Oracle error at this T");

  nbai::cli::DiagnoseArgs diag;
  auto* diag_cmd = app.add_subcommand(
      "diagnose", "martingale-difference diagnostics for NA-AIPW");
  diag_cmd->add_option("--mu1", diag.mu1)->required();
  diag_cmd->add_option("--mu2", diag.mu2)->required();
  diag_cmd->add_option("--sigma1", diag.sigma1)->required();
  diag_cmd->add_option("--sigma2", diag.sigma2)->required();
  diag_cmd->add_option("--rounds", diag.rounds);
  diag_cmd->add_option("--seed", diag.seed);
  diag_cmd->add_option("--init-rounds", diag.init_rounds);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : nbai::cli::kUsage;
  }

  if (run_cmd->parsed()) {
    if (seed_opt->count() > 0) run.seed = run_seed;
    return nbai::cli::cmd_run(run, std::cout, std::cerr);
  }
  if (bounds_cmd->parsed()) {
    return nbai::cli::cmd_bounds(bounds, std::cout, std::cerr);
  }
  return nbai::cli::cmd_diagnose(diag, std::cout, std::cerr);
}
