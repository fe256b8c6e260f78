// tailforge: exact entropy-inequality checks and Monte Carlo eigenvalue
// tail verification for bounded-entry random matrices.

#include <CLI11.hpp>
#include <exception>
#include <iostream>

#include "cli.hpp"
#include "tailforge/errors.hpp"

namespace {

void add_common(CLI::App* cmd, tailforge::cli::CommonOptions& common, bool with_workers = false) {
  cmd->add_option("--config", common.config_path, "TOML or JSON config file");
  cmd->add_option("--out", common.out_path, "Output path (base path when both formats are written)");
  cmd->add_option("--format", common.format, "Output format: csv or json (default: both)")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--seed", common.seed, "Base seed (overrides the config value)");
  if (with_workers) {
    cmd->add_option("--workers", common.workers, "Worker threads (0 = hardware concurrency)")
        ->envname("TAILFORGE_WORKERS");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entropy-method tail bound verification toolkit"};
  app.require_subcommand(1);

  tailforge::cli::EntropyCheckOptions entropy_options;
  auto* entropy_cmd = app.add_subcommand(
      "entropy-check", "Tensorization, log-Sobolev, and Herbst checks on function tables");
  add_common(entropy_cmd, entropy_options.common);
  entropy_cmd->add_option("--input", entropy_options.input_path, "Function table JSON file");
  entropy_cmd->add_option("--random", entropy_options.random_tables,
                          "Check N randomized tables instead of an input file");
  entropy_cmd->add_option("--max-coords", entropy_options.max_coords,
                          "Max coordinates for random tables");
  entropy_cmd->add_option("--max-points", entropy_options.max_points,
                          "Max points per coordinate for random tables");

  tailforge::cli::DeltaOptions delta_options;
  auto* delta_cmd =
      app.add_subcommand("delta", "Coordinate perturbations, Delta^2, and the tail bound curve");
  add_common(delta_cmd, delta_options.common);
  delta_cmd->add_option("--input", delta_options.input_path, "Function table JSON file");
  delta_cmd->add_option("--choice", delta_options.choice, "Perturbation choice: maurer or left")
      ->check(CLI::IsMember({"maurer", "left"}));

  tailforge::cli::SimulateOptions simulate_options;
  auto* simulate_cmd = app.add_subcommand(
      "simulate", "Monte Carlo eigenvalue tails against the closed-form bounds");
  add_common(simulate_cmd, simulate_options.common, /*with_workers=*/true);

  tailforge::cli::MpCheckOptions mp_options;
  auto* mp_cmd = app.add_subcommand(
      "mp-check", "Empirical spectral distribution against the Marchenko-Pastur law");
  add_common(mp_cmd, mp_options.common);
  mp_cmd->add_option("--spectra-out", mp_options.spectra_out,
                     "Also write the pooled spectra as CSV (sample_index, k, lambda)");

  auto* print_cmd = app.add_subcommand("print-config", "Print the default TOML configuration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (entropy_cmd->parsed()) return tailforge::cli::run_entropy_check(entropy_options);
    if (delta_cmd->parsed()) return tailforge::cli::run_delta(delta_options);
    if (simulate_cmd->parsed()) return tailforge::cli::run_simulate(simulate_options);
    if (mp_cmd->parsed()) return tailforge::cli::run_mp_check(mp_options);
    if (print_cmd->parsed()) return tailforge::cli::run_print_config();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
