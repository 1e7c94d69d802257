#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "statdg/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Discontinuous Galerkin stationarity analysis and solver"};
  app.require_subcommand(1);

  statdg::CliOptions opts;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", opts.config_path, "JSON configuration file");
    cmd->add_option("--out", opts.out_dir, "output directory (default '.')");
    cmd->add_option("--flux", opts.flux_override,
                    "flux kind (upwind|rusanov|central|lowmach|roe)");
    cmd->add_option("--K", opts.degree_override, "polynomial degree")
        ->check(CLI::Range(0, 6));
  };

  CLI::App* solve = app.add_subcommand("solve", "run one time-domain simulation");
  add_common(solve);
  solve->add_flag("--dry-run", opts.dry_run,
                  "print the resolved configuration and step count, then exit");

  CLI::App* analyze =
      app.add_subcommand("analyze", "kernel dimensions and steady-state order");
  add_common(analyze);
  analyze->add_flag("--fixtures", opts.fixtures,
                    "verify the bundled reference kernel vectors instead");
  analyze->add_option("--fixtures-file", opts.fixtures_path,
                      "alternative kernel fixture file");

  CLI::App* convergence =
      app.add_subcommand("convergence", "order-in-time curve from a grid pair");
  add_common(convergence);

  CLI::App* sweep =
      app.add_subcommand("sweep-euler", "Gresho vortex sweep over flux, degree, Mach");
  add_common(sweep);

  CLI11_PARSE(app, argc, argv);

  for (CLI::App* cmd : {solve, analyze, convergence, sweep}) {
    if (cmd->parsed()) {
      opts.command = cmd->get_name();
      break;
    }
  }
  return statdg::run_cli(opts, std::cout, std::cerr);
}
