#pragma once

#include <iosfwd>
#include <string>

#include "statdg/config.hpp"

namespace statdg {

// Parsed command line. `flux_override` and `degree_override` take
// precedence over the config file.
struct CliOptions {
  std::string command;            // solve | analyze | convergence | sweep-euler
  std::string config_path;        // --config
  std::string out_dir = ".";      // --out
  std::string fixtures_path;      // --fixtures-file (defaults to the bundled set)
  bool fixtures = false;          // --fixtures (analyze only)
  bool dry_run = false;           // --dry-run (solve only)
  std::string flux_override;      // --flux
  int degree_override = -1;       // --K
};

// Exit codes: 0 success, 1 configuration error, 2 numerical error, 3 IO
// error. Messages go to `err`; results and file names go to `out`.
int run_cli(const CliOptions& opts, std::ostream& out, std::ostream& err);

int cmd_solve(const SolveConfig& config, const std::string& out_dir, bool dry_run,
              std::ostream& out);
int cmd_analyze(const AnalyzeConfig& config, const std::string& out_dir,
                std::ostream& out);
int cmd_fixtures(const std::string& fixtures_path, std::ostream& out);
int cmd_convergence(const SolveConfig& config, const std::string& out_dir,
                    std::ostream& out);
int cmd_sweep_euler(const SweepConfig& config, const std::string& out_dir,
                    std::ostream& out);

}  // namespace statdg
