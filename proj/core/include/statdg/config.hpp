#pragma once

#include <string>
#include <vector>

#include "statdg/field.hpp"
#include "statdg/model.hpp"
#include "statdg/solver.hpp"

namespace statdg {

// Resolved configuration for a time-domain run. Defaults: CFL 0.03 for
// acoustics and 0.4/(2K+1) for Euler; Runge-Kutta order K+1 clamped to
// [1,4], except the central flux which needs third order.
struct SolveConfig {
  std::string model = "acoustics";  // acoustics | euler
  FluxKind flux = FluxKind::upwind;
  int degree = 1;
  Grid grid{25, 25, 1.0, 1.0};
  double cfl = 0.0;      // 0 = resolve from model
  int rk_order = 0;      // 0 = resolve from degree and flux
  double t_final = 10.0;
  double cadence = 1.0;
  double eps = 1e-2;     // Euler Mach number target
  double gamma = 1.4;
  double lowmach_f = 0.1;
};

// Configuration for Fourier-space analysis.
struct AnalyzeConfig {
  FluxKind flux = FluxKind::upwind;
  int degree = 1;
  double dx = 1.0;
  double dy = 1.0;
  double svd_tol = 1e-9;
  std::vector<double> k_samples;   // values of kx dx (tensorized); empty = default
  std::vector<double> dx_ladder;   // spacings for the steady-state order fit
  double kx = 1.0;                 // wavevector for the order fit
  double ky = 0.7;
};

// Configuration for the Euler low Mach number sweep.
struct SweepCase {
  FluxKind flux = FluxKind::rusanov;
  int degree = 0;
};

struct SweepConfig {
  std::vector<SweepCase> cases;
  std::vector<double> eps_values{1e-1, 1e-2};
  Grid grid{25, 25, 1.0, 1.0};
  double t_final = 1.0;
  double cfl = 0.0;  // 0 = resolve per case from the polynomial degree
  double cadence = 0.25;
  double gamma = 1.4;
  double lowmach_f = 0.1;
};

// Command line values that take precedence over the configuration text.
struct ConfigOverrides {
  std::string flux;  // empty = keep
  int degree = -1;   // negative = keep
};

std::string read_text_file(const std::string& path);

// Parsers take JSON text ("{}" for pure defaults), reject unknown keys,
// and validate ranges.
SolveConfig parse_solve_config(const std::string& json_text,
                               const ConfigOverrides& overrides = {});
AnalyzeConfig parse_analyze_config(const std::string& json_text,
                                   const ConfigOverrides& overrides = {});
SweepConfig parse_sweep_config(const std::string& json_text,
                               const ConfigOverrides& overrides = {});

// Derived quantities.
double resolved_cfl(const SolveConfig& c);
int resolved_rk_order(const SolveConfig& c);
TimeControls time_controls(const SolveConfig& c);

}  // namespace statdg
