#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "statdg/euler.hpp"
#include "statdg/field.hpp"
#include "statdg/model.hpp"

namespace statdg {

// Semidiscrete right hand side dq/dt = L(q), assembled cellwise with the
// fixed 5-point tensor rule for volume terms and 5-point line rule on faces.
// Each interior face flux is evaluated exactly once, so cell-mean sums
// telescope over the periodic grid.
void semidiscrete_rhs_linear(const LinearModel& model, const FluxMatrices& flux,
                             const BasisSet& basis, const DGField& q, DGField& out);

void semidiscrete_rhs_euler(const EulerModel& model, const BasisSet& basis,
                            const DGField& q, DGField& out);

// The acoustic right hand side is linear with nearest neighbor coupling, so
// it factors into five per-cell blocks. The blocks are extracted by probing
// semidiscrete_rhs_linear with unit coefficients on a 3x3 periodic grid;
// applying them reproduces the generic path to round-off.
struct LinearStencil {
  int nloc = 0;
  // Row-major nloc x 5 nloc: [center | +x | -x | +y | -y].
  std::vector<double> blocks;
};

LinearStencil compile_linear_stencil(const LinearModel& model,
                                     const FluxMatrices& flux, int degree,
                                     double dx, double dy);

void apply_linear_stencil(const LinearStencil& stencil, const DGField& q,
                          DGField& out);

// Explicit Runge-Kutta step of the requested order (1, 2, 3, 4): forward
// Euler, Heun, Kutta's third order rule, the classical fourth order rule.
using RhsFn = std::function<void(const DGField&, DGField&)>;
void rk_step(int order, DGField& q, double dt, const RhsFn& rhs);

// Stability polynomial of those schemes, for amplification checks.
std::vector<double> rk_stability_coefficients(int order);

struct TimeControls {
  double cfl = 0.03;
  int rk_order = 3;
  double t_final = 1.0;
  double cadence = 0.1;       // diagnostics output spacing in time
  double blowup_guard = 1e12; // ceiling on |coefficient|
};

struct DiagnosticsRow {
  double t = 0.0;
  std::vector<double> l2_err;    // u, v, p
  std::vector<double> norm;      // u, v, p
  std::vector<double> sum_mean;  // one per conservative variable
};

struct RunResult {
  DGField final_state;
  std::vector<DiagnosticsRow> rows;
  double dt = 0.0;
  long steps = 0;
};

class Solver {
 public:
  // Linear acoustic solver; uses the compiled stencil.
  Solver(const LinearModel& model, const FluxMatrices& flux, const Grid& grid,
         int degree);
  // Euler solver; uses the generic quadrature path.
  Solver(const EulerModel& model, const Grid& grid, int degree);

  void rhs(const DGField& q, DGField& out) const;
  double compute_dt(double cfl, const DGField& q) const;

  // Integrate to t_final; reference defaults to the initial data and is
  // evaluated pointwise as (u, v, p) for diagnostics. Initial data and
  // reference take physical coordinates and fill nvars values.
  RunResult run(const std::function<void(double, double, double*)>& initial,
                const TimeControls& controls,
                const std::function<void(double, double, double*)>* reference =
                    nullptr) const;

  const BasisSet& basis() const { return basis_; }
  const Grid& grid() const { return grid_; }
  int nvars() const { return nvars_; }
  bool is_euler() const { return euler_.has_value(); }
  const EulerModel& euler_model() const { return *euler_; }

  // (u, v, p) samples of a state for diagnostics; identity for acoustics,
  // primitive velocity and pressure for Euler.
  void measured_vars(const double* state, double* out) const;

 private:
  Grid grid_;
  BasisSet basis_;
  int nvars_;
  std::optional<LinearModel> linear_;
  std::optional<FluxMatrices> linear_flux_;
  std::optional<LinearStencil> stencil_;
  std::optional<EulerModel> euler_;
};

}  // namespace statdg
