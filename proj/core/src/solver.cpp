#include "statdg/solver.hpp"

#include <algorithm>
#include <cmath>

#include "statdg/diagnostics.hpp"
#include "statdg/errors.hpp"

namespace statdg {

namespace {

constexpr int kMaxVars = 4;

struct LinearPolicy {
  const LinearModel& model;
  const FluxMatrices& flux;

  int m() const { return model.m; }
  void phys(int dir, const double* q, double* out) const {
    const std::vector<double>& J = (dir == 0) ? model.Jx : model.Jy;
    int mm = model.m;
    for (int a = 0; a < mm; ++a) {
      double acc = 0.0;
      for (int b = 0; b < mm; ++b) acc += J[a * mm + b] * q[b];
      out[a] = acc;
    }
  }
  void num(int dir, const double* qL, const double* qR, double* out) const {
    numerical_flux_linear(model, flux, dir, qL, qR, out);
  }
};

struct EulerPolicy {
  const EulerModel& model;

  int m() const { return 4; }
  void phys(int dir, const double* q, double* out) const {
    euler_flux(model, dir, {q[0], q[1], q[2], q[3]}, out);
  }
  void num(int dir, const double* qL, const double* qR, double* out) const {
    numerical_flux_euler(model, dir, {qL[0], qL[1], qL[2], qL[3]},
                         {qR[0], qR[1], qR[2], qR[3]}, out);
  }
};

template <class Policy>
void assemble_rhs(const Policy& policy, const BasisSet& basis, const DGField& q,
                  DGField& out) {
  const Grid& grid = q.grid();
  const QuadratureRule& rule = gauss5();
  const int n = basis.size();
  const int ng = rule.size();
  const int m = policy.m();
  const std::vector<std::vector<double>> B = basis.values_at(rule);
  const std::vector<std::vector<double>> Bp = basis.derivs_at(rule);
  const double inv_dx = 1.0 / grid.dx();
  const double inv_dy = 1.0 / grid.dy();

  std::fill(out.data().begin(), out.data().end(), 0.0);

  std::vector<double> qnode(static_cast<size_t>(ng) * ng * m);
  std::vector<double> tmp(static_cast<size_t>(n) * ng);
  double fx[kMaxVars], fy[kMaxVars];

  for (int i = 0; i < grid.nx; ++i) {
    for (int j = 0; j < grid.ny; ++j) {
      const double* c = q.cell(i, j);
      double* o = out.cell(i, j);
      // Tensor contraction to quadrature nodes, one variable at a time.
      for (int var = 0; var < m; ++var) {
        for (int a = 0; a < n; ++a) {
          for (int h = 0; h < ng; ++h) {
            double acc = 0.0;
            for (int b = 0; b < n; ++b) acc += c[(var * n + a) * n + b] * B[b][h];
            tmp[a * ng + h] = acc;
          }
        }
        for (int g = 0; g < ng; ++g) {
          for (int h = 0; h < ng; ++h) {
            double acc = 0.0;
            for (int a = 0; a < n; ++a) acc += tmp[a * ng + h] * B[a][g];
            qnode[(g * ng + h) * m + var] = acc;
          }
        }
      }
      try {
        for (int g = 0; g < ng; ++g) {
          for (int h = 0; h < ng; ++h) {
            const double* qc = qnode.data() + (g * ng + h) * m;
            policy.phys(0, qc, fx);
            policy.phys(1, qc, fy);
            const double w = rule.weights[g] * rule.weights[h];
            for (int var = 0; var < m; ++var) {
              const double wx = w * inv_dx * fx[var];
              const double wy = w * inv_dy * fy[var];
              for (int k = 0; k < n; ++k) {
                for (int l = 0; l < n; ++l) {
                  o[(var * n + k) * n + l] += wx * Bp[k][g] * B[l][h] + wy * B[k][g] * Bp[l][h];
                }
              }
            }
          }
        }
      } catch (StateError& e) {
        throw StateError(e.what(), i, j);
      }
    }
  }

  double qL[kMaxVars], qR[kMaxVars], F[kMaxVars];

  // x faces: between (i, j) and (i+1 mod nx, j); each flux evaluated once.
  for (int i = 0; i < grid.nx; ++i) {
    const int ir = (i + 1) % grid.nx;
    for (int j = 0; j < grid.ny; ++j) {
      const double* cL = q.cell(i, j);
      const double* cR = q.cell(ir, j);
      double* oL = out.cell(i, j);
      double* oR = out.cell(ir, j);
      for (int h = 0; h < ng; ++h) {
        for (int var = 0; var < m; ++var) {
          double accL = 0.0, accR = 0.0;
          for (int a = 0; a < n; ++a) {
            const double ta = basis.trace_right(a), tb = basis.trace_left(a);
            for (int b = 0; b < n; ++b) {
              accL += cL[(var * n + a) * n + b] * ta * B[b][h];
              accR += cR[(var * n + a) * n + b] * tb * B[b][h];
            }
          }
          qL[var] = accL;
          qR[var] = accR;
        }
        try {
          policy.num(0, qL, qR, F);
        } catch (StateError& e) {
          throw StateError(e.what(), i, j);
        }
        const double wh = rule.weights[h];
        for (int var = 0; var < m; ++var) {
          const double base = inv_dx * wh * F[var];
          for (int k = 0; k < n; ++k) {
            const double fr = basis.trace_right(k) * base;
            const double fl = basis.trace_left(k) * base;
            for (int l = 0; l < n; ++l) {
              oL[(var * n + k) * n + l] -= fr * B[l][h];
              oR[(var * n + k) * n + l] += fl * B[l][h];
            }
          }
        }
      }
    }
  }

  // y faces: between (i, j) and (i, j+1 mod ny).
  for (int i = 0; i < grid.nx; ++i) {
    for (int j = 0; j < grid.ny; ++j) {
      const int jr = (j + 1) % grid.ny;
      const double* cL = q.cell(i, j);
      const double* cR = q.cell(i, jr);
      double* oL = out.cell(i, j);
      double* oR = out.cell(i, jr);
      for (int g = 0; g < ng; ++g) {
        for (int var = 0; var < m; ++var) {
          double accL = 0.0, accR = 0.0;
          for (int a = 0; a < n; ++a) {
            const double ba = B[a][g];
            for (int b = 0; b < n; ++b) {
              accL += cL[(var * n + a) * n + b] * ba * basis.trace_right(b);
              accR += cR[(var * n + a) * n + b] * ba * basis.trace_left(b);
            }
          }
          qL[var] = accL;
          qR[var] = accR;
        }
        try {
          policy.num(1, qL, qR, F);
        } catch (StateError& e) {
          throw StateError(e.what(), i, j);
        }
        const double wg = rule.weights[g];
        for (int var = 0; var < m; ++var) {
          const double base = inv_dy * wg * F[var];
          for (int k = 0; k < n; ++k) {
            const double bk = B[k][g] * base;
            for (int l = 0; l < n; ++l) {
              oL[(var * n + k) * n + l] -= bk * basis.trace_right(l);
              oR[(var * n + k) * n + l] += bk * basis.trace_left(l);
            }
          }
        }
      }
    }
  }
}

}  // namespace

void semidiscrete_rhs_linear(const LinearModel& model, const FluxMatrices& flux,
                             const BasisSet& basis, const DGField& q, DGField& out) {
  assemble_rhs(LinearPolicy{model, flux}, basis, q, out);
}

void semidiscrete_rhs_euler(const EulerModel& model, const BasisSet& basis,
                            const DGField& q, DGField& out) {
  assemble_rhs(EulerPolicy{model}, basis, q, out);
}

LinearStencil compile_linear_stencil(const LinearModel& model,
                                     const FluxMatrices& flux, int degree,
                                     double dx, double dy) {
  Grid probe;
  probe.nx = 3;
  probe.ny = 3;
  probe.lx = 3.0 * dx;
  probe.ly = 3.0 * dy;
  BasisSet basis(degree);
  const int n = degree + 1;
  const int nloc = model.m * n * n;

  LinearStencil st;
  st.nloc = nloc;
  st.blocks.assign(static_cast<size_t>(nloc) * 5 * nloc, 0.0);

  DGField unit(probe, degree, model.m);
  DGField resp(probe, degree, model.m);
  // Response of each neighbor of the source cell (1,1) gives one block
  // column; (0,1) sees the source as its +x neighbor, and so on.
  const int cells[5][2] = {{1, 1}, {0, 1}, {2, 1}, {1, 0}, {1, 2}};
  for (int src = 0; src < nloc; ++src) {
    std::fill(unit.data().begin(), unit.data().end(), 0.0);
    unit.cell(1, 1)[src] = 1.0;
    semidiscrete_rhs_linear(model, flux, basis, unit, resp);
    for (int blk = 0; blk < 5; ++blk) {
      const double* r = resp.cell(cells[blk][0], cells[blk][1]);
      for (int row = 0; row < nloc; ++row) {
        st.blocks[row * (5 * nloc) + blk * nloc + src] = r[row];
      }
    }
  }
  return st;
}

void apply_linear_stencil(const LinearStencil& stencil, const DGField& q,
                          DGField& out) {
  const Grid& grid = q.grid();
  const int nloc = stencil.nloc;
  const int w = 5 * nloc;
  std::vector<double> gathered(w);
  for (int i = 0; i < grid.nx; ++i) {
    const int ip = (i + 1) % grid.nx;
    const int im = (i + grid.nx - 1) % grid.nx;
    for (int j = 0; j < grid.ny; ++j) {
      const int jp = (j + 1) % grid.ny;
      const int jm = (j + grid.ny - 1) % grid.ny;
      const double* src[5] = {q.cell(i, j), q.cell(ip, j), q.cell(im, j),
                              q.cell(i, jp), q.cell(i, jm)};
      for (int blk = 0; blk < 5; ++blk) {
        std::copy(src[blk], src[blk] + nloc, gathered.data() + blk * nloc);
      }
      double* o = out.cell(i, j);
      const double* S = stencil.blocks.data();
      for (int row = 0; row < nloc; ++row) {
        double acc = 0.0;
        const double* srow = S + static_cast<size_t>(row) * w;
        for (int col = 0; col < w; ++col) acc += srow[col] * gathered[col];
        o[row] = acc;
      }
    }
  }
}

void rk_step(int order, DGField& q, double dt, const RhsFn& rhs) {
  const size_t ndof = q.data().size();
  auto axpy = [ndof](DGField& y, double a, const DGField& x) {
    double* yd = y.data().data();
    const double* xd = x.data().data();
    for (size_t idx = 0; idx < ndof; ++idx) yd[idx] += a * xd[idx];
  };

  DGField k1 = q;
  rhs(q, k1);
  switch (order) {
    case 1: {
      axpy(q, dt, k1);
      return;
    }
    case 2: {
      DGField u1 = q;
      axpy(u1, dt, k1);
      DGField k2 = q;
      rhs(u1, k2);
      axpy(q, 0.5 * dt, k1);
      axpy(q, 0.5 * dt, k2);
      return;
    }
    case 3: {
      DGField u1 = q;
      axpy(u1, 0.5 * dt, k1);
      DGField k2 = q;
      rhs(u1, k2);
      DGField u2 = q;
      axpy(u2, -dt, k1);
      axpy(u2, 2.0 * dt, k2);
      DGField k3 = q;
      rhs(u2, k3);
      axpy(q, dt / 6.0, k1);
      axpy(q, 4.0 * dt / 6.0, k2);
      axpy(q, dt / 6.0, k3);
      return;
    }
    case 4: {
      DGField u = q;
      axpy(u, 0.5 * dt, k1);
      DGField k2 = q;
      rhs(u, k2);
      u = q;
      axpy(u, 0.5 * dt, k2);
      DGField k3 = q;
      rhs(u, k3);
      u = q;
      axpy(u, dt, k3);
      DGField k4 = q;
      rhs(u, k4);
      axpy(q, dt / 6.0, k1);
      axpy(q, dt / 3.0, k2);
      axpy(q, dt / 3.0, k3);
      axpy(q, dt / 6.0, k4);
      return;
    }
    default:
      throw ConfigError("rk order must be 1..4");
  }
}

std::vector<double> rk_stability_coefficients(int order) {
  if (order < 1 || order > 4) throw ConfigError("rk order must be 1..4");
  std::vector<double> c = {1.0};
  double fact = 1.0;
  for (int p = 1; p <= order; ++p) {
    fact *= p;
    c.push_back(1.0 / fact);
  }
  return c;
}

Solver::Solver(const LinearModel& model, const FluxMatrices& flux, const Grid& grid,
               int degree)
    : grid_(grid),
      basis_(degree),
      nvars_(model.m),
      linear_(model),
      linear_flux_(flux) {
  stencil_ = compile_linear_stencil(model, flux, degree, grid.dx(), grid.dy());
}

Solver::Solver(const EulerModel& model, const Grid& grid, int degree)
    : grid_(grid), basis_(degree), nvars_(4), euler_(model) {}

void Solver::rhs(const DGField& q, DGField& out) const {
  if (stencil_) {
    apply_linear_stencil(*stencil_, q, out);
  } else {
    semidiscrete_rhs_euler(*euler_, basis_, q, out);
  }
}

double Solver::compute_dt(double cfl, const DGField& q) const {
  const double h = std::min(grid_.dx(), grid_.dy());
  if (!euler_) return cfl * h;  // acoustic signal speed is 1

  const QuadratureRule& rule = gauss5();
  const int ng = rule.size();
  double lam = 0.0;
  double vals[kMaxVars];
  for (int i = 0; i < grid_.nx; ++i) {
    for (int j = 0; j < grid_.ny; ++j) {
      for (int g = 0; g < ng; ++g) {
        for (int h2 = 0; h2 < ng; ++h2) {
          q.eval(basis_, i, j, rule.nodes[g], rule.nodes[h2], vals);
          State4 s{vals[0], vals[1], vals[2], vals[3]};
          try {
            lam = std::max(lam, std::max(max_signal_speed(*euler_, 0, s),
                                         max_signal_speed(*euler_, 1, s)));
          } catch (StateError& e) {
            throw StateError(e.what(), i, j);
          }
        }
      }
    }
  }
  if (lam <= 0.0) throw NumericalError("vanishing signal speed");
  return cfl * h / lam;
}

void Solver::measured_vars(const double* state, double* out) const {
  if (!euler_) {
    for (int v = 0; v < 3; ++v) out[v] = state[v];
    return;
  }
  State4 prim = cons_to_prim(*euler_, {state[0], state[1], state[2], state[3]});
  out[0] = prim[1];
  out[1] = prim[2];
  out[2] = prim[3];
}

RunResult Solver::run(const std::function<void(double, double, double*)>& initial,
                      const TimeControls& controls,
                      const std::function<void(double, double, double*)>* reference) const {
  DGField q = project_to_dg(grid_, basis_.degree(), nvars_, initial);
  const auto& ref = reference ? *reference : initial;

  RunResult result;
  result.rows.push_back(measure_state(*this, q, ref, 0.0));

  const double dt_fixed = euler_ ? 0.0 : compute_dt(controls.cfl, q);
  double t = 0.0;
  long steps = 0;
  double next_emit = controls.cadence;
  const double t_end = controls.t_final;

  RhsFn f = [this](const DGField& a, DGField& b) { rhs(a, b); };

  while (t < t_end - 1e-12 * std::max(1.0, t_end)) {
    double dt = euler_ ? compute_dt(controls.cfl, q) : dt_fixed;
    if (t + dt > t_end) dt = t_end - t;
    rk_step(controls.rk_order, q, dt, f);
    t += dt;
    ++steps;
    result.dt = dt;

    double peak = 0.0;
    for (double c : q.data()) peak = std::max(peak, std::abs(c));
    if (!(peak < controls.blowup_guard)) {
      throw NumericalError("solution blew up: max |coefficient| = " +
                           std::to_string(peak) + " at t = " + std::to_string(t) +
                           " after " + std::to_string(steps) + " steps");
    }

    if (t >= next_emit - 1e-10 || t >= t_end - 1e-12) {
      result.rows.push_back(measure_state(*this, q, ref, t));
      while (next_emit <= t + 1e-10) next_emit += controls.cadence;
    }
  }

  result.final_state = std::move(q);
  result.steps = steps;
  return result;
}

}  // namespace statdg
