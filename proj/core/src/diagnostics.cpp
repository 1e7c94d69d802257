#include "statdg/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

#include "statdg/errors.hpp"

namespace statdg {

DiagnosticsRow measure_state(const Solver& solver, const DGField& q,
                             const std::function<void(double, double, double*)>& ref,
                             double t) {
  const Grid& grid = q.grid();
  const BasisSet& basis = solver.basis();
  const QuadratureRule& rule = gauss5();
  const int ng = rule.size();
  const int m = q.nvars();
  const double cell_area = grid.dx() * grid.dy();

  DiagnosticsRow row;
  row.t = t;
  row.l2_err.assign(3, 0.0);
  row.norm.assign(3, 0.0);
  row.sum_mean.assign(m, 0.0);

  std::vector<double> state(m), rv(m);
  double meas[3], meas_ref[3];
  for (int i = 0; i < grid.nx; ++i) {
    for (int j = 0; j < grid.ny; ++j) {
      for (int g = 0; g < ng; ++g) {
        for (int h = 0; h < ng; ++h) {
          q.eval(basis, i, j, rule.nodes[g], rule.nodes[h], state.data());
          double x = grid.xc(i) + grid.dx() * rule.nodes[g];
          double y = grid.yc(j) + grid.dy() * rule.nodes[h];
          ref(x, y, rv.data());
          solver.measured_vars(state.data(), meas);
          solver.measured_vars(rv.data(), meas_ref);
          double w = rule.weights[g] * rule.weights[h] * cell_area;
          for (int v = 0; v < 3; ++v) {
            double d = meas[v] - meas_ref[v];
            row.l2_err[v] += w * d * d;
            row.norm[v] += w * meas[v] * meas[v];
          }
        }
      }
      for (int var = 0; var < m; ++var) row.sum_mean[var] += q.mean(i, j, var);
    }
  }
  for (int v = 0; v < 3; ++v) {
    row.l2_err[v] = std::sqrt(row.l2_err[v]);
    row.norm[v] = std::sqrt(row.norm[v]);
  }
  return row;
}

std::vector<double> l2_error(const BasisSet& basis, const DGField& q,
                             const std::function<void(double, double, double*)>& ref) {
  const Grid& grid = q.grid();
  const QuadratureRule& rule = gauss5();
  const int ng = rule.size();
  const int m = q.nvars();
  const double cell_area = grid.dx() * grid.dy();
  std::vector<double> err(m, 0.0), state(m), rv(m);
  for (int i = 0; i < grid.nx; ++i) {
    for (int j = 0; j < grid.ny; ++j) {
      for (int g = 0; g < ng; ++g) {
        for (int h = 0; h < ng; ++h) {
          q.eval(basis, i, j, rule.nodes[g], rule.nodes[h], state.data());
          double x = grid.xc(i) + grid.dx() * rule.nodes[g];
          double y = grid.yc(j) + grid.dy() * rule.nodes[h];
          ref(x, y, rv.data());
          double w = rule.weights[g] * rule.weights[h] * cell_area;
          for (int v = 0; v < m; ++v) {
            double d = state[v] - rv[v];
            err[v] += w * d * d;
          }
        }
      }
    }
  }
  for (int v = 0; v < m; ++v) err[v] = std::sqrt(err[v]);
  return err;
}

std::vector<OrderRow> order_in_time(const std::vector<DiagnosticsRow>& coarse,
                                    const std::vector<DiagnosticsRow>& fine) {
  if (coarse.size() != fine.size()) {
    throw NumericalError("diagnostic series length mismatch between grids");
  }
  std::vector<OrderRow> rows;
  rows.reserve(coarse.size());
  for (size_t r = 0; r < coarse.size(); ++r) {
    OrderRow row;
    row.t = coarse[r].t;
    row.order.assign(4, 0.0);
    double c_all = 0.0, f_all = 0.0;
    for (int v = 0; v < 3; ++v) {
      double c = coarse[r].l2_err[v], f = fine[r].l2_err[v];
      row.order[v] = std::log2(c / f);
      c_all += c * c;
      f_all += f * f;
    }
    row.order[3] = 0.5 * std::log2(c_all / f_all);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace statdg
