#pragma once

#include <functional>
#include <vector>

#include "statdg/solver.hpp"

namespace statdg {

// L2 errors and norms of the measured variables (u, v, p) against a
// reference function, plus the conservative cell-mean sums in fixed
// row-major cell order.
DiagnosticsRow measure_state(const Solver& solver, const DGField& q,
                             const std::function<void(double, double, double*)>& ref,
                             double t);

// L2 error per model variable against a reference, cellwise 5-point rule.
std::vector<double> l2_error(const BasisSet& basis, const DGField& q,
                             const std::function<void(double, double, double*)>& ref);

// Apparent convergence order log2(err_coarse / err_fine) per column, given
// matching time series from a grid pair with refinement factor 2.
struct OrderRow {
  double t = 0.0;
  std::vector<double> order;  // u, v, p, all
};

std::vector<OrderRow> order_in_time(const std::vector<DiagnosticsRow>& coarse,
                                    const std::vector<DiagnosticsRow>& fine);

}  // namespace statdg
