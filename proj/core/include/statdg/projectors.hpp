#pragma once

#include <Eigen/Dense>
#include <vector>

#include "statdg/kernel.hpp"

namespace statdg {

// Projector onto span(kernel_basis) that leaves the components listed in
// `indices` untouched: P = W inv(W_I) S_I with W_I the selected rows.
// Requires |indices| = dim and a well conditioned row selection.
Eigen::MatrixXcd selective_projector(const Eigen::MatrixXcd& kernel_basis,
                                     const std::vector<int>& indices,
                                     double cond_limit = 1e8);

// Spectral projector onto the span of eigenvectors with |lambda| below
// rel_tol * max |lambda|; this is the long-time limit of exp(-E t) for
// dissipative schemes. Falls back to repeated squaring of a matrix
// exponential when the eigenvector matrix is ill conditioned.
Eigen::MatrixXcd evolutionary_projector(const Eigen::MatrixXcd& E,
                                        double rel_tol = 1e-9,
                                        double cond_limit = 1e8);

// Euclidean distance of v to the span of an orthonormal kernel basis.
double distance_to_kernel(const Eigen::VectorXcd& v,
                          const Eigen::MatrixXcd& kernel_basis);

struct OrderFit {
  double slope = 0.0;
  double residual = 0.0;
};

// Least squares slope of log(d) against log(h); residual is the RMS
// deviation of the fit in log space.
OrderFit fit_loglog(const std::vector<double>& h, const std::vector<double>& d);

// Distance of the divergence-free acoustic mode Qhat = (-ky, kx, 0) to the
// kernel of the evolution matrix, over a ladder of grid spacings
// (dy = dx throughout). `exact` is set when the distances sit at round-off
// already and a slope would be meaningless.
struct StationarityOrder {
  std::vector<double> spacings;
  std::vector<double> distances;
  OrderFit fit;
  bool exact = false;
};

StationarityOrder steady_order_fit(const LinearModel& model,
                                   const FluxMatrices& flux, int degree,
                                   double kx, double ky,
                                   const std::vector<double>& spacings);

}  // namespace statdg
