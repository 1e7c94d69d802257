#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "statdg/basis.hpp"
#include "statdg/model.hpp"

namespace statdg {

// Numerical kernel of one evolution matrix. sigmas are all singular values
// in descending order; basis columns are an orthonormal kernel basis.
// The split between kept and discarded singular values must be clean: if
// the discarded block is not separated from the kept one by three orders of
// magnitude, the sample is flagged ambiguous.
struct KernelSample {
  double kx = 0.0;
  double ky = 0.0;
  int dim = 0;
  bool ambiguous = false;
  std::vector<double> sigmas;
  Eigen::MatrixXcd basis;
};

// With refined = true the SVD runs in extended precision. The kernel basis
// of a plain double SVD is only accurate to eps / gap, where the spectral
// gap closes like |t - 1| as k dx -> 0; refinement keeps the basis usable
// on fine spacing ladders where that error would dominate the distances.
KernelSample null_space(const Eigen::MatrixXcd& E, double rel_tol = 1e-9,
                        bool refined = false);

// Relative residual of a candidate kernel vector.
double kernel_residual(const Eigen::MatrixXcd& E, const Eigen::VectorXcd& w);

struct KernelSweep {
  FluxKind flux = FluxKind::upwind;
  int degree = 0;
  std::vector<KernelSample> samples;
  int min_dim = 0;
  int max_dim = 0;
  std::string verdict;
};

// Default sampling: 8 x 8 tensor grid with kx dx and ky dy evenly spaced
// in [0.3, 2.9].
std::vector<std::pair<double, double>> default_k_samples(double dx, double dy);

KernelSweep kernel_dim_sweep(const LinearModel& model, const FluxMatrices& flux,
                             int degree, double dx, double dy,
                             const std::vector<std::pair<double, double>>& ks = {},
                             double rel_tol = 1e-9);

}  // namespace statdg
