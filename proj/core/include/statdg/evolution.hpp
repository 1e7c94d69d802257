#pragma once

#include <Eigen/Dense>
#include <complex>

#include "statdg/basis.hpp"
#include "statdg/model.hpp"

namespace statdg {

// The semidiscrete scheme couples nearest neighbors only, so its Fourier
// symbol splits into five real shift blocks:
//   E(tx, ty) = center + px tx + mx / tx + py ty + my / ty,
// tx = exp(i kx dx), ty = exp(i ky dy). Matrices act on coefficient
// vectors ordered var (K+1)^2 + a (K+1) + b, and dq/dt + E q = 0.
struct ShiftBlocks {
  int nloc = 0;
  Eigen::MatrixXd center, px, mx, py, my;
};

ShiftBlocks evolution_blocks(const LinearModel& model, const FluxMatrices& flux,
                             const BasisSet& basis, double dx, double dy);

Eigen::MatrixXcd evolution_matrix(const ShiftBlocks& blocks,
                                  std::complex<double> tx,
                                  std::complex<double> ty);

// Convenience assembly straight from wavenumbers.
Eigen::MatrixXcd assemble_evolution_matrix(const LinearModel& model,
                                           const FluxMatrices& flux,
                                           const BasisSet& basis, double kx,
                                           double ky, double dx, double dy);

}  // namespace statdg
