#include "statdg/projectors.hpp"

#include <unsupported/Eigen/MatrixFunctions>
#include <cmath>

#include "statdg/dofhat.hpp"
#include "statdg/errors.hpp"
#include "statdg/evolution.hpp"

namespace statdg {

Eigen::MatrixXcd selective_projector(const Eigen::MatrixXcd& kernel_basis,
                                     const std::vector<int>& indices,
                                     double cond_limit) {
  const int n = static_cast<int>(kernel_basis.rows());
  const int d = static_cast<int>(kernel_basis.cols());
  if (static_cast<int>(indices.size()) != d) {
    throw NumericalError("selective projector needs one index per kernel vector");
  }
  Eigen::MatrixXcd WI(d, d);
  for (int r = 0; r < d; ++r) WI.row(r) = kernel_basis.row(indices[r]);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(WI, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (!(sv[d - 1] > 0.0) || sv[0] / sv[d - 1] > cond_limit) {
    throw NumericalError("selected components do not control the kernel");
  }
  // P column j: contribution of component indices[j]. P = W inv(WI) S_I
  // where S_I selects the rows `indices`.
  Eigen::MatrixXcd inv_WI = svd.solve(Eigen::MatrixXcd::Identity(d, d));
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(n, n);
  Eigen::MatrixXcd WinvWI = kernel_basis * inv_WI;
  for (int j = 0; j < d; ++j) P.col(indices[j]) = WinvWI.col(j);
  return P;
}

Eigen::MatrixXcd evolutionary_projector(const Eigen::MatrixXcd& E, double rel_tol,
                                        double cond_limit) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(E);
  if (eig.info() != Eigen::Success) {
    throw NumericalError("eigendecomposition of the evolution matrix failed");
  }
  const Eigen::MatrixXcd& V = eig.eigenvectors();
  const Eigen::VectorXcd& lam = eig.eigenvalues();
  const int n = static_cast<int>(lam.size());
  double lmax = 0.0;
  for (int i = 0; i < n; ++i) lmax = std::max(lmax, std::abs(lam[i]));
  if (!(lmax > 0.0)) return Eigen::MatrixXcd::Identity(n, n);

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(V);
  const auto& sv = svd.singularValues();
  const double cond = sv[0] / sv[n - 1];
  if (sv[n - 1] > 0.0 && cond <= cond_limit) {
    Eigen::VectorXcd mask(n);
    for (int i = 0; i < n; ++i) {
      mask[i] = (std::abs(lam[i]) < rel_tol * lmax) ? 1.0 : 0.0;
    }
    return V * mask.asDiagonal() * V.inverse();
  }

  // Ill conditioned eigenbasis: take the long-time limit of exp(-E t),
  // doubling t by squaring until the result stops moving.
  Eigen::MatrixXcd X = (-E * (50.0 / E.norm())).exp();
  for (int it = 0; it < 60; ++it) {
    Eigen::MatrixXcd X2 = X * X;
    if ((X2 - X).norm() < 1e-12 * std::max(1.0, X.norm())) return X2;
    X = X2;
    if (!X.allFinite()) break;
  }
  throw NumericalError("matrix exponential limit did not converge to a projector");
}

double distance_to_kernel(const Eigen::VectorXcd& v,
                          const Eigen::MatrixXcd& kernel_basis) {
  if (kernel_basis.cols() == 0) return v.norm();
  return (v - kernel_basis * (kernel_basis.adjoint() * v)).norm();
}

OrderFit fit_loglog(const std::vector<double>& h, const std::vector<double>& d) {
  const int n = static_cast<int>(h.size());
  if (n < 2 || d.size() != h.size()) {
    throw NumericalError("order fit needs at least two matched samples");
  }
  double sx = 0, sy = 0;
  std::vector<double> lx(n), ly(n);
  for (int i = 0; i < n; ++i) {
    lx[i] = std::log(h[i]);
    ly[i] = std::log(d[i]);
    sx += lx[i];
    sy += ly[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  OrderFit fit;
  fit.slope = sxy / sxx;
  const double icept = my - fit.slope * mx;
  double rss = 0;
  for (int i = 0; i < n; ++i) {
    const double r = ly[i] - (icept + fit.slope * lx[i]);
    rss += r * r;
  }
  fit.residual = std::sqrt(rss / n);
  return fit;
}

StationarityOrder steady_order_fit(const LinearModel& model,
                                   const FluxMatrices& flux, int degree,
                                   double kx, double ky,
                                   const std::vector<double>& spacings) {
  BasisSet basis(degree);
  Eigen::VectorXcd Qhat(model.m);
  Qhat.setZero();
  Qhat[0] = -ky;
  Qhat[1] = kx;

  StationarityOrder result;
  result.spacings = spacings;
  double vmax = 0.0;
  for (double dx : spacings) {
    Eigen::MatrixXcd E = assemble_evolution_matrix(model, flux, basis, kx, ky, dx, dx);
    KernelSample ker = null_space(E, 1e-9, /*refined=*/true);
    Eigen::VectorXcd v = dof_hat(basis, Qhat, kx, ky, dx, dx);
    result.distances.push_back(distance_to_kernel(v, ker.basis));
    vmax = std::max(vmax, v.norm());
  }
  double dmax = 0.0;
  for (double d : result.distances) dmax = std::max(dmax, d);
  if (dmax <= 1e3 * 2.2e-16 * vmax) {
    result.exact = true;
    return result;
  }
  result.fit = fit_loglog(result.spacings, result.distances);
  return result;
}

}  // namespace statdg
