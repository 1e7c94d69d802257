#include "statdg/kernel.hpp"

#include <algorithm>

#include "statdg/evolution.hpp"

namespace statdg {

namespace {

template <typename Real>
KernelSample null_space_impl(const Eigen::MatrixXcd& E, double rel_tol) {
  using Mat = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
  KernelSample sample;
  Eigen::JacobiSVD<Mat> svd(E.template cast<std::complex<Real>>(),
                            Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const int n = static_cast<int>(sv.size());
  sample.sigmas.resize(n);
  for (int i = 0; i < n; ++i) sample.sigmas[i] = static_cast<double>(sv[i]);

  const double smax = sample.sigmas[0];
  if (!(smax > 0.0)) {  // zero matrix: everything is kernel
    sample.dim = n;
    sample.basis = svd.matrixV().template cast<std::complex<double>>();
    return sample;
  }
  int dim = 0;
  for (int i = n - 1; i >= 0; --i) {
    if (sample.sigmas[i] < rel_tol * smax) ++dim;
    else break;
  }
  sample.dim = dim;
  if (dim > 0 && dim < n) {
    // Clean split: smallest kept singular value must dominate the largest
    // discarded one by three orders of magnitude.
    const double kept = sample.sigmas[n - dim - 1];
    const double discarded = sample.sigmas[n - dim];
    if (!(kept > 1e3 * discarded)) sample.ambiguous = true;
  }
  sample.basis =
      svd.matrixV().rightCols(dim).template cast<std::complex<double>>();
  return sample;
}

}  // namespace

KernelSample null_space(const Eigen::MatrixXcd& E, double rel_tol,
                        bool refined) {
  return refined ? null_space_impl<long double>(E, rel_tol)
                 : null_space_impl<double>(E, rel_tol);
}

double kernel_residual(const Eigen::MatrixXcd& E, const Eigen::VectorXcd& w) {
  return (E * w).norm() / (E.norm() * w.norm());
}

std::vector<std::pair<double, double>> default_k_samples(double dx, double dy) {
  std::vector<double> pts(8);
  for (int i = 0; i < 8; ++i) pts[i] = 0.3 + i * (2.9 - 0.3) / 7.0;
  std::vector<std::pair<double, double>> ks;
  ks.reserve(64);
  for (double a : pts) {
    for (double b : pts) ks.emplace_back(a / dx, b / dy);
  }
  return ks;
}

KernelSweep kernel_dim_sweep(const LinearModel& model, const FluxMatrices& flux,
                             int degree, double dx, double dy,
                             const std::vector<std::pair<double, double>>& ks,
                             double rel_tol) {
  BasisSet basis(degree);
  ShiftBlocks blocks = evolution_blocks(model, flux, basis, dx, dy);
  std::vector<std::pair<double, double>> samples = ks;
  if (samples.empty()) samples = default_k_samples(dx, dy);

  KernelSweep sweep;
  sweep.flux = flux.kind;
  sweep.degree = degree;
  bool any_ambiguous = false;
  int min_dim = blocks.nloc, max_dim = 0;
  for (auto [kx, ky] : samples) {
    std::complex<double> tx = std::exp(std::complex<double>(0.0, kx * dx));
    std::complex<double> ty = std::exp(std::complex<double>(0.0, ky * dy));
    KernelSample s = null_space(evolution_matrix(blocks, tx, ty), rel_tol);
    s.kx = kx;
    s.ky = ky;
    min_dim = std::min(min_dim, s.dim);
    max_dim = std::max(max_dim, s.dim);
    any_ambiguous = any_ambiguous || s.ambiguous;
    sweep.samples.push_back(std::move(s));
  }
  sweep.min_dim = min_dim;
  sweep.max_dim = max_dim;
  if (any_ambiguous) {
    sweep.verdict = "ambiguous";
  } else if (min_dim >= 1) {
    sweep.verdict = "stationarity_preserving";
  } else {
    sweep.verdict = "not_stationarity_preserving";
  }
  return sweep;
}

}  // namespace statdg
