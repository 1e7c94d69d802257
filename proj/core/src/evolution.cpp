#include "statdg/evolution.hpp"

#include <cmath>

namespace statdg {

ShiftBlocks evolution_blocks(const LinearModel& model, const FluxMatrices& flux,
                             const BasisSet& basis, double dx, double dy) {
  const int n = basis.size();
  const int m = model.m;
  const int nloc = m * n * n;
  ShiftBlocks blocks;
  blocks.nloc = nloc;
  blocks.center = Eigen::MatrixXd::Zero(nloc, nloc);
  blocks.px = Eigen::MatrixXd::Zero(nloc, nloc);
  blocks.mx = Eigen::MatrixXd::Zero(nloc, nloc);
  blocks.py = Eigen::MatrixXd::Zero(nloc, nloc);
  blocks.my = Eigen::MatrixXd::Zero(nloc, nloc);

  const auto& D = basis.stiffness();
  auto idx = [n](int var, int a, int b) { return (var * n + a) * n + b; };

  for (int va = 0; va < m; ++va) {
    for (int vb = 0; vb < m; ++vb) {
      const double jx = model.Jx[va * m + vb];
      const double jy = model.Jy[va * m + vb];
      const double dxp = 0.5 * (jx + flux.Dx[va * m + vb]);
      const double dxm = 0.5 * (jx - flux.Dx[va * m + vb]);
      const double dyp = 0.5 * (jy + flux.Dy[va * m + vb]);
      const double dym = 0.5 * (jy - flux.Dy[va * m + vb]);

      // x direction: rows (k, l), columns (alpha, l).
      for (int k = 0; k < n; ++k) {
        for (int alpha = 0; alpha < n; ++alpha) {
          const double vol = -jx * D[k][alpha] / dx;
          const double face0 = (basis.trace_right(k) * basis.trace_right(alpha) * dxp -
                                basis.trace_left(k) * basis.trace_left(alpha) * dxm) /
                               dx;
          const double facep = basis.trace_right(k) * basis.trace_left(alpha) * dxm / dx;
          const double facem = -basis.trace_left(k) * basis.trace_right(alpha) * dxp / dx;
          for (int l = 0; l < n; ++l) {
            blocks.center(idx(va, k, l), idx(vb, alpha, l)) += vol + face0;
            blocks.px(idx(va, k, l), idx(vb, alpha, l)) += facep;
            blocks.mx(idx(va, k, l), idx(vb, alpha, l)) += facem;
          }
        }
      }

      // y direction: rows (k, l), columns (k, beta).
      for (int l = 0; l < n; ++l) {
        for (int beta = 0; beta < n; ++beta) {
          const double vol = -jy * D[l][beta] / dy;
          const double face0 = (basis.trace_right(l) * basis.trace_right(beta) * dyp -
                                basis.trace_left(l) * basis.trace_left(beta) * dym) /
                               dy;
          const double facep = basis.trace_right(l) * basis.trace_left(beta) * dym / dy;
          const double facem = -basis.trace_left(l) * basis.trace_right(beta) * dyp / dy;
          for (int k = 0; k < n; ++k) {
            blocks.center(idx(va, k, l), idx(vb, k, beta)) += vol + face0;
            blocks.py(idx(va, k, l), idx(vb, k, beta)) += facep;
            blocks.my(idx(va, k, l), idx(vb, k, beta)) += facem;
          }
        }
      }
    }
  }
  return blocks;
}

Eigen::MatrixXcd evolution_matrix(const ShiftBlocks& blocks,
                                  std::complex<double> tx,
                                  std::complex<double> ty) {
  Eigen::MatrixXcd E = blocks.center.cast<std::complex<double>>();
  E += blocks.px.cast<std::complex<double>>() * tx;
  E += blocks.mx.cast<std::complex<double>>() * (1.0 / tx);
  E += blocks.py.cast<std::complex<double>>() * ty;
  E += blocks.my.cast<std::complex<double>>() * (1.0 / ty);
  return E;
}

Eigen::MatrixXcd assemble_evolution_matrix(const LinearModel& model,
                                           const FluxMatrices& flux,
                                           const BasisSet& basis, double kx,
                                           double ky, double dx, double dy) {
  ShiftBlocks blocks = evolution_blocks(model, flux, basis, dx, dy);
  std::complex<double> tx = std::exp(std::complex<double>(0.0, kx * dx));
  std::complex<double> ty = std::exp(std::complex<double>(0.0, ky * dy));
  return evolution_matrix(blocks, tx, ty);
}

}  // namespace statdg
