#include "statdg/dofhat.hpp"

#include <cmath>
#include <vector>

namespace statdg {

namespace {

constexpr double kBranchPoint = 10.0;

// mu_n(kappa) = integral of xi^n exp(i kappa xi) over [-1/2, 1/2].
std::vector<std::complex<double>> monomial_moments(int nmax, double kappa) {
  std::vector<std::complex<double>> mu(nmax + 1);
  if (std::abs(kappa) < kBranchPoint) {
    // mu_n = sum_j (i kappa)^j / j! * c_{n+j}, c_m = 1 / (2^m (m+1)) for
    // even m and zero otherwise. Terms decay factorially.
    for (int n = 0; n <= nmax; ++n) {
      std::complex<double> term(1.0, 0.0);  // (i kappa)^j / j!
      std::complex<double> sum(0.0, 0.0);
      for (int j = 0; j <= 70; ++j) {
        if (j > 0) term *= std::complex<double>(0.0, kappa) / double(j);
        int mth = n + j;
        if (mth % 2 == 0) {
          double c = 1.0 / (std::ldexp(1.0, mth) * (mth + 1));
          sum += term * c;
        }
        if (j > std::abs(kappa) && std::abs(term) < 1e-22) break;
      }
      mu[n] = sum;
    }
    return mu;
  }
  const std::complex<double> ik(0.0, kappa);
  const std::complex<double> ep = std::exp(0.5 * ik);
  const std::complex<double> em = std::exp(-0.5 * ik);
  mu[0] = (ep - em) / ik;
  double half_n = 1.0;
  double sign = 1.0;
  for (int n = 1; n <= nmax; ++n) {
    half_n *= 0.5;
    sign = -sign;
    mu[n] = (half_n * ep - sign * half_n * em) / ik - (double(n) / ik) * mu[n - 1];
  }
  return mu;
}

}  // namespace

std::complex<double> basis_fourier_moment(const BasisSet& basis, int k, double kappa) {
  const auto& mono = basis.monomial_coeffs();
  auto mu = monomial_moments(k, kappa);
  std::complex<double> sum(0.0, 0.0);
  for (int j = 0; j <= k; ++j) sum += mono[k][j] * mu[j];
  return sum;
}

double alpha_factor(double kx, double ky, double dx, double dy) {
  return 4.0 * std::sin(0.5 * kx * dx) * std::sin(0.5 * ky * dy) /
         (dx * dy * kx * ky);
}

Eigen::VectorXcd dof_hat(const BasisSet& basis, const Eigen::VectorXcd& Qhat,
                         double kx, double ky, double dx, double dy) {
  const int n = basis.size();
  const int m = static_cast<int>(Qhat.size());
  Eigen::VectorXcd Ix(n), Iy(n);
  for (int a = 0; a < n; ++a) {
    Ix[a] = basis_fourier_moment(basis, a, kx * dx);
    Iy[a] = basis_fourier_moment(basis, a, ky * dy);
  }
  Eigen::VectorXcd v(m * n * n);
  for (int var = 0; var < m; ++var) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        v[(var * n + a) * n + b] = Qhat[var] * Ix[a] * Iy[b];
      }
    }
  }
  return v;
}

Eigen::VectorXcd reconstruct_at(const BasisSet& basis, const Eigen::VectorXcd& v,
                                int nvars, double xi, double eta) {
  const int n = basis.size();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(nvars);
  for (int var = 0; var < nvars; ++var) {
    std::complex<double> acc(0.0, 0.0);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        acc += v[(var * n + a) * n + b] * basis.value(a, xi) * basis.value(b, eta);
      }
    }
    out[var] = acc;
  }
  return out;
}

double mode_projection_error(const BasisSet& basis, const Eigen::VectorXcd& Qhat,
                             double kx, double ky, double dx, double dy) {
  Eigen::VectorXcd v = dof_hat(basis, Qhat, kx, ky, dx, dy);
  const int m = static_cast<int>(Qhat.size());
  QuadratureRule rule = gauss_legendre(12);
  double acc = 0.0;
  for (int g = 0; g < rule.size(); ++g) {
    for (int h = 0; h < rule.size(); ++h) {
      double xi = rule.nodes[g], eta = rule.nodes[h];
      Eigen::VectorXcd rec = reconstruct_at(basis, v, m, xi, eta);
      std::complex<double> phase =
          std::exp(std::complex<double>(0.0, kx * dx * xi + ky * dy * eta));
      double err2 = 0.0;
      for (int var = 0; var < m; ++var) err2 += std::norm(Qhat[var] * phase - rec[var]);
      acc += rule.weights[g] * rule.weights[h] * err2;
    }
  }
  return std::sqrt(acc);
}

}  // namespace statdg
