#include "statdg/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace statdg {

namespace {

constexpr int kMaxDegree = 6;

}  // namespace

BasisSet::BasisSet(int degree) : degree_(degree) {
  if (degree < 0 || degree > kMaxDegree) {
    throw std::invalid_argument("basis degree out of supported range [0,6]");
  }
  int n = degree + 1;
  trace_right_.resize(n);
  trace_left_.resize(n);
  for (int k = 0; k < n; ++k) {
    double s = std::sqrt(2.0 * k + 1.0);
    trace_right_[k] = s;
    trace_left_[k] = (k % 2 == 0) ? s : -s;
  }

  // Monomial coefficients of P_k(t), then t = 2x.
  std::vector<std::vector<double>> leg(n);
  leg[0] = {1.0};
  if (n > 1) leg[1] = {0.0, 1.0};
  for (int k = 1; k + 1 < n; ++k) {
    std::vector<double> next(k + 2, 0.0);
    for (int j = 0; j <= k; ++j) next[j + 1] += (2.0 * k + 1.0) * leg[k][j];
    for (size_t j = 0; j < leg[k - 1].size(); ++j) next[j] -= k * leg[k - 1][j];
    for (double& c : next) c /= (k + 1.0);
    leg[k + 1] = next;
  }
  mono_.resize(n);
  for (int k = 0; k < n; ++k) {
    mono_[k].assign(k + 1, 0.0);
    double s = std::sqrt(2.0 * k + 1.0);
    double pow2 = 1.0;
    for (int j = 0; j <= k; ++j) {
      mono_[k][j] = s * leg[k][j] * pow2;
      pow2 *= 2.0;
    }
  }

  // Stiffness by quadrature exact for degree 2K-1.
  QuadratureRule rule = gauss_legendre(degree + 1);
  stiffness_.assign(n, std::vector<double>(n, 0.0));
  for (int k = 0; k < n; ++k) {
    for (int a = 0; a < n; ++a) {
      double sum = 0.0;
      for (int g = 0; g < rule.size(); ++g) {
        sum += rule.weights[g] * deriv(k, rule.nodes[g]) * value(a, rule.nodes[g]);
      }
      stiffness_[k][a] = sum;
    }
  }
}

double BasisSet::value(int k, double x) const {
  double t = 2.0 * x;
  double p0 = 1.0, p1 = t;
  if (k == 0) return 1.0;
  for (int j = 1; j < k; ++j) {
    double p2 = ((2 * j + 1) * t * p1 - j * p0) / (j + 1);
    p0 = p1;
    p1 = p2;
  }
  return std::sqrt(2.0 * k + 1.0) * p1;
}

double BasisSet::deriv(int k, double x) const {
  // P'_{j+1} = P'_{j-1} + (2j+1) P_j, chain rule factor 2 from t = 2x.
  if (k == 0) return 0.0;
  double t = 2.0 * x;
  double p0 = 1.0, p1 = t;
  double d0 = 0.0, d1 = 1.0;
  for (int j = 1; j < k; ++j) {
    double p2 = ((2 * j + 1) * t * p1 - j * p0) / (j + 1);
    double d2 = d0 + (2 * j + 1) * p1;
    p0 = p1;
    p1 = p2;
    d0 = d1;
    d1 = d2;
  }
  return std::sqrt(2.0 * k + 1.0) * 2.0 * d1;
}

std::vector<std::vector<double>> BasisSet::values_at(const QuadratureRule& rule) const {
  std::vector<std::vector<double>> tab(size(), std::vector<double>(rule.size()));
  for (int k = 0; k < size(); ++k) {
    for (int g = 0; g < rule.size(); ++g) tab[k][g] = value(k, rule.nodes[g]);
  }
  return tab;
}

std::vector<std::vector<double>> BasisSet::derivs_at(const QuadratureRule& rule) const {
  std::vector<std::vector<double>> tab(size(), std::vector<double>(rule.size()));
  for (int k = 0; k < size(); ++k) {
    for (int g = 0; g < rule.size(); ++g) tab[k][g] = deriv(k, rule.nodes[g]);
  }
  return tab;
}

BasisSet legendre_basis(int degree) { return BasisSet(degree); }

}  // namespace statdg
