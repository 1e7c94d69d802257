#include "statdg/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace statdg {

namespace {

// P_n(x) and P_n'(x) on [-1, 1] via the three-term recurrence.
void legendre_pair(int n, double x, double& p, double& dp) {
  double p0 = 1.0, p1 = x;
  if (n == 0) {
    p = 1.0;
    dp = 0.0;
    return;
  }
  for (int k = 1; k < n; ++k) {
    double p2 = ((2 * k + 1) * x * p1 - k * p0) / (k + 1);
    p0 = p1;
    p1 = p2;
  }
  p = p1;
  dp = n * (x * p1 - p0) / (x * x - 1.0);
}

}  // namespace

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("quadrature order must be positive");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Chebyshev-like initial guess, then Newton.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double p, dp;
    for (int it = 0; it < 100; ++it) {
      legendre_pair(n, x, p, dp);
      double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    legendre_pair(n, x, p, dp);
    // Map [-1,1] -> [-1/2,1/2]: nodes halve, weights pick up the Jacobian 1/2.
    rule.nodes[n - 1 - i] = 0.5 * x;
    rule.weights[n - 1 - i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const QuadratureRule& gauss5() {
  static const QuadratureRule rule = gauss_legendre(5);
  return rule;
}

double integrate(const QuadratureRule& rule, const std::function<double(double)>& f,
                 double a, double b) {
  double mid = 0.5 * (a + b), len = b - a;
  double sum = 0.0;
  for (int g = 0; g < rule.size(); ++g) {
    sum += rule.weights[g] * f(mid + len * rule.nodes[g]);
  }
  return len * sum;
}

}  // namespace statdg
