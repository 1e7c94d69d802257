#pragma once

#include <functional>
#include <vector>

namespace statdg {

// Gauss-Legendre rule on the reference interval [-1/2, 1/2].
// Weights sum to 1; an n-point rule is exact for degree <= 2n-1.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  int size() const { return static_cast<int>(nodes.size()); }
};

// Nodes by Newton iteration on P_n; accurate to machine precision.
QuadratureRule gauss_legendre(int n);

// The fixed 5-point rule used by the solver for volume and face integrals.
const QuadratureRule& gauss5();

// Integrate f over [a, b] with the given reference rule.
double integrate(const QuadratureRule& rule, const std::function<double(double)>& f,
                 double a, double b);

}  // namespace statdg
