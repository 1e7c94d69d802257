#pragma once

#include <vector>

#include "statdg/quadrature.hpp"

namespace statdg {

// Orthonormal Legendre basis on the reference cell [-1/2, 1/2]:
//   b_k(x) = sqrt(2k+1) * P_k(2x),  k = 0..K,
// so the mass matrix is the identity. Traces are
//   b_k(+1/2) = sqrt(2k+1),  b_k(-1/2) = (-1)^k sqrt(2k+1).
class BasisSet {
 public:
  explicit BasisSet(int degree);

  int degree() const { return degree_; }
  int size() const { return degree_ + 1; }

  double value(int k, double x) const;
  double deriv(int k, double x) const;
  double trace_right(int k) const { return trace_right_[k]; }
  double trace_left(int k) const { return trace_left_[k]; }

  // Stiffness D[k][a] = integral of b_k' b_a over the reference cell.
  const std::vector<std::vector<double>>& stiffness() const { return stiffness_; }

  // Monomial coefficients of b_k: b_k(x) = sum_j mono[k][j] x^j.
  const std::vector<std::vector<double>>& monomial_coeffs() const { return mono_; }

  // Tabulated values/derivatives at the nodes of a rule: tab[k][g].
  std::vector<std::vector<double>> values_at(const QuadratureRule& rule) const;
  std::vector<std::vector<double>> derivs_at(const QuadratureRule& rule) const;

 private:
  int degree_;
  std::vector<double> trace_right_, trace_left_;
  std::vector<std::vector<double>> stiffness_;
  std::vector<std::vector<double>> mono_;
};

BasisSet legendre_basis(int degree);

}  // namespace statdg
