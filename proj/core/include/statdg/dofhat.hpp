#pragma once

#include <Eigen/Dense>
#include <complex>

#include "statdg/basis.hpp"

namespace statdg {

// Moment of a basis function against a plane wave over the reference cell:
//   I_k(kappa) = integral of b_k(xi) exp(i kappa xi) over [-1/2, 1/2].
// Evaluated through monomial moments: a power series in kappa below the
// branch point, the integration-by-parts recursion above it (the recursion
// amplifies round-off like n!/kappa^n and is useless for small kappa).
std::complex<double> basis_fourier_moment(const BasisSet& basis, int k, double kappa);

// Exact degree-0 factor: I_0(kx dx) I_0(ky dy)
//   = 4 sin(kx dx / 2) sin(ky dy / 2) / (dx dy kx ky).
double alpha_factor(double kx, double ky, double dx, double dy);

// Degrees of freedom of the plane wave Qhat exp(i(kx x + ky y)) on the cell
// centered at the origin; component (var, a, b) is
// Qhat_var I_a(kx dx) I_b(ky dy).
Eigen::VectorXcd dof_hat(const BasisSet& basis, const Eigen::VectorXcd& Qhat,
                         double kx, double ky, double dx, double dy);

// Reconstruction at reference coordinates: sum of v_(var,a,b) b_a(xi) b_b(eta).
Eigen::VectorXcd reconstruct_at(const BasisSet& basis, const Eigen::VectorXcd& v,
                                int nvars, double xi, double eta);

// Cell-RMS distance between the plane wave and the reconstruction of its
// degrees of freedom; decays like dx^(K+1) under grid refinement.
double mode_projection_error(const BasisSet& basis, const Eigen::VectorXcd& Qhat,
                             double kx, double ky, double dx, double dy);

}  // namespace statdg
