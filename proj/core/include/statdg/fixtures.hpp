#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <string>
#include <vector>

namespace statdg {

// Evaluate an arithmetic expression over complex values. Supported:
// numbers, + - * / ^ (integer exponent), unary minus, parentheses,
// sqrt(...), the variables passed in `vars`, and the imaginary unit `i`.
std::complex<double> eval_expression(const std::string& expr,
                                     const std::map<std::string, std::complex<double>>& vars);

// A reference kernel basis, stored symbolically in the variables
// tx, ty, dx, dy (and kx, ky for wavenumber-dependent subspaces).
struct KernelFixture {
  std::string flux;
  int degree = 0;
  int nvars = 3;
  std::vector<std::vector<std::string>> vectors;
};

struct FixtureSet {
  std::vector<KernelFixture> kernels;
  std::vector<KernelFixture> subspaces;  // named via flux field
};

std::string default_fixture_path();
FixtureSet load_fixtures(const std::string& path = default_fixture_path());

// Evaluate one symbolic vector at a sample point.
Eigen::VectorXcd eval_fixture_vector(const std::vector<std::string>& exprs,
                                     std::complex<double> tx, std::complex<double> ty,
                                     double dx, double dy, double kx = 0.0,
                                     double ky = 0.0);

// Evaluate every stored kernel vector at `nsamples` random unit-circle
// (tx, ty) pairs and at (dx, dy) = (1, 1) and (0.1, 0.07), and report the
// worst relative residual ||E w|| / (||E||_F ||w||) per fixture.
struct FixtureCheck {
  std::string flux;
  int degree = 0;
  int count = 0;
  double max_residual = 0.0;
};

std::vector<FixtureCheck> verify_kernel_fixtures(const FixtureSet& set,
                                                 unsigned seed = 1234,
                                                 int nsamples = 10);

}  // namespace statdg
