#include <doctest.h>

#include <cmath>
#include <complex>

#include "statdg/dofhat.hpp"
#include "statdg/errors.hpp"
#include "statdg/evolution.hpp"
#include "statdg/fixtures.hpp"
#include "statdg/projectors.hpp"

using namespace statdg;
using cd = std::complex<double>;

TEST_CASE("expression evaluator") {
  std::map<std::string, cd> vars;
  vars["tx"] = cd(0.6, 0.8);
  vars["dy"] = cd(0.25, 0.0);

  SUBCASE("arithmetic and precedence") {
    CHECK(eval_expression("2+3*4", {}) == cd(14.0, 0.0));
    CHECK(eval_expression("(2+3)*4", {}) == cd(20.0, 0.0));
    CHECK(std::abs(eval_expression("-3/2 + 1", {}) - cd(-0.5, 0.0)) < 1e-15);
    CHECK(std::abs(eval_expression("2^3 / 4", {}) - cd(2.0, 0.0)) < 1e-15);
    // Unary minus binds tighter than '^' in this grammar: -2^2 is (-2)^2.
    CHECK(std::abs(eval_expression("-2^2", {}) - cd(4.0, 0.0)) < 1e-15);
    CHECK(std::abs(eval_expression("-(2^2)", {}) - cd(-4.0, 0.0)) < 1e-15);
    CHECK(std::abs(eval_expression("0-2^2", {}) - cd(-4.0, 0.0)) < 1e-15);
  }

  SUBCASE("variables, sqrt, imaginary unit") {
    CHECK(std::abs(eval_expression("tx*tx", vars) - cd(-0.28, 0.96)) < 1e-15);
    CHECK(std::abs(eval_expression("sqrt(3)*dy", vars) -
                   cd(std::sqrt(3.0) * 0.25, 0.0)) < 1e-15);
    CHECK(std::abs(eval_expression("i*i", {}) - cd(-1.0, 0.0)) < 1e-15);
    CHECK(std::abs(eval_expression("(tx-1)/(tx+1)", vars) -
                   (vars["tx"] - 1.0) / (vars["tx"] + 1.0)) < 1e-15);
  }

  SUBCASE("malformed input is rejected") {
    CHECK_THROWS_AS((void)eval_expression("2+", {}), ConfigError);
    CHECK_THROWS_AS((void)eval_expression("(1+2", {}), ConfigError);
    CHECK_THROWS_AS((void)eval_expression("bogus", {}), ConfigError);
    CHECK_THROWS_AS((void)eval_expression("1 2", {}), ConfigError);
    CHECK_THROWS_AS((void)eval_expression("", {}), ConfigError);
  }
}

TEST_CASE("archived kernel bases") {
  FixtureSet set = load_fixtures(default_fixture_path());

  SUBCASE("inventory") {
    REQUIRE(set.kernels.size() == 10);
    REQUIRE(set.subspaces.size() == 1);
    int total = 0;
    for (const auto& k : set.kernels) {
      total += static_cast<int>(k.vectors.size());
      const int nloc = k.nvars * (k.degree + 1) * (k.degree + 1);
      for (const auto& v : k.vectors)
        CHECK(static_cast<int>(v.size()) == nloc);
    }
    CHECK(total == 73);
    CHECK(set.subspaces[0].flux == "vorticity_mode");
  }

  SUBCASE("every archived vector annihilates its evolution matrix") {
    std::vector<FixtureCheck> checks = verify_kernel_fixtures(set);
    REQUIRE(checks.size() == set.kernels.size());
    for (const FixtureCheck& c : checks) {
      CAPTURE(c.flux);
      CAPTURE(c.degree);
      CHECK(c.max_residual < 1e-10);
      CHECK(c.count > 0);
    }
  }

  SUBCASE("missing file raises an io error") {
    CHECK_THROWS_AS((void)load_fixtures("/nonexistent/fixtures.json"), IoError);
  }
}

TEST_CASE("distance of the divergence free mode to a trial subspace") {
  // The archived vorticity mode is a candidate stationary state for degree
  // one schemes. The cell degrees of freedom of the divergence free wave
  // Qhat = (-ky, kx, 0) approach its span at third order: per direction the
  // candidate carries the ratio i tan(k h / 2) / sqrt(3), the exact moments
  // carry I_1/I_0 = i k h (1 + (k h)^2 / 60) / (2 sqrt(3)), and the two
  // agree through second order. The candidate itself only matches the
  // actual kernel of the fully upwinded scheme to first order (that scheme
  // is first order accurate at steady state, so its kernel direction is
  // off by O(dx)).
  FixtureSet set = load_fixtures(default_fixture_path());
  const KernelFixture& sub = set.subspaces[0];
  REQUIRE(sub.degree == 1);

  LinearModel model = acoustics();
  FluxMatrices flux = acoustic_flux(FluxKind::upwind);
  BasisSet basis(sub.degree);
  const double kx = 1.0, ky = 0.7;

  Eigen::VectorXcd Qhat(3);
  Qhat << cd(-ky, 0.0), cd(kx, 0.0), cd(0.0, 0.0);

  std::vector<double> hs, to_span, selective, to_kernel;
  for (int j = 3; j <= 6; ++j) {
    const double dx = std::pow(2.0, -j);
    const cd tx = std::exp(cd(0.0, kx * dx));
    const cd ty = std::exp(cd(0.0, ky * dx));
    Eigen::VectorXcd w = eval_fixture_vector(sub.vectors[0], tx, ty, dx, dx, kx, ky);
    Eigen::MatrixXcd span(w.size(), 1);
    span.col(0) = w / w.norm();

    Eigen::VectorXcd v = dof_hat(basis, Qhat, kx, ky, dx, dx);

    // Residual of the projection that reproduces the mean of u exactly.
    Eigen::MatrixXcd W(w.size(), 1);
    W.col(0) = w;
    Eigen::MatrixXcd P = selective_projector(W, {0});

    Eigen::MatrixXcd E =
        assemble_evolution_matrix(model, flux, basis, kx, ky, dx, dx);
    KernelSample ker = null_space(E, 1e-9, true);
    REQUIRE(ker.dim == 1);

    hs.push_back(dx);
    to_span.push_back(distance_to_kernel(v / v.norm(), span));
    selective.push_back((v - P * v).norm());
    to_kernel.push_back(distance_to_kernel(w / w.norm(), ker.basis));
  }
  CHECK(fit_loglog(hs, to_span).slope == doctest::Approx(3.0).epsilon(0.05));
  CHECK(fit_loglog(hs, selective).slope == doctest::Approx(3.0).epsilon(0.05));
  CHECK(fit_loglog(hs, to_kernel).slope == doctest::Approx(1.0).epsilon(0.05));
}
