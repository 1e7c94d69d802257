#include <doctest.h>

#include <unsupported/Eigen/MatrixFunctions>
#include <cmath>
#include <complex>
#include <random>

#include "statdg/dofhat.hpp"
#include "statdg/errors.hpp"
#include "statdg/evolution.hpp"
#include "statdg/fixtures.hpp"
#include "statdg/projectors.hpp"

using namespace statdg;

namespace {

Eigen::VectorXcd random_complex_vector(int n, std::mt19937& rng) {
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v[i] = std::complex<double>(g(rng), g(rng));
  return v;
}

}  // namespace

TEST_CASE("selective projector") {
  FixtureSet set = load_fixtures(default_fixture_path());
  const KernelFixture* fix = nullptr;
  for (const auto& k : set.kernels)
    if (k.flux == "upwind" && k.degree == 1) fix = &k;
  REQUIRE(fix != nullptr);

  SUBCASE("one dimensional worked example") {
    // Kernel vector w of the fully upwinded degree-one scheme, with the
    // mean v component (index 4) selected: P q = q_4 (ty-1)/(sqrt(3)(ty+1)) w.
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ang(0.1, 2.9);
    const double dx = 0.3, dy = 0.2;
    for (int trial = 0; trial < 5; ++trial) {
      const std::complex<double> tx = std::exp(std::complex<double>(0.0, ang(rng)));
      const std::complex<double> ty = std::exp(std::complex<double>(0.0, ang(rng)));
      Eigen::VectorXcd w = eval_fixture_vector(fix->vectors[0], tx, ty, dx, dy);
      Eigen::MatrixXcd W(w.size(), 1);
      W.col(0) = w;
      Eigen::MatrixXcd P = selective_projector(W, {4});

      Eigen::VectorXcd q = random_complex_vector(12, rng);
      const std::complex<double> factor =
          (ty - 1.0) / (std::sqrt(3.0) * (ty + 1.0));
      Eigen::VectorXcd want = q[4] * factor * w;
      CHECK((P * q - want).norm() < 1e-12 * q.norm());
      // The selected component survives unchanged and the result is a
      // fixed point of the projector.
      CHECK(std::abs((P * q)[4] - q[4]) < 1e-12);
      CHECK((P * P - P).norm() < 1e-12 * std::max(1.0, P.norm()));
      CHECK((P * w - w).norm() < 1e-12 * w.norm());
    }
  }

  SUBCASE("leading order reduction residual of the upwinded scheme") {
    // Project the divergence free wave Qhat = (-ky, kx, 0) onto the kernel
    // vector, reproducing the v moment of first order in y exactly. The
    // residual is first order in dx with known leading components:
    // -i dx ky^2 / (2 sqrt(3)) in u^(01) and +i dx kx^2 / (2 sqrt(3)) in
    // v^(10); everything else is O(dx^2).
    BasisSet basis(1);
    const double kx = 1.0, ky = 0.7;
    Eigen::VectorXcd Qhat(3);
    Qhat << std::complex<double>(-ky, 0.0), std::complex<double>(kx, 0.0), 0.0;
    for (int j = 4; j <= 6; ++j) {
      const double dx = std::pow(2.0, -j);
      const std::complex<double> tx = std::exp(std::complex<double>(0.0, kx * dx));
      const std::complex<double> ty = std::exp(std::complex<double>(0.0, ky * dx));
      Eigen::VectorXcd w = eval_fixture_vector(fix->vectors[0], tx, ty, dx, dx);
      Eigen::MatrixXcd W(w.size(), 1);
      W.col(0) = w;
      Eigen::MatrixXcd P = selective_projector(W, {5});
      Eigen::VectorXcd v = dof_hat(basis, Qhat, kx, ky, dx, dx);
      Eigen::VectorXcd r = v - P * v;
      const std::complex<double> lead_u01(0.0, -dx * ky * ky / (2.0 * std::sqrt(3.0)));
      const std::complex<double> lead_v10(0.0, dx * kx * kx / (2.0 * std::sqrt(3.0)));
      CHECK(std::abs(r[1] / lead_u01 - 1.0) < 1.0 * dx * dx);
      CHECK(std::abs(r[6] / lead_v10 - 1.0) < 1.0 * dx * dx);
      // The selected component is untouched and the residual norm tracks
      // its first order leading term dx sqrt(kx^4 + ky^4) / (2 sqrt(3)).
      CHECK(std::abs(r[5]) < 1e-14);
      const double lead_norm =
          dx * std::sqrt(kx * kx * kx * kx + ky * ky * ky * ky) /
          (2.0 * std::sqrt(3.0));
      CHECK(r.norm() == doctest::Approx(lead_norm).epsilon(0.05));
    }
  }

  SUBCASE("multi dimensional kernel with pivoted component choice") {
    LinearModel model = acoustics();
    FluxMatrices flux = acoustic_flux(FluxKind::lowmach);
    BasisSet basis(1);
    Eigen::MatrixXcd E =
        assemble_evolution_matrix(model, flux, basis, 1.0, 0.7, 0.2, 0.2);
    KernelSample ker = null_space(E);
    REQUIRE(ker.dim == 4);

    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(ker.basis.transpose());
    std::vector<int> idx;
    for (int j = 0; j < ker.dim; ++j)
      idx.push_back(static_cast<int>(qr.colsPermutation().indices()[j]));

    Eigen::MatrixXcd P = selective_projector(ker.basis, idx);
    CHECK((P * P - P).norm() < 1e-10 * P.norm());
    CHECK((P * ker.basis - ker.basis).norm() < 1e-10);
    std::mt19937 rng(11);
    Eigen::VectorXcd q = random_complex_vector(static_cast<int>(E.rows()), rng);
    for (int i : idx) CHECK(std::abs((P * q)[i] - q[i]) < 1e-10);
    // The projection lands inside the kernel.
    CHECK(kernel_residual(E, P * q) < 1e-9);
  }

  SUBCASE("rejects a selection the kernel does not control") {
    const double dx = 0.3, dy = 0.2;
    Eigen::VectorXcd w = eval_fixture_vector(
        fix->vectors[0], std::exp(std::complex<double>(0.0, 0.4)),
        std::exp(std::complex<double>(0.0, 0.9)), dx, dy);
    Eigen::MatrixXcd W(w.size(), 1);
    W.col(0) = w;
    // Index 8 is a pressure component; the kernel vector vanishes there.
    CHECK_THROWS_AS((void)selective_projector(W, {8}), NumericalError);
    CHECK_THROWS_AS((void)selective_projector(W, {0, 4}), NumericalError);
  }
}

TEST_CASE("evolutionary projector") {
  LinearModel model = acoustics();
  BasisSet basis(1);
  const double kx = 1.0, ky = 0.7, dx = 0.1, dy = 0.1;

  SUBCASE("empty kernel gives the zero map") {
    FluxMatrices flux = acoustic_flux(FluxKind::rusanov);
    Eigen::MatrixXcd E =
        assemble_evolution_matrix(model, flux, basis, kx, ky, dx, dy);
    Eigen::MatrixXcd P = evolutionary_projector(E);
    CHECK(P.norm() < 1e-8);
  }

  SUBCASE("projects onto the kernel along the decaying directions") {
    FluxMatrices flux = acoustic_flux(FluxKind::upwind);
    Eigen::MatrixXcd E =
        assemble_evolution_matrix(model, flux, basis, kx, ky, dx, dy);
    Eigen::MatrixXcd P = evolutionary_projector(E);

    CHECK((P * P - P).norm() < 1e-8 * std::max(1.0, P.norm()));
    CHECK((E * P).norm() < 1e-7 * E.norm());
    CHECK((P * E).norm() < 1e-7 * E.norm());

    KernelSample ker = null_space(E);
    REQUIRE(ker.dim == 1);
    CHECK((P * ker.basis.col(0) - ker.basis.col(0)).norm() < 1e-8);
  }

  SUBCASE("matches the semigroup limit when the spectrum has a gap") {
    // Synthetic matrix with a known eigenbasis: two zero eigenvalues and
    // the rest with real part at least one, so exp(-E t) has a computable
    // limit V diag(1,1,0,...) V^-1 at a modest horizon. The evolution
    // matrices of the schemes themselves are unsuitable here: their
    // slowest nonkernel modes decay at rates around 1e-5 of the matrix
    // norm, far beyond any practical matrix exponential horizon.
    const int n = 8, kdim = 2;
    std::mt19937 rng(5);
    std::normal_distribution<double> g;
    Eigen::MatrixXcd V = Eigen::MatrixXcd::Identity(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        V(i, j) += 0.3 * std::complex<double>(g(rng), g(rng));
    std::uniform_real_distribution<double> re(1.0, 3.0), im(-2.0, 2.0);
    Eigen::VectorXcd lam = Eigen::VectorXcd::Zero(n);
    for (int i = kdim; i < n; ++i) lam[i] = std::complex<double>(re(rng), im(rng));
    Eigen::MatrixXcd Vinv = V.inverse();
    Eigen::MatrixXcd E = V * lam.asDiagonal() * Vinv;
    Eigen::MatrixXcd Pstar = V.leftCols(kdim) * Vinv.topRows(kdim);

    Eigen::MatrixXcd P = evolutionary_projector(E);
    CHECK((P - Pstar).norm() < 1e-9 * std::max(1.0, Pstar.norm()));

    Eigen::VectorXcd q = random_complex_vector(n, rng);
    Eigen::MatrixXcd X = (-E * 40.0).exp();
    CHECK((X * q - P * q).norm() < 1e-9 * q.norm());

    // A condition limit below one forces the repeated squaring branch; it
    // must land on the same projector.
    Eigen::MatrixXcd Q = evolutionary_projector(E, 1e-9, 0.5);
    CHECK((Q - Pstar).norm() < 1e-8 * std::max(1.0, Pstar.norm()));
    CHECK((Q * Q - Q).norm() < 1e-10 * std::max(1.0, Q.norm()));
  }

  SUBCASE("exponential fallback refuses a spectrum without a usable gap") {
    // The fully upwinded degree one matrix keeps nonkernel modes whose
    // decay rates are around 1e-5 of the matrix norm; repeated squaring
    // cannot separate them from the kernel before roundoff takes over, and
    // the fallback must say so instead of returning a non-projector.
    FluxMatrices flux = acoustic_flux(FluxKind::upwind);
    Eigen::MatrixXcd E =
        assemble_evolution_matrix(model, flux, basis, kx, ky, dx, dy);
    CHECK_THROWS_AS((void)evolutionary_projector(E, 1e-9, 0.5), NumericalError);
  }
}

TEST_CASE("distance to kernel") {
  Eigen::MatrixXcd empty(4, 0);
  Eigen::VectorXcd v(4);
  v << 1.0, std::complex<double>(0.0, 2.0), 0.0, -1.0;
  CHECK(distance_to_kernel(v, empty) == doctest::Approx(v.norm()));

  Eigen::MatrixXcd W(4, 1);
  W << 1.0, 0.0, 0.0, 0.0;
  CHECK(distance_to_kernel(v, W) ==
        doctest::Approx(std::sqrt(4.0 + 0.0 + 1.0)).epsilon(1e-14));
}

TEST_CASE("log log order fit") {
  SUBCASE("recovers an exact power law") {
    std::vector<double> h = {0.5, 0.25, 0.125, 0.0625};
    std::vector<double> d;
    for (double x : h) d.push_back(3.0 * x * x);
    OrderFit fit = fit_loglog(h, d);
    CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(fit.residual < 1e-12);
  }

  SUBCASE("rejects degenerate inputs") {
    CHECK_THROWS_AS((void)fit_loglog({1.0}, {1.0}), NumericalError);
    CHECK_THROWS_AS((void)fit_loglog({1.0, 0.5}, {1.0}), NumericalError);
  }
}

TEST_CASE("stationarity order of the divergence free mode") {
  LinearModel model = acoustics();

  SUBCASE("fully upwinded degree one reduces to first order") {
    // The one dimensional kernel of this scheme represents the divergence
    // free mode only to O(dx), one order below what the degree would allow.
    FluxMatrices flux = acoustic_flux(FluxKind::upwind);
    std::vector<double> h;
    for (int j = 3; j <= 6; ++j) h.push_back(std::pow(2.0, -j));
    StationarityOrder ord = steady_order_fit(model, flux, 1, 1.0, 0.7, h);
    REQUIRE_FALSE(ord.exact);
    CHECK(ord.fit.slope == doctest::Approx(1.0).epsilon(0.05));
    CHECK(ord.distances.size() == h.size());
    // Distances shrink monotonically with the spacing.
    for (size_t i = 1; i < ord.distances.size(); ++i)
      CHECK(ord.distances[i] < ord.distances[i - 1]);
  }

  SUBCASE("low Mach degree one reaches order two") {
    FluxMatrices flux = acoustic_flux(FluxKind::lowmach);
    std::vector<double> h;
    for (int j = 3; j <= 6; ++j) h.push_back(std::pow(2.0, -j));
    StationarityOrder ord = steady_order_fit(model, flux, 1, 1.0, 0.7, h);
    REQUIRE_FALSE(ord.exact);
    CHECK(ord.fit.slope == doctest::Approx(2.0).epsilon(0.05));
  }

  SUBCASE("zero wavevector is reported as exactly stationary") {
    FluxMatrices flux = acoustic_flux(FluxKind::upwind);
    StationarityOrder ord =
        steady_order_fit(model, flux, 1, 0.0, 0.0, {0.125, 0.0625});
    CHECK(ord.exact);
  }
}
