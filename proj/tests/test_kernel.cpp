#include <doctest.h>

#include <cmath>
#include <complex>

#include "statdg/evolution.hpp"
#include "statdg/fixtures.hpp"
#include "statdg/kernel.hpp"

using namespace statdg;

namespace {

Eigen::MatrixXcd acoustic_evolution(FluxKind kind, int degree, double kx,
                                    double ky, double dx, double dy) {
  LinearModel model = acoustics();
  FluxMatrices flux = acoustic_flux(kind);
  BasisSet basis(degree);
  return assemble_evolution_matrix(model, flux, basis, kx, ky, dx, dy);
}

}  // namespace

TEST_CASE("null space extraction") {
  SUBCASE("identity has empty kernel") {
    Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(6, 6);
    KernelSample s = null_space(I);
    CHECK(s.dim == 0);
    CHECK_FALSE(s.ambiguous);
    CHECK(s.basis.cols() == 0);
  }

  SUBCASE("rank deficient matrix with a clean gap") {
    Eigen::MatrixXcd E = Eigen::MatrixXcd::Zero(4, 4);
    E(0, 0) = 2.0;
    E(1, 1) = std::complex<double>(0.0, 1.0);
    E(2, 2) = 1e-14;
    KernelSample s = null_space(E);
    CHECK(s.dim == 2);
    CHECK_FALSE(s.ambiguous);
    REQUIRE(s.basis.cols() == 2);
    for (int c = 0; c < 2; ++c)
      CHECK((E * s.basis.col(c)).norm() < 1e-12);
  }

  SUBCASE("smeared spectrum is flagged ambiguous") {
    // Singular values 1, 1e-7, 1e-9: the candidate cut at rel_tol 1e-9
    // leaves less than three decades between kept and discarded.
    Eigen::MatrixXcd E = Eigen::MatrixXcd::Zero(3, 3);
    E(0, 0) = 1.0;
    E(1, 1) = 1e-7;
    E(2, 2) = 1e-9;
    KernelSample s = null_space(E, 1e-8);
    CHECK(s.ambiguous);
  }

  SUBCASE("refined SVD agrees with the plain one on a clean case") {
    Eigen::MatrixXcd E =
        acoustic_evolution(FluxKind::upwind, 1, 1.0, 0.7, 0.1, 0.1);
    KernelSample plain = null_space(E);
    KernelSample fine = null_space(E, 1e-9, true);
    REQUIRE(plain.dim == fine.dim);
    REQUIRE(plain.dim == 1);
    const std::complex<double> overlap =
        (plain.basis.col(0).adjoint() * fine.basis.col(0))(0, 0);
    CHECK(std::abs(overlap) == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("stationary subspaces of the acoustic scheme") {
  const double kx = 1.0, ky = 0.7;

  SUBCASE("full upwinding keeps a one dimensional kernel at degree one") {
    Eigen::MatrixXcd E =
        acoustic_evolution(FluxKind::upwind, 1, kx, ky, 0.1, 0.1);
    KernelSample s = null_space(E);
    REQUIRE(s.dim == 1);
    CHECK_FALSE(s.ambiguous);
    CHECK(kernel_residual(E, s.basis.col(0)) < 1e-12);
  }

  SUBCASE("computed kernel is collinear with the archived closed form") {
    const double dx = 0.1, dy = 0.1;
    FixtureSet set = load_fixtures(default_fixture_path());
    const KernelFixture* fix = nullptr;
    for (const auto& k : set.kernels)
      if (k.flux == "upwind" && k.degree == 1) fix = &k;
    REQUIRE(fix != nullptr);
    REQUIRE(fix->vectors.size() == 1);

    Eigen::MatrixXcd E = acoustic_evolution(FluxKind::upwind, 1, kx, ky, dx, dy);
    KernelSample s = null_space(E);
    REQUIRE(s.dim == 1);

    const std::complex<double> tx = std::exp(std::complex<double>(0.0, kx * dx));
    const std::complex<double> ty = std::exp(std::complex<double>(0.0, ky * dy));
    Eigen::VectorXcd w = eval_fixture_vector(fix->vectors[0], tx, ty, dx, dy);
    const double cosangle =
        std::abs((s.basis.col(0).adjoint() * w)(0, 0)) / w.norm();
    CHECK(cosangle == doctest::Approx(1.0).epsilon(1e-9));
  }

  SUBCASE("rusanov flux damps every mode at low degree") {
    Eigen::MatrixXcd E =
        acoustic_evolution(FluxKind::rusanov, 1, kx, ky, 0.1, 0.1);
    KernelSample s = null_space(E);
    CHECK(s.dim == 0);
    CHECK_FALSE(s.ambiguous);
  }

  SUBCASE("central flux kernel has no pressure content") {
    // Stationary states of the central scheme are pressure free; every
    // kernel vector must vanish on the pressure block.
    for (int K : {1, 2}) {
      Eigen::MatrixXcd E = acoustic_evolution(FluxKind::central, K, kx, ky, 1.0, 1.0);
      KernelSample s = null_space(E);
      REQUIRE(s.dim == (K + 1) * (K + 1));
      const int nloc = (K + 1) * (K + 1);
      for (int c = 0; c < s.dim; ++c) {
        const double pnorm = s.basis.col(c).segment(2 * nloc, nloc).norm();
        CHECK(pnorm < 1e-9);
      }
    }
  }

  SUBCASE("kernel dimension is invariant under grid rescaling") {
    for (double h : {1.0, 0.25, 0.05}) {
      Eigen::MatrixXcd E =
          acoustic_evolution(FluxKind::lowmach, 2, kx, ky, h, 0.77 * h);
      KernelSample s = null_space(E);
      CHECK(s.dim == 9);
      CHECK_FALSE(s.ambiguous);
    }
  }
}

TEST_CASE("kernel dimension sweep over wavenumbers") {
  LinearModel model = acoustics();

  struct Row {
    FluxKind kind;
    int degree;
    int dim;
  };
  // Dimension laws: upwind K^2, rusanov max(K-1, 0)^2, central and
  // low mach (K+1)^2 with the central count starting at degree one.
  const Row table[] = {
      {FluxKind::upwind, 1, 1},   {FluxKind::upwind, 2, 4},
      {FluxKind::upwind, 3, 9},   {FluxKind::rusanov, 0, 0},
      {FluxKind::rusanov, 1, 0},  {FluxKind::rusanov, 2, 1},
      {FluxKind::rusanov, 3, 4},  {FluxKind::central, 1, 4},
      {FluxKind::central, 2, 9},  {FluxKind::central, 3, 16},
      {FluxKind::lowmach, 0, 1},  {FluxKind::lowmach, 1, 4},
      {FluxKind::lowmach, 2, 9},  {FluxKind::lowmach, 3, 16},
  };

  for (const Row& row : table) {
    CAPTURE(to_string(row.kind));
    CAPTURE(row.degree);
    FluxMatrices flux = acoustic_flux(row.kind);
    KernelSweep sweep = kernel_dim_sweep(model, flux, row.degree, 1.0, 1.0);
    CHECK(sweep.min_dim == row.dim);
    CHECK(sweep.max_dim == row.dim);
    CHECK(sweep.verdict == (row.dim > 0 ? "stationarity_preserving"
                                        : "not_stationarity_preserving"));
    for (const KernelSample& s : sweep.samples) CHECK_FALSE(s.ambiguous);
  }
}

TEST_CASE("default wavenumber samples") {
  auto ks = default_k_samples(1.0, 1.0);
  CHECK(ks.size() == 64);
  double kmin = 1e30, kmax = -1e30;
  for (auto [kx, ky] : ks) {
    kmin = std::min({kmin, kx, ky});
    kmax = std::max({kmax, kx, ky});
  }
  CHECK(kmin == doctest::Approx(0.3));
  CHECK(kmax == doctest::Approx(2.9));
}
