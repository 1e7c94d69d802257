#include <doctest.h>

#include <cmath>

#include "statdg/basis.hpp"
#include "statdg/quadrature.hpp"

using namespace statdg;

TEST_CASE("orthonormal Legendre basis") {
  SUBCASE("orthonormality up to degree 6") {
    BasisSet basis(6);
    QuadratureRule rule = gauss_legendre(10);
    for (int k = 0; k <= 6; ++k) {
      for (int a = 0; a <= 6; ++a) {
        double s = 0.0;
        for (int g = 0; g < rule.size(); ++g)
          s += rule.weights[g] * basis.value(k, rule.nodes[g]) *
               basis.value(a, rule.nodes[g]);
        CHECK(s == doctest::Approx(k == a ? 1.0 : 0.0).epsilon(1e-12));
      }
    }
  }

  SUBCASE("traces") {
    BasisSet basis(4);
    for (int k = 0; k <= 4; ++k) {
      const double r = std::sqrt(2.0 * k + 1.0);
      CHECK(basis.trace_right(k) == doctest::Approx(r).epsilon(1e-14));
      CHECK(basis.trace_left(k) ==
            doctest::Approx((k % 2 == 0 ? 1.0 : -1.0) * r).epsilon(1e-14));
      CHECK(basis.value(k, 0.5) == doctest::Approx(r).epsilon(1e-13));
      CHECK(basis.value(k, -0.5) ==
            doctest::Approx((k % 2 == 0 ? 1.0 : -1.0) * r).epsilon(1e-13));
    }
  }

  SUBCASE("stiffness closed form") {
    // D[k][a] = 2 sqrt((2k+1)(2a+1)) when a < k and k - a odd, else 0.
    BasisSet basis(5);
    const auto& D = basis.stiffness();
    for (int k = 0; k <= 5; ++k) {
      for (int a = 0; a <= 5; ++a) {
        const double want = (a < k && (k - a) % 2 == 1)
                                ? 2.0 * std::sqrt((2.0 * k + 1) * (2.0 * a + 1))
                                : 0.0;
        CHECK(D[k][a] == doctest::Approx(want).epsilon(1e-12));
      }
    }
    CHECK(D[2][1] == doctest::Approx(2.0 * std::sqrt(15.0)).epsilon(1e-14));
    CHECK(D[1][0] == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-14));
  }

  SUBCASE("stiffness against quadrature of the derivative") {
    BasisSet basis(6);
    QuadratureRule rule = gauss_legendre(10);
    const auto& D = basis.stiffness();
    for (int k = 0; k <= 6; ++k) {
      for (int a = 0; a <= 6; ++a) {
        double s = 0.0;
        for (int g = 0; g < rule.size(); ++g)
          s += rule.weights[g] * basis.deriv(k, rule.nodes[g]) *
               basis.value(a, rule.nodes[g]);
        CHECK(s == doctest::Approx(D[k][a]).epsilon(1e-11));
      }
    }
  }

  SUBCASE("integration by parts identity") {
    // D[k][a] + D[a][k] = b_k b_a at +1/2 minus at -1/2.
    BasisSet basis(6);
    const auto& D = basis.stiffness();
    for (int k = 0; k <= 6; ++k) {
      for (int a = 0; a <= 6; ++a) {
        const double boundary = basis.trace_right(k) * basis.trace_right(a) -
                                basis.trace_left(k) * basis.trace_left(a);
        CHECK(D[k][a] + D[a][k] == doctest::Approx(boundary).epsilon(1e-12));
      }
    }
  }

  SUBCASE("monomial coefficients evaluate to the same polynomial") {
    BasisSet basis(5);
    const auto& mono = basis.monomial_coeffs();
    for (int k = 0; k <= 5; ++k) {
      for (double x : {-0.5, -0.21, 0.0, 0.37, 0.5}) {
        double p = 0.0;
        for (int j = static_cast<int>(mono[k].size()) - 1; j >= 0; --j)
          p = p * x + mono[k][j];
        CHECK(p == doctest::Approx(basis.value(k, x)).epsilon(1e-12));
      }
    }
  }

  SUBCASE("first members") {
    BasisSet basis(2);
    CHECK(basis.value(0, 0.3) == doctest::Approx(1.0));
    CHECK(basis.value(1, 0.3) == doctest::Approx(std::sqrt(3.0) * 0.6));
    // b_2(x) = sqrt(5) (6x^2 - 1/2); at x = 0.3: sqrt(5) * 0.04
    CHECK(basis.value(2, 0.3) == doctest::Approx(std::sqrt(5.0) * 0.04));
  }
}
