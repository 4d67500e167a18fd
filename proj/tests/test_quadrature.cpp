#include <cmath>

#include "doctest.h"

#include "arcscatter/quadrature.hpp"

using namespace arcscatter;

TEST_CASE("polynomials and smooth integrands") {
  const auto poly = [](double x) { return 3.0 * x * x - x + 2.0; };
  CHECK(integrate(poly, -1.0, 2.0, 1e-13).value ==
        doctest::Approx(9.0 - 1.5 + 6.0).epsilon(1e-13));
  const auto osc = [](double x) { return std::sin(10.0 * x); };
  CHECK(integrate(osc, 0.0, kPi, 1e-13).value ==
        doctest::Approx((1.0 - std::cos(10.0 * kPi)) / 10.0).epsilon(1e-11));
}

TEST_CASE("integrable log singularity") {
  // int_0^1 ln(x) dx = -1
  const auto f = [](double x) { return std::log(x); };
  const QuadratureResult r = integrate(f, 0.0, 1.0, 1e-11);
  CHECK(r.value == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("complex integrand") {
  const auto f = [](double x) { return std::exp(Complex(0.0, 3.0 * x)); };
  const ComplexQuadratureResult r = integrate_complex(f, 0.0, 1.0, 1e-13);
  const Complex exact = (std::exp(Complex(0.0, 3.0)) - 1.0) / Complex(0.0, 3.0);
  CHECK(std::abs(r.value - exact) < 1e-12);
  CHECK(r.converged);
}

TEST_CASE("non-convergence is reported") {
  // 1/sqrt(x) is integrable but needs deep refinement; depth 3 cannot do it
  const auto f = [](double x) { return 1.0 / std::sqrt(x); };
  const QuadratureResult r = integrate(f, 0.0, 1.0, 1e-13, 3);
  CHECK_FALSE(r.converged);
}
