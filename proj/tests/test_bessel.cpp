#include <algorithm>
#include <cmath>

#include <gsl/gsl_sf_bessel.h>

#include "doctest.h"

#include "arcscatter/bessel.hpp"

using namespace arcscatter;

TEST_CASE("special values") {
  CHECK(bessel_j0(0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(bessel_j1(0.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(bessel_j0(1.0) == doctest::Approx(0.7651976865579666).epsilon(1e-14));
  CHECK(bessel_y0(1.0) == doctest::Approx(0.08825696421567696).epsilon(1e-13));
}

TEST_CASE("reference comparison over a log-spaced grid") {
  // independent reference implementation
  for (int i = 0; i <= 160; ++i) {
    const double x = 1e-3 * std::pow(200.0 / 1e-3, i / 160.0);
    // allow for the reference's own rounding when the value is large
    const double y0 = gsl_sf_bessel_Y0(x), y1 = gsl_sf_bessel_Y1(x);
    CHECK(std::abs(bessel_j0(x) - gsl_sf_bessel_J0(x)) < 1e-13);
    CHECK(std::abs(bessel_j1(x) - gsl_sf_bessel_J1(x)) < 1e-13);
    CHECK(std::abs(bessel_y0(x) - y0) < 1e-13 + 1e-15 * std::abs(y0));
    CHECK(std::abs(bessel_y1(x) - y1) < 1e-13 + 1e-15 * std::abs(y1));
  }
}

TEST_CASE("wronskian identity") {
  for (int i = 0; i <= 60; ++i) {
    const double x = 0.05 * std::pow(200.0 / 0.05, i / 60.0);
    const double w = bessel_j1(x) * bessel_y0(x) - bessel_j0(x) * bessel_y1(x);
    CHECK(std::abs(w - 2.0 / (kPi * x)) < 1e-12);
  }
}

TEST_CASE("hankel combinations") {
  const double x = 3.7;
  const Complex h0 = bessel(BesselKind::H0_1, x);
  CHECK(h0.real() == doctest::Approx(bessel_j0(x)).epsilon(1e-15));
  CHECK(h0.imag() == doctest::Approx(bessel_y0(x)).epsilon(1e-15));
}

TEST_CASE("regularized y0 is entire across zero") {
  CHECK(bessel_y0_regular(0.0) ==
        doctest::Approx(2.0 * kEulerGamma / kPi).epsilon(1e-14));
  for (double z : {1e-8, 1e-3, 0.5, 2.0, 7.9, 8.1, 15.9, 16.1, 50.0}) {
    const double direct =
        gsl_sf_bessel_Y0(z) - 2.0 / kPi * std::log(z / 2.0) * gsl_sf_bessel_J0(z);
    CHECK(std::abs(bessel_y0_regular(z) - direct) < 1e-12);
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(bessel_y0(0.0), std::domain_error);
  CHECK_THROWS_AS(bessel(BesselKind::H1_1, -1.0), std::domain_error);
  CHECK_THROWS_AS(bessel_j0(2e4), std::domain_error);
}

TEST_CASE("kernel split reassembles the Hankel kernel") {
  const Arc arc = Arc::perturbed_flat(0.2, 2);
  for (double k : {0.5, 2.0, 11.0}) {
    for (double t : {-0.7, 0.05, 0.6}) {
      for (double dt : {1e-4, 1e-2, 0.3, 1.2}) {
        const double t2 = std::clamp(t + dt, -1.0, 1.0);
        const KernelValue kv = kernel_split(arc, k, t, t2);
        const double r = (arc.point(t) - arc.point(t2)).norm();
        const Complex direct = Complex(0.0, 0.25) * bessel(BesselKind::H0_1, k * r);
        CHECK(std::abs(kv.value - direct) < 1e-12 * std::abs(direct) + 1e-14);
        const Complex reassembled =
            kv.log_coefficient * std::log(std::abs(t - t2)) + kv.smooth_part;
        CHECK(std::abs(kv.value - reassembled) < 1e-13);
        // the log coefficient is -J0(k |r - r'|)/(2 pi)
        CHECK(std::abs(kv.log_coefficient + bessel_j0(k * r) / (2.0 * kPi)) <
              1e-13);
      }
    }
  }
}

TEST_CASE("kernel split k=0 flat") {
  const Arc arc = Arc::flat_segment();
  const KernelValue kv = kernel_split(arc, 0.0, 0.1, 0.5);
  CHECK(std::abs(kv.value + std::log(0.4) / (2.0 * kPi)) < 1e-15);
  CHECK(std::abs(kv.smooth_part) < 1e-15);
  const KernelValue diag = kernel_split(arc, 0.0, 0.3, 0.3);
  CHECK(std::abs(diag.smooth_part) < 1e-15);
}

TEST_CASE("kernel split smooth part continuous at the diagonal") {
  const Arc arc = Arc::perturbed_flat(0.2, 2);
  const double k = 3.0, t = 0.2;
  const Complex at = kernel_split(arc, k, t, t).smooth_part;
  for (double h : {1e-3, 1e-5}) {
    const Complex near = kernel_split(arc, k, t, t + h).smooth_part;
    CHECK(std::abs(near - at) < 100.0 * h);
  }
}

TEST_CASE("k to zero limit of the split matches the k=0 branch") {
  const Arc arc = Arc::flat_segment();
  const double k = 1e-8;
  const KernelValue small = kernel_split(arc, k, 0.1, 0.4);
  const KernelValue zero = kernel_split(arc, 0.0, 0.1, 0.4);
  // smooth part differs by the -ln(k/2)/(2 pi) + i/4 - gamma/(2 pi) constant
  const Complex shift = Complex(-std::log(k / 2.0) / (2.0 * kPi) -
                                    kEulerGamma / (2.0 * kPi),
                                0.25);
  CHECK(std::abs(small.log_coefficient - zero.log_coefficient) < 1e-10);
  CHECK(std::abs(small.smooth_part - shift - zero.smooth_part) < 1e-10);
}
