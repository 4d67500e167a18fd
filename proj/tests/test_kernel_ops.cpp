#include <cmath>

#include "doctest.h"

#include "arcscatter/bessel.hpp"
#include "arcscatter/flat_arc.hpp"
#include "arcscatter/kernel_operators.hpp"

using namespace arcscatter;

namespace {

double max_abs(const MatrixXc& m) { return m.cwiseAbs().maxCoeff(); }

VectorXc smooth_density(int n) {
  VectorXc c = VectorXc::Zero(n);
  for (int m = 0; m < std::min(n, 8); ++m) c[m] = std::pow(0.5, m);
  return c;
}

// operator columns restricted to the first n/2 coefficients of a fixed
// smooth density, compared across resolutions
VectorXc apply_truncated(const MatrixXc& op, int keep) {
  const int n = static_cast<int>(op.rows());
  const VectorXc x = smooth_density(n);
  return (op * x).head(keep);
}

}  // namespace

TEST_CASE("flat single layer at k=0 is the Symm diagonal") {
  const int n = 32;
  const MatrixXc s = assemble_S(Arc::flat_segment(), 0.0, n).matrix.entries;
  const MatrixXc s0 = symm_matrix(n).entries;
  CHECK(max_abs(s - s0) < 1e-12);
}

TEST_CASE("flat hypersingular at k=0 matches the operator calculus") {
  const int n = 32;
  const AssembledOperator full = assemble_N(Arc::flat_segment(), 0.0, n);
  const AssembledOperator ng =
      assemble_N_part(Arc::flat_segment(), 0.0, n, AssembledOperator::Kind::NgPart);
  CHECK(max_abs(ng.matrix.entries) == 0.0);
  const MatrixXc expect =
      d0_matrix(n).entries * symm_matrix(n).entries * t0_matrix(n).entries;
  CHECK(max_abs((full.matrix.entries - expect).leftCols(n - 2)) < 1e-11);

  // N[e_1] = -e_1 and N[e_2] = -(1/2) e_0 - (3/2) e_2
  VectorXc e = VectorXc::Zero(n);
  e[1] = 1.0;
  VectorXc image = full.matrix.entries * e;
  image[1] += 1.0;
  CHECK(image.cwiseAbs().maxCoeff() < 1e-11);
  e.setZero();
  e[2] = 1.0;
  image = full.matrix.entries * e;
  image[0] += 0.5;
  image[2] += 1.5;
  CHECK(image.cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("n splits into ng + npv") {
  const int n = 24;
  const Arc arc = Arc::perturbed_flat(0.2, 2);
  const double k = 3.0;
  const MatrixXc total = assemble_N(arc, k, n).matrix.entries;
  const MatrixXc ng =
      assemble_N_part(arc, k, n, AssembledOperator::Kind::NgPart).matrix.entries;
  const MatrixXc npv =
      assemble_N_part(arc, k, n, AssembledOperator::Kind::NpvPart).matrix.entries;
  CHECK(max_abs(total - ng - npv) < 1e-13);
}

TEST_CASE("single layer self-convergence is super-algebraic") {
  const Arc arc = Arc::perturbed_flat(0.2, 2);
  const double k = 5.0;
  const int keep = 16;
  const VectorXc ref =
      apply_truncated(assemble_S(arc, k, 256).matrix.entries, keep);
  double prev_err = -1.0;
  double last_ratio = 0.0;
  for (int n : {32, 64, 128}) {
    const VectorXc cur =
        apply_truncated(assemble_S(arc, k, n).matrix.entries, keep);
    const double err = (cur - ref).norm();
    if (prev_err > 0.0) last_ratio = prev_err / std::max(err, 1e-300);
    prev_err = err;
  }
  CHECK(last_ratio > 256.0);  // faster than 2^8 between N=64 and N=128
}

TEST_CASE("hypersingular self-convergence is super-algebraic") {
  const Arc arc = Arc::perturbed_flat(0.2, 2);
  const double k = 5.0;
  const int keep = 16;
  const VectorXc ref =
      apply_truncated(assemble_N(arc, k, 256).matrix.entries, keep);
  double err64 = 0.0, err128 = 0.0;
  {
    const VectorXc cur =
        apply_truncated(assemble_N(arc, k, 64).matrix.entries, keep);
    err64 = (cur - ref).norm();
  }
  {
    const VectorXc cur =
        apply_truncated(assemble_N(arc, k, 128).matrix.entries, keep);
    err128 = (cur - ref).norm();
  }
  CHECK(err64 / std::max(err128, 1e-300) > 256.0);
}

TEST_CASE("single layer bilinear form is symmetric") {
  // G_k(r, r') symmetry: <S phi, psi>_tau = <phi, S psi>_tau for smooth
  // densities, with the tau-weighted pairing evaluated on a fine grid.
  const int n = 64;
  const Arc arc = Arc::perturbed_flat(0.2, 2);
  const double k = 4.0;
  const MatrixXc s = assemble_S(arc, k, n).matrix.entries;
  VectorXc phi = VectorXc::Zero(n), psi = VectorXc::Zero(n);
  for (int m = 0; m < 10; ++m) {
    phi[m] = std::pow(0.6, m);
    psi[m] = std::pow(0.5, m) * (m % 2 ? -1.0 : 1.0);
  }
  const VectorXc s_phi = s * phi, s_psi = s * psi;
  const auto series = [](const VectorXc& c, double theta) {
    Complex v = 0.0;
    for (int m = 0; m < c.size(); ++m) v += c[m] * std::cos(m * theta);
    return v;
  };
  const int fine = 512;
  Complex lhs = 0.0, rhs = 0.0;
  for (int j = 0; j < fine; ++j) {
    const double theta = kPi * (2 * j + 1) / (2.0 * fine);
    const double tau = arc.speed(std::cos(theta));
    lhs += series(s_phi, theta) * series(psi, theta) * tau;
    rhs += series(phi, theta) * series(s_psi, theta) * tau;
  }
  CHECK(std::abs(lhs - rhs) * (kPi / fine) < 1e-10);
}

TEST_CASE("split bookkeeping: smooth part consistent with direct kernel") {
  // off the diagonal the smooth part must equal the directly evaluated
  // kernel minus the log term (independent computation route)
  const int n = 24;
  const Arc arc = Arc::perturbed_flat(0.2, 2);
  const double k = 3.0;
  const NodalGrid grid(n);
  double dev = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double t = std::cos(grid.nodes[i]), t2 = std::cos(grid.nodes[j]);
      const KernelValue kv = kernel_split(arc, k, t, t2);
      const double r = (arc.point(t) - arc.point(t2)).norm();
      const Complex direct = Complex(0.0, 0.25) * bessel(BesselKind::H0_1, k * r);
      const Complex smooth2 =
          direct - kv.log_coefficient * std::log(std::abs(t - t2));
      dev = std::max(dev, std::abs(smooth2 - kv.smooth_part));
    }
  CHECK(dev < 1e-11);
}

TEST_CASE("k continuity toward the zero-frequency assembly") {
  // the k -> 0 operator limit minus the analytic ln k shift reproduces the
  // k = 0 assembly
  const int n = 32;
  const Arc arc = Arc::flat_segment();
  const double k = 1e-7;
  const MatrixXc sk = assemble_S(arc, k, n).matrix.entries;
  const MatrixXc s0 = assemble_S(arc, 0.0, n).matrix.entries;
  // constant kernel shift c = -ln(k/2)/(2 pi) - gamma/(2 pi) + i/4 acts as
  // c * integral: in coefficients, c * pi * <column e_0 row e_0 pairing>
  const Complex c(-std::log(k / 2.0) / (2.0 * kPi) -
                      kEulerGamma / (2.0 * kPi),
                  0.25);
  MatrixXc shift = MatrixXc::Zero(n, n);
  shift(0, 0) = c * kPi;  // int_0^pi of e_0 against constant kernel
  CHECK(max_abs(sk - s0 - shift) < 1e-9);
}

TEST_CASE("pointwise flat operators against closed forms") {
  const auto one = [](double) { return 1.0; };
  CHECK(flat_unweighted(FlatKind::S0_param, one, 0.0) ==
        doctest::Approx(1.0 / kPi).epsilon(1e-10));
  CHECK(flat_unweighted(FlatKind::N0_param, one, 0.0) ==
        doctest::Approx(-1.0 / kPi).epsilon(1e-10));
  CHECK(flat_unweighted(FlatKind::N0_param, one, 0.5) ==
        doctest::Approx(-4.0 / (3.0 * kPi)).epsilon(1e-10));
  // non-constant density: S0 against an independent series evaluation
  // S0[T_1](x): int ln|x-s| s ds has closed form; use quadrature consistency
  const auto linear = [](double s) { return s; };
  const double direct = flat_unweighted(FlatKind::S0_param, linear, 0.3);
  // closed form: -(1/2pi) * [ (1/2)(s^2 - x^2) ln|x-s| ... ] evaluated via
  // the antiderivative int ln|x-s| s ds
  // = [ (s^2/2) ln|x-s| ] with parts: int s ln|x-s| ds
  //   = (s^2 - x^2)/2 * ln|x-s| - (s + x)^2/4 - ... ; simpler: numeric
  // high-resolution oracle with substitution s = x + u^3 to absorb the log
  double oracle = 0.0;
  {
    const int m = 20000;
    double sum = 0.0;
    for (int i = 0; i < m; ++i) {
      const double s = -1.0 + 2.0 * (i + 0.5) / m;
      const double d = std::abs(0.3 - s);
      if (d > 1e-12) sum += std::log(d) * s;
    }
    oracle = -(2.0 / m) * sum / (2.0 * kPi);
  }
  CHECK(direct == doctest::Approx(oracle).epsilon(2e-4));
  CHECK_THROWS_AS(flat_unweighted(FlatKind::S0_param, one, 1.0),
                  std::domain_error);
}

TEST_CASE("consistency triangle with ns_of_one") {
  const auto s0 = [](double s) { return s0_of_one(s); };
  for (double x : {0.0, 0.5, -0.5}) {
    const double via_flat = flat_unweighted(FlatKind::N0_param, s0, x);
    const double via_ns = ns_of_one(x).value;
    CHECK(std::abs(via_flat - via_ns) < 1e-6);
  }
}
