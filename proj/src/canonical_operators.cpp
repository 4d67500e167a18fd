#include "arcscatter/canonical_operators.hpp"

#include <cmath>
#include <stdexcept>

namespace arcscatter {

namespace {

void check_size(int n, int minimum) {
  if (n < minimum) throw std::invalid_argument("operator truncation too small");
}

constexpr double kLn2 = 0.69314718055994530942;

}  // namespace

CosineSeries OperatorMatrix::apply(const CosineSeries& series) const {
  if (series.size() != size())
    throw std::invalid_argument("OperatorMatrix::apply: size mismatch");
  return CosineSeries::from_basis_coefficients(entries *
                                               series.basis_coefficients());
}

OperatorMatrix symm_matrix(int n) {
  check_size(n, 2);
  OperatorMatrix op{MatrixXc::Zero(n, n), 0, 1};
  op.entries(0, 0) = 0.5 * kLn2;
  for (int m = 1; m < n; ++m) op.entries(m, m) = 0.5 / m;
  return op;
}

OperatorMatrix symm_inverse(int n) {
  check_size(n, 2);
  OperatorMatrix op{MatrixXc::Zero(n, n), 1, 0};
  op.entries(0, 0) = 2.0 / kLn2;
  for (int m = 1; m < n; ++m) op.entries(m, m) = 2.0 * m;
  return op;
}

OperatorMatrix t0_matrix(int n) {
  check_size(n, 2);
  OperatorMatrix op{MatrixXc::Zero(n, n), 1, 0};
  op.entries(1, 0) = 1.0;  // T0[e_0] = cos(theta)
  for (int c = 1; c < n; ++c) {
    if (c + 1 < n)
      op.entries(c + 1, c) = 0.5 * (1.0 + c);
    else
      op.band_loss = true;  // e_n term of the last column falls off the band
    op.entries(c - 1, c) = 0.5 * (1.0 - c);
  }
  return op;
}

// sin(n theta)/sin(theta) expanded in cosines (Chebyshev U_{n-1}):
//   n-1 = 2p   : sum_{k=0}^{p} (2 - delta_{0k}) cos(2k theta)
//   n-1 = 2p+1 : 2 sum_{k=0}^{p} cos((2k+1) theta)
static void add_dirichlet_column(MatrixXc& m, int col, int n, Complex scale) {
  if (n == 0) return;
  if ((n - 1) % 2 == 0) {
    const int p = (n - 1) / 2;
    for (int k = 0; k <= p; ++k)
      m(2 * k, col) += (k == 0 ? 1.0 : 2.0) * scale;
  } else {
    const int p = (n - 2) / 2;
    for (int k = 0; k <= p; ++k) m(2 * k + 1, col) += 2.0 * scale;
  }
}

OperatorMatrix d0_matrix(int n) {
  check_size(n, 2);
  OperatorMatrix op{MatrixXc::Zero(n, n), 2, 0};
  for (int c = 1; c < n; ++c)
    add_dirichlet_column(op.entries, c, c, -static_cast<double>(c));
  return op;
}

OperatorMatrix cesaro_matrix(int n) {
  check_size(n, 2);
  OperatorMatrix op{MatrixXc::Zero(n, n), 0, 0};
  for (int c = 1; c < n; ++c)
    add_dirichlet_column(op.entries, c, c, 1.0 / static_cast<double>(c));
  return op;
}

OperatorMatrix j0_closed_form(int n) {
  check_size(n, 2);
  OperatorMatrix op{MatrixXc::Zero(n, n), 0, 0};
  for (int c = 0; c < n; ++c) {
    op.entries(c, c) = lambda_infinity(c);
    if (c == 0) continue;
    const double fill = -0.5 / c;
    if (c % 2 == 0) {
      for (int k = 0; k < c / 2; ++k)
        op.entries(2 * k, c) = fill * (k == 0 ? 0.5 : 1.0);
    } else {
      for (int k = 0; k < (c - 1) / 2; ++k) op.entries(2 * k + 1, c) = fill;
    }
  }
  return op;
}

CosineSeries w0_apply(const CosineSeries& series) {
  const int n = series.size();
  const VectorXc c = series.basis_coefficients();
  const VectorXc cesaro = cesaro_matrix(n).entries * c;
  VectorXc out = -0.25 * c;
  // cos(theta) * Cesaro part, exact three-term shift (top mode dropped)
  if (n > 1) out[1] -= 0.25 * cesaro[0];
  for (int m = 1; m < n; ++m) {
    if (m + 1 < n) out[m + 1] -= 0.125 * cesaro[m];
    out[m - 1] -= 0.125 * cesaro[m];
  }
  // (1-ln2)/(4 pi) * integral, with integral over (0,pi) equal to pi * c0
  out[0] += (1.0 - kLn2) / 4.0 * c[0];
  return CosineSeries::from_basis_coefficients(out);
}

OperatorMatrix j0_inverse(int n) {
  check_size(n, 4);
  OperatorMatrix op{MatrixXc::Zero(n, n), 0, 0};
  op.entries = -4.0 * (symm_inverse(n).entries * cesaro_matrix(n).entries *
                       symm_matrix(n).entries * t0_matrix(n).entries);
  op.band_loss = true;
  return op;
}

OperatorMatrix multiplication_matrix(const std::function<double(double)>& f,
                                     int n) {
  check_size(n, 2);
  const NodalGrid grid(n);
  Eigen::VectorXd values(n);
  for (int j = 0; j < n; ++j) values[j] = f(std::cos(grid.nodes[j]));
  OperatorMatrix op{MatrixXc::Zero(n, n), 0, 0};
  op.entries = (analysis_matrix(n) * values.asDiagonal() * synthesis_matrix(n))
                   .cast<Complex>();
  return op;
}

OperatorMatrix tau_conjugated(const Arc& arc, TauKind kind, int n) {
  check_size(n, 2);
  const NodalGrid grid(n);
  for (double theta : grid.nodes)
    if (!(arc.speed(std::cos(theta)) > 0.0))
      throw std::domain_error("tau_conjugated: non-positive arc speed");
  const auto tau = [&arc](double t) { return arc.speed(t); };
  const auto inv_tau = [&arc](double t) { return 1.0 / arc.speed(t); };
  const MatrixXc z0 = multiplication_matrix(tau, n).entries;
  const MatrixXc z0_inv = multiplication_matrix(inv_tau, n).entries;
  switch (kind) {
    case TauKind::S0tau:
      return {symm_matrix(n).entries * z0, 0, 1};
    case TauKind::N0tau: {
      const OperatorMatrix t0 = t0_matrix(n);
      MatrixXc n0 = d0_matrix(n).entries * symm_matrix(n).entries * t0.entries;
      return {z0_inv * n0, 1, 0, t0.band_loss};
    }
    case TauKind::J0tau:
      return {z0_inv * j0_closed_form(n).entries * z0, 0, 0};
  }
  throw std::logic_error("unreachable");
}

double lambda_infinity(int n) {
  if (n < 0) throw std::invalid_argument("lambda_infinity: n must be >= 0");
  if (n == 0) return -kLn2 / 4.0;
  return -0.25 - 0.25 / n;
}

bool lambda_s_membership(Complex lambda, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("lambda_s_membership: s must be > 0");
  const double x = lambda.real() + 0.25;
  const double y = lambda.imag();
  const double denom = x * x + y * y;
  if (denom == 0.0) return false;  // boundary point -1/4 is excluded
  return 4.0 * s + 2.0 < -x / denom;
}

SpectrumPoint classify_spectrum_point(Complex lambda, double s) {
  SpectrumPoint pt{lambda, 8.0 * lambda + 2.0,
                   SpectrumPoint::Membership::Outside, -1};
  constexpr double tol = 1e-12;
  if (std::abs(lambda - Complex(lambda_infinity(0))) < tol) {
    pt.membership = SpectrumPoint::Membership::DiscreteLambdaInfinity;
    pt.discrete_index = 0;
    return pt;
  }
  if (std::abs(lambda.imag()) < tol && lambda.real() < -0.25) {
    const double n_est = -1.0 / (4.0 * lambda.real() + 1.0);
    const int n = static_cast<int>(std::lround(n_est));
    if (n >= 1 && std::abs(lambda.real() - lambda_infinity(n)) < tol) {
      pt.membership = SpectrumPoint::Membership::DiscreteLambdaInfinity;
      pt.discrete_index = n;
      return pt;
    }
  }
  if (lambda_s_membership(lambda, s))
    pt.membership = SpectrumPoint::Membership::OpenRegionLambdaS;
  return pt;
}

EigenfunctionCoefficients eigenfunction_coefficients(Complex lambda, Complex f1,
                                                     Complex f2, int n_max) {
  if (n_max < 4) throw std::invalid_argument("eigenfunction_coefficients: n_max >= 4");
  const Complex z = 8.0 * lambda + 2.0;
  const bool discrete =
      classify_spectrum_point(lambda, 1.0).membership ==
      SpectrumPoint::Membership::DiscreteLambdaInfinity;
  if (z.real() >= 0.0 && !discrete)
    throw std::domain_error(
        "eigenfunction_coefficients: Re(8 lambda + 2) must be negative");

  VectorXc f = VectorXc::Zero(n_max + 1);
  f[1] = f1;
  f[2] = f2;
  for (int n = 1; n + 2 <= n_max; ++n) {
    const Complex num = 0.5 * z + 1.0 / static_cast<double>(n);
    const Complex den = 0.5 * z - 1.0 / static_cast<double>(n + 2);
    if (std::abs(den) < 1e-300)
      throw std::domain_error("eigenfunction_coefficients: resonant lambda");
    f[n + 2] = f[n] * num / den;
  }

  // Zeroth relation: (1/4) sum_k f_{2k}/(2k) = f0 (-ln2/4 - lambda).
  Complex sum = 0.0;
  for (int k = 1; 2 * k <= n_max; ++k) sum += f[2 * k] / (2.0 * k);
  sum *= 0.25;
  const Complex mu = Complex(-0.69314718055994530942 / 4.0) - lambda;
  if (std::abs(mu) < 1e-14) {
    // lambda = lambda_0: e_0 itself is the eigenvector when the even chain
    // vanishes.
    if (std::abs(sum) > 1e-12)
      throw std::domain_error(
          "eigenfunction_coefficients: inconsistent zeroth-order relation");
    f[0] = 1.0;
  } else {
    f[0] = sum / mu;
  }

  // Tail estimate for the f0 sum: flag when the last retained terms still
  // carry relative weight.
  double tail = 0.0;
  for (int k = n_max / 2 - 4; 2 * k <= n_max; ++k)
    if (k >= 1) tail += std::abs(f[2 * k]) / (2.0 * k);
  const bool converged = tail <= 1e-8 * (std::abs(sum) + 1e-300) ||
                         std::abs(sum) < 1e-300;
  return {std::move(f), converged};
}

}  // namespace arcscatter
