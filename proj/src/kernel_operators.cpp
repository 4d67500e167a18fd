#include "arcscatter/kernel_operators.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "arcscatter/bessel.hpp"
#include "arcscatter/cosine_space.hpp"
#include "arcscatter/quadrature.hpp"

namespace arcscatter {
namespace {

// Symm eigenvalues s_n: int_0^pi ln|cos t - cos t'| cos(n t') dt' =
// -2 pi s_n cos(n t), with s_0 = ln2/2, s_n = 1/(2n).
std::vector<double> symm_eigenvalues(int n) {
  std::vector<double> s(n);
  s[0] = 0.5 * std::log(2.0);
  for (int m = 1; m < n; ++m) s[m] = 0.5 / m;
  return s;
}

// Assembles the coefficient-space matrix of the integral operator with
// kernel B1(i,j) ln|cos t_i - cos t_j| + B2(i,j) (weights already folded
// into B1/B2). The log part is exact for band-limited factors; the smooth
// part uses the midpoint rule on the interior grid.
template <typename B1Fn, typename B2Fn>
MatrixXc assemble_split_kernel(int n, const B1Fn& b1, const B2Fn& b2) {
  const NodalGrid grid(n);
  const Eigen::MatrixXd analysis = analysis_matrix(n);
  const Eigen::MatrixXd synthesis = synthesis_matrix(n);
  const std::vector<double> s = symm_eigenvalues(n);

  // P(i,j) = sum_n (-2 pi s_n) cos(n t_i) analysis(n, j): the exact action of
  // the log kernel on the cardinal function of node j.
  Eigen::MatrixXd modal(n, n);
  for (int i = 0; i < n; ++i)
    for (int m = 0; m < n; ++m)
      modal(i, m) = -2.0 * kPi * s[m] * std::cos(m * grid.nodes[i]);
  const Eigen::MatrixXd p = modal * analysis;

  MatrixXc nodal(n, n);
  const double h = kPi / n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      nodal(i, j) = b1(i, j) * p(i, j) + h * b2(i, j);

  return analysis.cast<Complex>() * nodal * synthesis.cast<Complex>();
}

struct GridFrames {
  std::vector<Arc::Frame> frame;
  std::vector<double> t;  // cos(theta_j)
};

GridFrames grid_frames(const Arc& arc, int n) {
  const NodalGrid grid(n);
  GridFrames g;
  g.frame.reserve(n);
  g.t.reserve(n);
  for (int j = 0; j < n; ++j) {
    const double t = std::cos(grid.nodes[j]);
    g.t.push_back(t);
    g.frame.push_back(arc.evaluate(t));
  }
  return g;
}

MatrixXc single_layer_matrix(const Arc& arc, double k, int n) {
  const GridFrames g = grid_frames(arc, n);
  std::vector<std::vector<KernelValue>> split(n, std::vector<KernelValue>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      split[i][j] = kernel_split(arc, k, g.t[i], g.t[j]);
  return assemble_split_kernel(
      n,
      [&](int i, int j) { return split[i][j].log_coefficient * g.frame[j].speed; },
      [&](int i, int j) { return split[i][j].smooth_part * g.frame[j].speed; });
}

MatrixXc ng_matrix(const Arc& arc, double k, int n) {
  if (k == 0.0) return MatrixXc::Zero(n, n);
  const NodalGrid grid(n);
  const GridFrames g = grid_frames(arc, n);
  std::vector<double> sin2(n);
  for (int j = 0; j < n; ++j) {
    const double sj = std::sin(grid.nodes[j]);
    sin2[j] = sj * sj;
  }
  std::vector<std::vector<KernelValue>> split(n, std::vector<KernelValue>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      split[i][j] = kernel_split(arc, k, g.t[i], g.t[j]);
  const double k2 = k * k;
  const auto weight = [&](int i, int j) {
    return k2 * g.frame[i].normal.dot(g.frame[j].normal) * sin2[j] *
           g.frame[j].speed;
  };
  return assemble_split_kernel(
      n,
      [&](int i, int j) { return split[i][j].log_coefficient * weight(i, j); },
      [&](int i, int j) { return split[i][j].smooth_part * weight(i, j); });
}

MatrixXc npv_matrix(const Arc& arc, double k, int n) {
  const auto inv_tau = [&arc](double t) { return 1.0 / arc.speed(t); };
  const MatrixXc minv = multiplication_matrix(inv_tau, n).entries;
  const MatrixXc s = single_layer_matrix(arc, k, n);
  return minv * d0_matrix(n).entries * s * minv * t0_matrix(n).entries;
}

double derivative_6th(const std::function<double(double)>& f, double s) {
  const double step = std::min(1e-4, (1.0 - std::abs(s)) / 8.0 + 1e-12);
  // 6th-order central difference, stencil stays inside (-1, 1)
  return (-f(s + 3 * step) + 9 * f(s + 2 * step) - 45 * f(s + step) +
          45 * f(s - step) - 9 * f(s - 2 * step) + f(s - 3 * step)) /
         (-60.0 * step);
}

}  // namespace

// Operators are assembled at a padded truncation and cut back to N x N so
// that the +1 band coupling of the Maue composition does not leak truncation
// error into the last retained columns.
constexpr int kAssemblyPad = 8;

AssembledOperator assemble_S(const Arc& arc, double k, int N) {
  if (N < 8) throw std::invalid_argument("assemble_S: N must be >= 8");
  if (k < 0.0) throw std::invalid_argument("assemble_S: k must be >= 0");
  OperatorMatrix op{
      single_layer_matrix(arc, k, N + kAssemblyPad).topLeftCorner(N, N), 0, 1};
  return {std::move(op), arc, k, AssembledOperator::Kind::Stilde, N};
}

AssembledOperator assemble_N_part(const Arc& arc, double k, int N,
                                  AssembledOperator::Kind part) {
  if (N < 8) throw std::invalid_argument("assemble_N: N must be >= 8");
  if (k < 0.0) throw std::invalid_argument("assemble_N: k must be >= 0");
  const int m = N + kAssemblyPad;
  switch (part) {
    case AssembledOperator::Kind::NgPart:
      return {{ng_matrix(arc, k, m).topLeftCorner(N, N), 1, 0}, arc, k, part, N};
    case AssembledOperator::Kind::NpvPart:
      return {{npv_matrix(arc, k, m).topLeftCorner(N, N), 1, 0}, arc, k, part, N};
    case AssembledOperator::Kind::Ntilde: {
      MatrixXc total =
          (ng_matrix(arc, k, m) + npv_matrix(arc, k, m)).topLeftCorner(N, N);
      return {{std::move(total), 1, 0}, arc, k, part, N};
    }
    case AssembledOperator::Kind::Stilde:
      break;
  }
  throw std::invalid_argument("assemble_N_part: not an N-operator part");
}

AssembledOperator assemble_N(const Arc& arc, double k, int N) {
  return assemble_N_part(arc, k, N, AssembledOperator::Kind::Ntilde);
}

double flat_unweighted(FlatKind kind,
                       const std::function<double(double)>& density, double x) {
  if (!(std::abs(x) < 1.0))
    throw std::domain_error("flat_unweighted: x must lie in (-1, 1)");
  constexpr double inv_2pi = 1.0 / (2.0 * kPi);

  if (kind == FlatKind::S0_param) {
    const double fx = density(x);
    // int ln|x-s| ds over [-1,1], closed form
    const double log_mass = (1.0 - x) * std::log(1.0 - x) +
                            (1.0 + x) * std::log(1.0 + x) - 2.0;
    const auto regular = [&](double s) {
      return s == x ? 0.0 : (density(s) - fx) * std::log(std::abs(x - s));
    };
    const double left = integrate(regular, -1.0, x, 1e-11).value;
    const double right = integrate(regular, x, 1.0, 1e-11).value;
    return -inv_2pi * (left + right + fx * log_mass);
  }

  // N0 via integration by parts: boundary terms plus a principal value of
  // phi'(s)/(x-s), the latter regularized on a symmetric window about x.
  const double f_plus = density(1.0);
  const double f_minus = density(-1.0);
  const auto dphi = [&](double s) { return derivative_6th(density, s); };
  const double window = std::min(1.0 - x, 1.0 + x);
  const double dphi_x = dphi(x);
  const auto symmetric = [&](double s) {
    return s == x ? 0.0 : (dphi(s) - dphi_x) / (x - s);
  };
  double pv = integrate(symmetric, x - window, x, 1e-10).value +
              integrate(symmetric, x, x + window, 1e-10).value;
  const auto plain = [&](double s) { return dphi(s) / (x - s); };
  if (x - window > -1.0) pv += integrate(plain, -1.0, x - window, 1e-10).value;
  if (x + window < 1.0) pv += integrate(plain, x + window, 1.0, 1e-10).value;
  return -inv_2pi * (f_plus / (1.0 - x) + f_minus / (1.0 + x) + pv);
}

}  // namespace arcscatter
