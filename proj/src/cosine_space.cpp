#include "arcscatter/cosine_space.hpp"

#include <cmath>
#include <stdexcept>

namespace arcscatter {

NodalGrid::NodalGrid(int n) {
  if (n <= 0) throw std::invalid_argument("NodalGrid: N must be positive");
  nodes.resize(n);
  for (int j = 0; j < n; ++j) nodes[j] = kPi * (2.0 * j + 1.0) / (2.0 * n);
}

VectorXc CosineSeries::basis_coefficients() const {
  VectorXc c = a_;
  if (c.size() > 0) c[0] *= 0.5;
  return c;
}

CosineSeries CosineSeries::from_basis_coefficients(const VectorXc& c) {
  VectorXc a = c;
  if (a.size() > 0) a[0] *= 2.0;
  return CosineSeries(std::move(a));
}

Complex CosineSeries::evaluate(double theta) const {
  Complex v = 0.5 * a_[0];
  for (int m = 1; m < size(); ++m) v += a_[m] * std::cos(m * theta);
  return v;
}

CosineSeries to_coefficients(const VectorXc& samples) {
  const int n = static_cast<int>(samples.size());
  if (n == 0) throw std::invalid_argument("to_coefficients: empty sample vector");
  const NodalGrid grid(n);
  VectorXc a(n);
  for (int m = 0; m < n; ++m) {
    Complex s = 0.0;
    for (int j = 0; j < n; ++j) s += samples[j] * std::cos(m * grid.nodes[j]);
    a[m] = 2.0 * s / static_cast<double>(n);
  }
  return CosineSeries(std::move(a));
}

VectorXc from_coefficients(const CosineSeries& series, const NodalGrid& grid) {
  if (series.size() != grid.size())
    throw std::invalid_argument("from_coefficients: size mismatch");
  const int n = grid.size();
  VectorXc v(n);
  for (int j = 0; j < n; ++j) {
    Complex s = 0.5 * series[0];
    for (int m = 1; m < n; ++m) s += series[m] * std::cos(m * grid.nodes[j]);
    v[j] = s;
  }
  return v;
}

Eigen::MatrixXd analysis_matrix(int n) {
  const NodalGrid grid(n);
  Eigen::MatrixXd a(n, n);
  for (int m = 0; m < n; ++m)
    for (int j = 0; j < n; ++j)
      a(m, j) = (m == 0 ? 1.0 : 2.0) / n * std::cos(m * grid.nodes[j]);
  return a;
}

Eigen::MatrixXd synthesis_matrix(int n) {
  const NodalGrid grid(n);
  Eigen::MatrixXd s(n, n);
  for (int j = 0; j < n; ++j)
    for (int m = 0; m < n; ++m) s(j, m) = std::cos(m * grid.nodes[j]);
  return s;
}

double sobolev_norm(const CosineSeries& series, double s) {
  if (s < 0.0) throw std::invalid_argument("sobolev_norm: s must be >= 0");
  double sum = std::norm(series[0]);
  for (int m = 1; m < series.size(); ++m)
    sum += 2.0 * std::pow(static_cast<double>(m), 2.0 * s) * std::norm(series[m]);
  return std::sqrt(sum);
}

}  // namespace arcscatter
