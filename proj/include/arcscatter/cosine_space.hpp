#pragma once

#include <vector>

#include "arcscatter/types.hpp"

namespace arcscatter {

/// Interior nodal grid theta_j = pi*(2j+1)/(2N), j = 0..N-1. These are the
/// Chebyshev first-kind points under t = cos(theta); all nodes stay strictly
/// inside (0, pi) so 1/sin(theta) factors remain finite.
struct NodalGrid {
  explicit NodalGrid(int n);
  int size() const { return static_cast<int>(nodes.size()); }
  std::vector<double> nodes;
};

/// Finite even-cosine expansion v(theta) = a0/2 + sum_{m>=1} a_m cos(m theta).
class CosineSeries {
 public:
  CosineSeries() = default;
  explicit CosineSeries(VectorXc coefficients) : a_(std::move(coefficients)) {}
  explicit CosineSeries(int n) : a_(VectorXc::Zero(n)) {}

  int size() const { return static_cast<int>(a_.size()); }
  const VectorXc& coefficients() const { return a_; }
  VectorXc& coefficients() { return a_; }
  Complex operator[](int m) const { return a_[m]; }

  /// Coefficients c with v = sum_n c_n cos(n theta)  (c0 = a0/2).
  VectorXc basis_coefficients() const;
  static CosineSeries from_basis_coefficients(const VectorXc& c);

  Complex evaluate(double theta) const;

 private:
  VectorXc a_;
};

/// Discrete cosine analysis at the interior grid: a_m = (2/N) sum_j v_j cos(m theta_j).
CosineSeries to_coefficients(const VectorXc& samples);

/// Synthesis of the series at the grid nodes.
VectorXc from_coefficients(const CosineSeries& series, const NodalGrid& grid);

/// || v ||_{H^s_e}: sqrt(|a0|^2 + 2 sum_{m>=1} m^{2s} |a_m|^2), s >= 0.
double sobolev_norm(const CosineSeries& series, double s);

/// Matrix of the analysis transform in the plain basis convention:
/// c = A v maps nodal samples to coefficients of v = sum_n c_n cos(n theta).
Eigen::MatrixXd analysis_matrix(int n);

/// Matrix of the synthesis transform, v = S c; exact inverse of analysis_matrix
/// on band-limited data.
Eigen::MatrixXd synthesis_matrix(int n);

}  // namespace arcscatter
