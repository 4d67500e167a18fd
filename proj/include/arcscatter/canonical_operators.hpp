#pragma once

#include <functional>

#include "arcscatter/arc.hpp"
#include "arcscatter/cosine_space.hpp"
#include "arcscatter/types.hpp"

namespace arcscatter {

/// Dense truncation of an operator acting on cosine coefficients in the plain
/// basis convention (column n = image of e_n = cos(n theta)). The Sobolev
/// offsets record the mapping order (e.g. +1 for the single-layer operator).
struct OperatorMatrix {
  MatrixXc entries;
  int domain_offset = 0;
  int codomain_offset = 0;
  bool band_loss = false;  // set when the top cosine mode was dropped

  int size() const { return static_cast<int>(entries.rows()); }
  CosineSeries apply(const CosineSeries& series) const;
};

// Zero-frequency flat-arc operators in the cosine basis.

/// Symm's operator: diagonal with entries ln2/2 (n = 0) and 1/(2n).
OperatorMatrix symm_matrix(int n);
OperatorMatrix symm_inverse(int n);

/// T0[g] = d/dtheta (g sin theta); maps e_n to (1+n)/2 e_{n+1} + (1-n)/2 e_{n-1}.
OperatorMatrix t0_matrix(int n);

/// D0[g] = (1/sin theta) dg/dtheta.
OperatorMatrix d0_matrix(int n);

/// Periodic Cesaro-type operator: e_0 -> 0, e_n -> sin(n theta)/(n sin theta).
OperatorMatrix cesaro_matrix(int n);

/// Upper-triangular closed form of J0 = N0 S0.
OperatorMatrix j0_closed_form(int n);

/// J0 through its averaging form
///   W0[g] = -g/4 - (cos(theta)/4) C[g] + (1-ln2)/(4 pi) * integral of g.
CosineSeries w0_apply(const CosineSeries& series);

/// I0 = J0^{-1} = -4 S0^{-1} C S0 T0.
OperatorMatrix j0_inverse(int n);

/// Multiplication by f(cos theta) as a coefficient-space matrix (nodal
/// multiplication conjugated with the transforms).
OperatorMatrix multiplication_matrix(const std::function<double(double)>& f, int n);

enum class TauKind { S0tau, N0tau, J0tau };

/// Speed-conjugated operators: S0 Z0, Z0^{-1} N0, Z0^{-1} J0 Z0, where Z0 is
/// multiplication by tau(cos theta).
OperatorMatrix tau_conjugated(const Arc& arc, TauKind kind, int n);

/// Discrete eigenvalues of J0: -ln2/4 (n = 0) and -1/4 - 1/(4n).
double lambda_infinity(int n);

/// True iff lambda lies in the open set
///   4s + 2 < -(Re lambda + 1/4) / ((Re lambda + 1/4)^2 + (Im lambda)^2).
bool lambda_s_membership(Complex lambda, double s);

struct SpectrumPoint {
  enum class Membership { DiscreteLambdaInfinity, OpenRegionLambdaS, Outside };
  Complex lambda;
  Complex z;  // 8 lambda + 2
  Membership membership;
  int discrete_index = -1;  // valid for the discrete branch
};

SpectrumPoint classify_spectrum_point(Complex lambda, double s);

struct EigenfunctionCoefficients {
  VectorXc f;  // f_0 .. f_{n_max}
  bool f0_sum_converged;
};

/// Coefficients of a candidate eigenfunction of J0 for eigenvalue lambda,
/// generated by the two-step recurrence seeded with (f1, f2); f0 recovered
/// from the zeroth-order relation.
EigenfunctionCoefficients eigenfunction_coefficients(Complex lambda, Complex f1,
                                                     Complex f2, int n_max);

}  // namespace arcscatter
