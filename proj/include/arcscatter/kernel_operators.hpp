#pragma once

#include <functional>

#include "arcscatter/arc.hpp"
#include "arcscatter/canonical_operators.hpp"

namespace arcscatter {

/// Coefficient-space discretization of a weighted boundary operator on a
/// given arc at wavenumber k and truncation N.
struct AssembledOperator {
  enum class Kind { Stilde, Ntilde, NgPart, NpvPart };

  OperatorMatrix matrix;
  Arc arc;
  double k = 0.0;
  Kind kind = Kind::Stilde;
  int resolution = 0;
};

/// Weighted single-layer operator: for an even density gamma,
///   S[gamma](theta) = int_0^pi G_k(r(cos theta), r(cos theta')) gamma tau dtheta'.
/// The log-singular part of the kernel is integrated exactly against cosine
/// modes (product quadrature); the smooth remainder uses the midpoint rule.
AssembledOperator assemble_S(const Arc& arc, double k, int N);

/// Weighted hypersingular operator, assembled through the split N = Ng + Npv:
/// Ng carries the weakly singular k^2 G_k (n . n') sin^2(theta') part and
/// Npv is the Maue-type composition (1/tau) D0 S (1/tau) T0.
AssembledOperator assemble_N(const Arc& arc, double k, int N);

AssembledOperator assemble_N_part(const Arc& arc, double k, int N,
                                  AssembledOperator::Kind part);

enum class FlatKind { S0_param, N0_param };

/// Pointwise unweighted flat-arc operators in parameter space:
///   S0[phi](x) = -(1/2pi) int_{-1}^{1} ln|x-s| phi(s) ds,
///   N0[phi](x) = -(1/2pi) [phi(1)/(1-x) + phi(-1)/(1+x)
///                          + pv int_{-1}^{1} phi'(s)/(x-s) ds].
/// phi' is taken by high-order finite differences of the callable.
double flat_unweighted(FlatKind kind, const std::function<double(double)>& density,
                       double x);

}  // namespace arcscatter
