#pragma once

#include <functional>

#include "arcscatter/types.hpp"

namespace arcscatter {

/// Adaptive Gauss-Kronrod (G7-K15) quadrature of f over [a, b] to the given
/// absolute tolerance. Bisects until the embedded error estimate of each
/// panel is below its share of the tolerance or max_depth is reached.
struct QuadratureResult {
  double value;
  double error_estimate;
  bool converged;
};

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double tol = 1e-12, int max_depth = 30);

struct ComplexQuadratureResult {
  Complex value;
  double error_estimate;
  bool converged;
};

ComplexQuadratureResult integrate_complex(
    const std::function<Complex(double)>& f, double a, double b,
    double tol = 1e-12, int max_depth = 30);

}  // namespace arcscatter
