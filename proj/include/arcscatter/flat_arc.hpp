#pragma once

#include <vector>

#include "arcscatter/types.hpp"

namespace arcscatter {

/// Closed form of the unweighted flat-arc single layer applied to 1:
///   S0[1](x) = (1/2pi) (2 - (1-x) ln(1-x) - (1+x) ln(1+x)),
/// extended continuously to x = +-1 with value (2 - 2 ln2)/(2pi).
double s0_of_one(double x);

/// Closed form N0[1](x) = -1/(pi (1 - x^2)), |x| < 1.
double n0_of_one(double x);

struct NsOfOne {
  double value;          // N0[S0[1]](x) by principal-value quadrature
  double singular_part;  // (ln2 - 1) / (pi^2 (1 - x^2))
  double remainder;      // value - singular_part (square-integrable part)
};

/// N0 S0 [1] at x, split into the known non-integrable edge term and the
/// square-integrable remainder. Uses the analytic derivative of S0[1].
NsOfOne ns_of_one(double x);

/// |F(xi)|^2 where F(xi) = int_{-1}^{1} exp(-i xi x) S0[1](x) dx (the
/// transform of the zero extension). One entry per xi.
std::vector<double> fourier_decay_s0_one(const std::vector<double>& xi_grid);

/// Least-squares slope of log(envelope of |F|^2) against log(xi) over
/// [xi_min, xi_max]; the envelope at each grid point is the local maximum
/// over a short xi window (steps past the oscillation zeros).
double fourier_envelope_slope(double xi_min, double xi_max, int n_points);

/// Number of sign changes of Re F(xi) sampled on [xi_min, xi_max].
int fourier_sign_changes(double xi_min, double xi_max, int samples);

}  // namespace arcscatter
