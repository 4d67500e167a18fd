#pragma once

#include <string>
#include <vector>

#include "arcscatter/arc.hpp"
#include "arcscatter/canonical_operators.hpp"

namespace arcscatter {

struct SpectrumReport {
  std::string operator_kind;
  double k = 0.0;
  int resolution = 0;
  std::vector<Complex> eigenvalues;  // sorted by (re, im)
  double min_abs = 0.0;
  double max_abs = 0.0;
  Complex cluster_center;  // mean eigenvalue
  // distances from -1/4, quantiles {0.5, 0.8, 0.9, 1.0} of the sorted list
  std::vector<double> cluster_radius_quantiles;
  // sigma_j / sigma_0 for remainder operators; empty otherwise
  std::vector<double> singular_value_decay;
};

/// Dense eigensolve of the truncated operator; verifies per-pair residuals
/// ||A v - lambda v|| <= 1e-10 ||A|| on a sample of pairs.
SpectrumReport spectrum(const OperatorMatrix& op,
                        const std::string& kind = "operator", double k = 0.0);

/// Fraction of eigenvalues within the given distance of the center.
double cluster_fraction(const SpectrumReport& report, Complex center,
                        double radius);

struct CalderonReport {
  SpectrumReport product;    // spectrum of N S
  SpectrumReport remainder;  // singular values of K = N S - J0^tau
  int rank_cut_index = -1;   // smallest j with sigma_j < 1e-6 sigma_0
  double remainder_max_norm = 0.0;  // max |K_ij|
};

/// Forms K = N S - J0^tau on the given arc and reports the spectrum of the
/// product and the singular-value decay of the remainder.
CalderonReport calderon_remainder(const Arc& arc, double k, int N);

}  // namespace arcscatter
