#pragma once

#include "arcscatter/arc.hpp"
#include "arcscatter/types.hpp"

namespace arcscatter {

enum class BesselKind { J0, J1, Y0, Y1, H0_1, H1_1 };

/// Bessel/Hankel function of the given kind. Supported range x in (0, 200]
/// for the Y/H kinds, x in [0, 200] for the J kinds.
Complex bessel(BesselKind kind, double x);

double bessel_j0(double x);
double bessel_j1(double x);
double bessel_y0(double x);
double bessel_y1(double x);

/// Y0(z) - (2/pi) * ln(z/2) * J0(z); entire, equals 2*gamma/pi at z = 0.
double bessel_y0_regular(double z);

/// Free-space Helmholtz kernel G_k evaluated at distance R > 0
/// ((i/4) H0^1(kR) for k > 0, -ln(R)/(2*pi) for k = 0).
Complex helmholtz_kernel(double k, double R);

/// Splitting of the parameter-space kernel
///   G_k(r(t), r(t2)) = log_coefficient * ln|t - t2| + smooth_part,
/// where both factors are smooth across the diagonal t2 = t.
struct KernelValue {
  Complex value;
  Complex log_coefficient;
  Complex smooth_part;
};

KernelValue kernel_split(const Arc& arc, double k, double t, double t2);

}  // namespace arcscatter
