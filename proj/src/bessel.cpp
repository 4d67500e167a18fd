#include "arcscatter/bessel.hpp"

#include <quadmath.h>

#include <cmath>
#include <stdexcept>

// Power series in extended precision for small and moderate arguments,
// Hankel asymptotic expansions beyond. The alternating series suffer
// cancellation that grows like e^x, so the moderate range 8 < x <= 16 runs
// in __float128; below 8 the 80-bit long double is enough. From x = 16 on,
// the optimally truncated asymptotic series is accurate to ~1e-15 absolute.

namespace arcscatter {
namespace {

constexpr double kSeriesSmall = 8.0;   // long double series up to here
constexpr double kSeriesLarge = 16.0;  // __float128 series up to here

template <typename F>
F log_half_arg(F x);
template <>
long double log_half_arg(long double x) { return logl(x / 2.0L); }
template <>
__float128 log_half_arg(__float128 x) { return logq(x / __float128(2)); }

template <typename F>
F series_j0(F x) {
  const F q = x * x / 4;
  F term = 1, sum = 1;
  for (int k = 1; k < 400; ++k) {
    term *= -q / (F(k) * F(k));
    sum += term;
    if (fabsq(static_cast<__float128>(term)) < 1e-40) break;
  }
  return sum;
}

template <typename F>
F series_j1(F x) {
  const F q = x * x / 4;
  F term = x / 2, sum = term;
  for (int k = 1; k < 400; ++k) {
    term *= -q / (F(k) * F(k + 1));
    sum += term;
    if (fabsq(static_cast<__float128>(term)) < 1e-40) break;
  }
  return sum;
}

// Sum part of Y0: (2/pi) * sum_{k>=1} (-1)^{k+1} H_k (x^2/4)^k / (k!)^2.
template <typename F>
F series_y0_sum(F x) {
  const F q = x * x / 4;
  F term = 1, sum = 0, harmonic = 0;
  for (int k = 1; k < 400; ++k) {
    term *= -q / (F(k) * F(k));
    harmonic += F(1) / F(k);
    sum -= term * harmonic;  // -(-1)^k = (-1)^{k+1}
    if (fabsq(static_cast<__float128>(term)) < 1e-40) break;
  }
  return F(2) / F(kPi) * sum;
}

// Sum part of Y1: (1/pi) * sum_{k>=0} (-1)^k (H_k + H_{k+1}) (x/2)^{2k+1} / (k!(k+1)!).
template <typename F>
F series_y1_sum(F x) {
  const F q = x * x / 4;
  F term = x / 2, harmonic_k = 0, harmonic_k1 = 1;
  F sum = term * (harmonic_k + harmonic_k1);
  for (int k = 1; k < 400; ++k) {
    term *= -q / (F(k) * F(k + 1));
    harmonic_k += F(1) / F(k);
    harmonic_k1 += F(1) / F(k + 1);
    sum += term * (harmonic_k + harmonic_k1);
    if (fabsq(static_cast<__float128>(term)) < 1e-40) break;
  }
  return sum / F(kPi);
}

template <typename F>
F series_y0(F x) {
  return F(2) / F(kPi) * (log_half_arg(x) + F(kEulerGamma)) * series_j0(x) +
         series_y0_sum(x);
}

template <typename F>
F series_y1(F x) {
  return F(2) / F(kPi) * (log_half_arg(x) + F(kEulerGamma)) * series_j1(x) -
         F(2) / (F(kPi) * x) - series_y1_sum(x);
}

// Hankel asymptotic amplitude sums P(nu,x), Q(nu,x); valid for x >= 16.
struct PQ {
  double p;
  double q;
};

PQ asymptotic_pq(int nu, double x) {
  const double mu = 4.0 * nu * nu;
  double a = 1.0;  // a_m, coefficient of x^{-m}
  double p = 1.0, q = 0.0;
  double prev = 1.0;
  for (int m = 0; m < 40; ++m) {
    const double odd = 2.0 * m + 1.0;
    a *= (mu - odd * odd) / (8.0 * (m + 1.0) * x);
    const double mag = std::abs(a);
    if (mag > prev) break;  // past the optimal truncation point
    prev = mag;
    // a now holds a_{m+1}/x^{m+1}; signs alternate in pairs
    const int idx = m + 1;
    const double sign = (idx / 2) % 2 == 0 ? 1.0 : -1.0;
    if (idx % 2 == 0)
      p += sign * a;
    else
      q += sign * a;
    if (mag < 1e-18) break;
  }
  return {p, q};
}

double asymptotic(BesselKind kind, double x) {
  const int nu = (kind == BesselKind::J1 || kind == BesselKind::Y1) ? 1 : 0;
  const bool is_y = kind == BesselKind::Y0 || kind == BesselKind::Y1;
  const PQ pq = asymptotic_pq(nu, x);
  const double chi = x - (nu == 0 ? 0.25 : 0.75) * kPi;
  const double amp = std::sqrt(2.0 / (kPi * x));
  const double c = std::cos(chi), s = std::sin(chi);
  return is_y ? amp * (pq.p * s + pq.q * c) : amp * (pq.p * c - pq.q * s);
}

void check_domain(double x, bool needs_positive) {
  if (x > 1.0e4)
    throw std::domain_error("bessel: argument above supported range (0, 1e4]");
  if (needs_positive ? !(x > 0.0) : !(x >= 0.0))
    throw std::domain_error("bessel: argument outside domain");
}

}  // namespace

double bessel_j0(double x) {
  check_domain(x, false);
  if (x <= kSeriesSmall) return static_cast<double>(series_j0<long double>(x));
  if (x <= kSeriesLarge) return static_cast<double>(series_j0<__float128>(x));
  return asymptotic(BesselKind::J0, x);
}

double bessel_j1(double x) {
  check_domain(x, false);
  if (x <= kSeriesSmall) return static_cast<double>(series_j1<long double>(x));
  if (x <= kSeriesLarge) return static_cast<double>(series_j1<__float128>(x));
  return asymptotic(BesselKind::J1, x);
}

double bessel_y0(double x) {
  check_domain(x, true);
  if (x <= kSeriesSmall) return static_cast<double>(series_y0<long double>(x));
  if (x <= kSeriesLarge) return static_cast<double>(series_y0<__float128>(x));
  return asymptotic(BesselKind::Y0, x);
}

double bessel_y1(double x) {
  check_domain(x, true);
  if (x <= kSeriesSmall) return static_cast<double>(series_y1<long double>(x));
  if (x <= kSeriesLarge) return static_cast<double>(series_y1<__float128>(x));
  return asymptotic(BesselKind::Y1, x);
}

double bessel_y0_regular(double z) {
  check_domain(z, false);
  if (z == 0.0) return 2.0 * kEulerGamma / kPi;
  if (z <= kSeriesSmall) {
    const long double x = z;
    return static_cast<double>(2.0L / kPi * kEulerGamma * series_j0(x) +
                               series_y0_sum(x));
  }
  if (z <= kSeriesLarge) {
    const __float128 x = z;
    return static_cast<double>(__float128(2) / __float128(kPi) *
                                   __float128(kEulerGamma) * series_j0(x) +
                               series_y0_sum(x));
  }
  return bessel_y0(z) - 2.0 / kPi * std::log(z / 2.0) * bessel_j0(z);
}

Complex bessel(BesselKind kind, double x) {
  switch (kind) {
    case BesselKind::J0:
      return bessel_j0(x);
    case BesselKind::J1:
      return bessel_j1(x);
    case BesselKind::Y0:
      return bessel_y0(x);
    case BesselKind::Y1:
      return bessel_y1(x);
    case BesselKind::H0_1:
      return {bessel_j0(x), bessel_y0(x)};
    case BesselKind::H1_1:
      return {bessel_j1(x), bessel_y1(x)};
  }
  throw std::logic_error("unreachable");
}

Complex helmholtz_kernel(double k, double R) {
  if (!(R > 0.0)) throw std::domain_error("helmholtz_kernel: R must be positive");
  if (k == 0.0) return -std::log(R) / (2.0 * kPi);
  return Complex(0.0, 0.25) * bessel(BesselKind::H0_1, k * R);
}

KernelValue kernel_split(const Arc& arc, double k, double t, double t2) {
  const double cr = arc.chord_ratio(t, t2);
  KernelValue out;
  if (k == 0.0) {
    out.log_coefficient = -1.0 / (2.0 * kPi);
    out.smooth_part = -std::log(cr) / (2.0 * kPi);
  } else {
    // (i/4) H0^1(z) = -J0(z)/(2*pi) * ln(z/2) + i/4 * J0(z) - y0_regular(z)/4
    // with z = k |t-t2| cr; the ln(z/2) splits into ln|t-t2| + ln(k cr / 2).
    const double z = k * std::abs(t - t2) * cr;
    const double j0 = bessel_j0(z);
    out.log_coefficient = -j0 / (2.0 * kPi);
    out.smooth_part = -j0 * std::log(k * cr / 2.0) / (2.0 * kPi) +
                      Complex(0.0, 0.25) * j0 - 0.25 * bessel_y0_regular(z);
  }
  out.value = t == t2 ? out.smooth_part
                      : out.log_coefficient * std::log(std::abs(t - t2)) +
                            out.smooth_part;
  return out;
}

}  // namespace arcscatter
