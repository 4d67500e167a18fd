#include "arcscatter/flat_arc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "arcscatter/quadrature.hpp"

namespace arcscatter {
namespace {

constexpr double kLn2 = 0.69314718055994530942;

double check_interior(double x) {
  if (!(std::abs(x) < 1.0))
    throw std::domain_error("flat_arc: x must lie in (-1, 1)");
  return x;
}

// d/dx S0[1](x) = (1/2pi) (ln(1-x) - ln(1+x))
double s0_of_one_derivative(double s) {
  return (std::log(1.0 - s) - std::log(1.0 + s)) / (2.0 * kPi);
}

// Gauss-Legendre 10-point rule on [-1, 1].
constexpr double kGx[5] = {0.14887433898163121089, 0.43339539412924719080,
                           0.67940956829902440623, 0.86506336668898451073,
                           0.97390652851717172008};
constexpr double kGw[5] = {0.29552422471475287017, 0.26926671930999635509,
                           0.21908636251598204400, 0.14945134915058059315,
                           0.06667134430868813759};

template <typename F>
double gauss10(const F& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < 5; ++i)
    sum += kGw[i] * (f(c - h * kGx[i]) + f(c + h * kGx[i]));
  return h * sum;
}

// F(xi) = 2 int_0^1 cos(xi x) S0[1](x) dx: composite Gauss panels sized to
// the oscillation, geometrically graded toward the endpoint x = 1 where the
// integrand's derivative is log-singular.
double fourier_transform_s0(double xi) {
  const auto f = [xi](double x) { return std::cos(xi * x) * s0_of_one(x); };
  const double width = std::min(0.125, kPi / std::max(xi, 1.0));
  double value = 0.0;
  // graded tail: panels [1 - 2^-m, 1 - 2^-(m+1)]
  int m0 = 0;
  while (std::ldexp(1.0, -m0) > width) ++m0;
  double a = 0.0;
  const double tail_start = 1.0 - std::ldexp(1.0, -m0);
  const int uniform_panels =
      std::max(1, static_cast<int>(std::ceil(tail_start / width)));
  const double w = tail_start / uniform_panels;
  for (int p = 0; p < uniform_panels; ++p, a += w)
    value += gauss10(f, a, a + w);
  for (int m = m0; m < 54; ++m)
    value += gauss10(f, 1.0 - std::ldexp(1.0, -m), 1.0 - std::ldexp(1.0, -m - 1));
  return 2.0 * value;
}

}  // namespace

double s0_of_one(double x) {
  if (!(std::abs(x) <= 1.0 + 1e-9))
    throw std::domain_error("s0_of_one: x must lie in [-1, 1]");
  x = std::clamp(x, -1.0, 1.0);  // tolerate roundoff at the endpoints
  const double a = 1.0 - x, b = 1.0 + x;
  const double la = a > 0.0 ? a * std::log(a) : 0.0;
  const double lb = b > 0.0 ? b * std::log(b) : 0.0;
  return (2.0 - la - lb) / (2.0 * kPi);
}

double n0_of_one(double x) {
  check_interior(x);
  return -1.0 / (kPi * (1.0 - x * x));
}

NsOfOne ns_of_one(double x) {
  check_interior(x);
  const double edge_value = (2.0 - 2.0 * kLn2) / (2.0 * kPi);  // S0[1](+-1)
  const double window = std::min(1.0 - x, 1.0 + x);
  const double dx = s0_of_one_derivative(x);
  const auto symmetric = [&](double s) {
    return s == x ? 0.0 : (s0_of_one_derivative(s) - dx) / (x - s);
  };
  double pv = integrate(symmetric, x - window, x, 1e-11).value +
              integrate(symmetric, x, x + window, 1e-11).value;
  const auto plain = [&](double s) { return s0_of_one_derivative(s) / (x - s); };
  if (x - window > -1.0) pv += integrate(plain, -1.0, x - window, 1e-11).value;
  if (x + window < 1.0) pv += integrate(plain, x + window, 1.0, 1e-11).value;

  NsOfOne out;
  out.value = -(edge_value / (1.0 - x) + edge_value / (1.0 + x) + pv) /
              (2.0 * kPi);
  out.singular_part = (kLn2 - 1.0) / (kPi * kPi * (1.0 - x * x));
  out.remainder = out.value - out.singular_part;
  return out;
}

std::vector<double> fourier_decay_s0_one(const std::vector<double>& xi_grid) {
  std::vector<double> out;
  out.reserve(xi_grid.size());
  for (double xi : xi_grid) {
    if (!(xi >= 0.0))
      throw std::domain_error("fourier_decay_s0_one: xi must be >= 0");
    const double f = fourier_transform_s0(xi);
    out.push_back(f * f);
  }
  return out;
}

double fourier_envelope_slope(double xi_min, double xi_max, int n_points) {
  if (!(xi_min > 0.0 && xi_max > xi_min && n_points >= 4))
    throw std::invalid_argument("fourier_envelope_slope: bad range");
  const double lr = std::log(xi_max / xi_min);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n_points; ++i) {
    const double xi = xi_min * std::exp(lr * i / (n_points - 1));
    // envelope: maximum of |F|^2 over one oscillation period past xi
    double env = 0.0;
    for (int j = 0; j <= 12; ++j) {
      const double f = fourier_transform_s0(xi + 2.0 * kPi * j / 12.0);
      env = std::max(env, f * f);
    }
    const double lx = std::log(xi), ly = std::log(env);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = n_points;
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

int fourier_sign_changes(double xi_min, double xi_max, int samples) {
  if (!(samples >= 2))
    throw std::invalid_argument("fourier_sign_changes: need >= 2 samples");
  int changes = 0;
  double prev = fourier_transform_s0(xi_min);
  for (int i = 1; i < samples; ++i) {
    const double xi = xi_min + (xi_max - xi_min) * i / (samples - 1);
    const double cur = fourier_transform_s0(xi);
    if (prev * cur < 0.0) ++changes;
    if (cur != 0.0) prev = cur;
  }
  return changes;
}

}  // namespace arcscatter
