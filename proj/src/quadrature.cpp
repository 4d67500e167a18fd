#include "arcscatter/quadrature.hpp"

#include <cmath>

namespace arcscatter {
namespace {

// Kronrod-15 abscissae on [0,1] (positive half) and weights; the odd-indexed
// abscissae are the embedded Gauss-7 points.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <typename T>
struct PanelResult {
  T value;
  double error;
};

template <typename T, typename F>
PanelResult<T> gk15(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  T fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(center - half * kXgk[i]);
    fv[14 - i] = f(center + half * kXgk[i]);
  }
  fv[7] = f(center);
  T kron = kWgk[7] * fv[7];
  T gauss = kWg[3] * fv[7];
  for (int i = 0; i < 7; ++i) {
    kron += kWgk[i] * (fv[i] + fv[14 - i]);
    if (i % 2 == 1) gauss += kWg[i / 2] * (fv[i] + fv[14 - i]);
  }
  kron *= half;
  gauss *= half;
  return {kron, std::abs(kron - gauss)};
}

template <typename T, typename F>
void adaptive(const F& f, double a, double b, double tol, int depth,
              int max_depth, T& value, double& err, bool& converged) {
  const PanelResult<T> panel = gk15<T>(f, a, b);
  if (panel.error <= tol || depth >= max_depth) {
    value += panel.value;
    err += panel.error;
    if (panel.error > tol) converged = false;
    return;
  }
  const double mid = 0.5 * (a + b);
  adaptive(f, a, mid, 0.5 * tol, depth + 1, max_depth, value, err, converged);
  adaptive(f, mid, b, 0.5 * tol, depth + 1, max_depth, value, err, converged);
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double tol, int max_depth) {
  double value = 0.0, err = 0.0;
  bool converged = true;
  adaptive<double>(f, a, b, tol, 0, max_depth, value, err, converged);
  return {value, err, converged};
}

ComplexQuadratureResult integrate_complex(
    const std::function<Complex(double)>& f, double a, double b, double tol,
    int max_depth) {
  Complex value = 0.0;
  double err = 0.0;
  bool converged = true;
  adaptive<Complex>(f, a, b, tol, 0, max_depth, value, err, converged);
  return {value, err, converged};
}

}  // namespace arcscatter
