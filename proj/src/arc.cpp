#include "arcscatter/arc.hpp"

#include <cmath>

namespace arcscatter {

Arc::Arc(Family f, double opening, double amplitude, int frequency)
    : family_(f), opening_(opening), amplitude_(amplitude), frequency_(frequency) {}

Arc Arc::flat_segment() { return Arc(Family::FlatSegment, 0.0, 0.0, 0); }

Arc Arc::circular(double opening) {
  if (opening <= 0.0 || opening >= 2.0 * kPi)
    throw std::invalid_argument("circular arc opening must lie in (0, 2*pi)");
  return Arc(Family::CircularArc, opening, 0.0, 0);
}

Arc Arc::perturbed_flat(double amplitude, int frequency) {
  if (frequency <= 0)
    throw std::invalid_argument("perturbed flat arc needs a positive integer frequency");
  return Arc(Family::PerturbedFlat, 0.0, amplitude, frequency);
}

void Arc::check_param(double t) const {
  if (!(t >= -1.0 && t <= 1.0))
    throw std::domain_error("arc parameter outside [-1,1]");
}

Vec2 Arc::point(double t) const {
  check_param(t);
  switch (family_) {
    case Family::FlatSegment:
      return {t, 0.0};
    case Family::CircularArc: {
      const double a = 0.5 * opening_ * t;
      return {std::cos(a), std::sin(a)};
    }
    case Family::PerturbedFlat:
      return {t, amplitude_ * std::sin(kPi * frequency_ * t)};
  }
  throw std::logic_error("unreachable");
}

Vec2 Arc::derivative(double t) const {
  check_param(t);
  switch (family_) {
    case Family::FlatSegment:
      return {1.0, 0.0};
    case Family::CircularArc: {
      const double h = 0.5 * opening_;
      return {-h * std::sin(h * t), h * std::cos(h * t)};
    }
    case Family::PerturbedFlat:
      return {1.0, amplitude_ * kPi * frequency_ * std::cos(kPi * frequency_ * t)};
  }
  throw std::logic_error("unreachable");
}

Arc::Frame Arc::evaluate(double t) const {
  const Vec2 p = point(t);
  const Vec2 d = derivative(t);
  const double tau = d.norm();
  const Vec2 tangent = d / tau;
  // tangent = clockwise rotation of normal  <=>  normal = counter-clockwise
  // rotation of tangent.
  const Vec2 normal{-tangent.y(), tangent.x()};
  return {p, tau, normal, tangent};
}

double Arc::chord_ratio(double t, double t2) const {
  check_param(t);
  check_param(t2);
  const double h = t - t2;
  if (std::abs(h) < 1e-6) {
    // midpoint limit: |r(t)-r(t2)| = |h| * (tau(tm) + O(h^2))
    return speed(0.5 * (t + t2));
  }
  return (point(t) - point(t2)).norm() / std::abs(h);
}

}  // namespace arcscatter
