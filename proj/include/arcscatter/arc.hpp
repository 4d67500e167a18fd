#pragma once

#include <stdexcept>

#include "arcscatter/types.hpp"

namespace arcscatter {

/// Smooth open arc parametrized over [-1,1].
///
/// The tangent is the 90-degree clockwise rotation of the normal, and the
/// parametrization satisfies dr/dt = |dr/dt| * tangent.
class Arc {
 public:
  enum class Family { FlatSegment, CircularArc, PerturbedFlat };

  struct Frame {
    Vec2 point;
    double speed;    // tau(t) = |dr/dt|, always > 0
    Vec2 normal;     // unit
    Vec2 tangent;    // unit, clockwise rotation of normal
  };

  static Arc flat_segment();
  /// Circular sub-arc of the unit circle spanning `opening` radians,
  /// r(t) = (cos(opening*t/2), sin(opening*t/2)).
  static Arc circular(double opening);
  /// r(t) = (t, amplitude * sin(pi * frequency * t)).
  static Arc perturbed_flat(double amplitude, int frequency);

  Family family() const { return family_; }
  double opening() const { return opening_; }
  double amplitude() const { return amplitude_; }
  int frequency() const { return frequency_; }

  Vec2 point(double t) const;
  Vec2 derivative(double t) const;  // dr/dt
  double speed(double t) const { return derivative(t).norm(); }

  Frame evaluate(double t) const;

  /// |r(t) - r(t2)| / |t - t2|, extended by tau(t) across the diagonal.
  /// Smooth and strictly positive for smooth arcs.
  double chord_ratio(double t, double t2) const;

 private:
  Arc(Family f, double opening, double amplitude, int frequency);
  void check_param(double t) const;

  Family family_;
  double opening_ = 0.0;
  double amplitude_ = 0.0;
  int frequency_ = 0;
};

}  // namespace arcscatter
