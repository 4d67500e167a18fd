#pragma once

#include <complex>
#include <Eigen/Dense>

namespace arcscatter {

using Complex = std::complex<double>;
using Vec2 = Eigen::Vector2d;
using VectorXc = Eigen::VectorXcd;
using MatrixXc = Eigen::MatrixXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kEulerGamma = 0.57721566490153286061;

}  // namespace arcscatter
