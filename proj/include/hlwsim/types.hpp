#pragma once

#include <Eigen/Dense>

namespace hlwsim {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Vec3 = Eigen::Vector3d;
using Vec2 = Eigen::Vector2d;

}  // namespace hlwsim
