#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace humrec {

using Vec2f = Eigen::Vector2f;
using Vec3f = Eigen::Vector3f;
using Vec2d = Eigen::Vector2d;
using Vec3d = Eigen::Vector3d;
using Mat3f = Eigen::Matrix3f;
using Mat3d = Eigen::Matrix3d;

constexpr float kPi = 3.14159265358979323846f;

inline float deg_to_rad(float deg) { return deg * kPi / 180.0f; }
inline float rad_to_deg(float rad) { return rad * 180.0f / kPi; }

}  // namespace humrec
