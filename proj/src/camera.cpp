#include "humrec/camera.hpp"

#include <cmath>
#include <stdexcept>

namespace humrec {

Camera::Camera(const Vec3f& pos, const Vec3f& ax, float fov_deg, int w, int h)
    : position(pos), axis(ax.normalized()), fov_y_deg(fov_deg), width(w), height(h) {
  if (!(fov_deg > 0.0f && fov_deg < 180.0f)) throw std::invalid_argument("Camera: fov out of range");
  if (w <= 0 || h <= 0) throw std::invalid_argument("Camera: non-positive resolution");
}

Vec3f Camera::right() const {
  Vec3f up(0.0f, 1.0f, 0.0f);
  if (std::abs(axis.dot(up)) > 0.999f) up = Vec3f(0.0f, 0.0f, 1.0f);
  return up.cross(axis).normalized();
}

Vec3f Camera::down() const {
  // Image y grows downward; world up projects to negative image y.
  return -axis.cross(right()).normalized();
}

float Camera::tan_half_fov() const { return std::tan(deg_to_rad(fov_y_deg) * 0.5f); }

float Camera::pixel_pitch(float depth) const {
  return 2.0f * tan_half_fov() * depth / static_cast<float>(height);
}

Vec3f Camera::pixel_ray(float u, float v) const {
  const float half_h = 0.5f * static_cast<float>(height);
  const float t = tan_half_fov();
  const float xn = (u + 0.5f - 0.5f * static_cast<float>(width)) / half_h * t;
  const float yn = (v + 0.5f - half_h) / half_h * t;
  return axis + xn * right() + yn * down();
}

Vec3f Camera::unproject(float u, float v, float depth) const {
  return position + depth * pixel_ray(u, v);
}

void Camera::project(const Vec3f& p, float& u, float& v, float& depth) const {
  const Vec3f rel = p - position;
  depth = rel.dot(axis);
  const float half_h = 0.5f * static_cast<float>(height);
  const float t = tan_half_fov();
  const float xn = rel.dot(right()) / depth;
  const float yn = rel.dot(down()) / depth;
  u = xn / t * half_h + 0.5f * static_cast<float>(width) - 0.5f;
  v = yn / t * half_h + half_h - 0.5f;
}

Vec3f Camera::to_camera_normal(const Vec3f& n) const {
  return Vec3f(n.dot(right()), n.dot(down()), n.dot(-axis));
}

Vec3f Camera::to_world_normal(const Vec3f& n_cam) const {
  return n_cam.x() * right() + n_cam.y() * down() - n_cam.z() * axis;
}

}  // namespace humrec
