#pragma once

#include "humrec/math.hpp"

namespace humrec {

// Perspective pinhole camera. The stored depth of a pixel is the distance
// along the principal axis, not the Euclidean ray length. Square pixels; the
// vertical field of view spans the image height.
struct Camera {
  Vec3f position = Vec3f(0.0f, 0.0f, -1.0f);
  Vec3f axis = Vec3f(0.0f, 0.0f, 1.0f);  // unit principal axis
  float fov_y_deg = 50.0f;
  int width = 512;
  int height = 512;

  Camera() = default;
  Camera(const Vec3f& pos, const Vec3f& ax, float fov_deg, int w, int h);

  // Orthonormal image basis: right follows image x, down follows image y.
  Vec3f right() const;
  Vec3f down() const;

  float tan_half_fov() const;

  // Scene units per pixel for a surface at unit axis distance.
  float pixel_pitch(float depth = 1.0f) const;

  // Ray direction for pixel center (u,v), scaled so that dir.dot(axis) == 1;
  // the point at axis-depth d is position + d * dir.
  Vec3f pixel_ray(float u, float v) const;

  Vec3f unproject(float u, float v, float depth) const;

  // Returns pixel coordinates and axis depth of a world point.
  void project(const Vec3f& p, float& u, float& v, float& depth) const;

  // World normal -> camera-space normal (x right, y down, z toward camera).
  Vec3f to_camera_normal(const Vec3f& n) const;
  Vec3f to_world_normal(const Vec3f& n_cam) const;
};

}  // namespace humrec
