#pragma once

#include <cstdint>
#include <vector>

#include "humrec/camera.hpp"
#include "humrec/image.hpp"
#include "humrec/mesh.hpp"

namespace humrec {

struct DirectionalLight {
  Vec3f direction = Vec3f(0, 0, 1);  // direction of travel, unit length
  Vec3f color = Vec3f(1, 1, 1);
  float intensity = 1.0f;
};

struct LightRig {
  float ambient = 0.3f;
  std::vector<DirectionalLight> lights;
};

// Draws the rig used for synthetic training images: directions uniform over
// the upper hemisphere plus a horizontal ring, intensities scaled by the
// light count so the diffuse sum stays in a sensible range.
LightRig random_light_rig(uint64_t seed, int count = 90);

enum class RasterStatus { Ok, EmptyWarning };

struct RasterOutput {
  DoubleSided<DepthMap> depth;
  DoubleSided<NormalMap> normal;  // camera space; front faces camera (nz > 0)
  MaskMap mask;
  ColorImage albedo;  // per-vertex color interpolated at the front hit
  RasterStatus status = RasterStatus::Ok;
};

// Per-pixel ray casting. front = nearest hit, back = farthest hit along the
// same ray; depth stored as distance along the principal axis. Background
// pixels: depth 0, normal (0,0,0), mask 0.
RasterOutput rasterize_double_sided(const TriangleMesh& mesh, const Camera& cam, int threads = 1);

// color = albedo * (ambient + sum_j intensity_j * color_j * max(0, n.(-dir_j))),
// clamped to [0,1]. Background pixels come from `background` when given,
// otherwise mid-gray.
ColorImage shade_phong(const NormalMap& normal_cam, const MaskMap& mask, const Camera& cam,
                       const ColorImage& albedo, const LightRig& rig,
                       const ColorImage* background = nullptr);

}  // namespace humrec
