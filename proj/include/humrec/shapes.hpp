#pragma once

#include <map>
#include <string>

#include "humrec/mesh.hpp"

namespace humrec {

TriangleMesh make_uv_sphere(const Vec3f& center, float radius, int rings = 24, int segments = 48);
TriangleMesh make_box(const Vec3f& center, const Vec3f& half_extents);

// Capsule extracted from its distance field; watertight by construction.
TriangleMesh make_capsule(const Vec3f& p0, const Vec3f& p1, float radius, int grid_res = 64);

// Procedural capsule-union humanoid in an A-pose, facing -z (toward the
// default camera), feet pointing forward. Extracted from a signed distance
// field so the mesh is a single watertight component. Joints follow the
// required joint name list; "left" is the subject's left (+x seen from the
// camera at -z).
struct Humanoid {
  TriangleMesh mesh;
  std::map<std::string, Vec3f> joints3d;
};

struct HumanoidSpec {
  float height = 0.85f;      // scene units
  float bulk = 1.0f;         // radius multiplier
  float arm_spread = 1.0f;   // widens the A-pose
  int grid_res = 96;
};

Humanoid make_humanoid(const HumanoidSpec& spec = {});

}  // namespace humrec
