#include "humrec/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "humrec/marching_cubes.hpp"

namespace humrec {

TriangleMesh make_uv_sphere(const Vec3f& center, float radius, int rings, int segments) {
  TriangleMesh mesh;
  mesh.vertices.push_back(center + Vec3f(0, radius, 0));  // north pole
  for (int r = 1; r < rings; ++r) {
    const float phi = kPi * static_cast<float>(r) / static_cast<float>(rings);
    for (int s = 0; s < segments; ++s) {
      const float theta = 2.0f * kPi * static_cast<float>(s) / static_cast<float>(segments);
      mesh.vertices.push_back(center + radius * Vec3f(std::sin(phi) * std::cos(theta),
                                                      std::cos(phi),
                                                      std::sin(phi) * std::sin(theta)));
    }
  }
  mesh.vertices.push_back(center + Vec3f(0, -radius, 0));  // south pole
  const uint32_t south = static_cast<uint32_t>(mesh.vertices.size() - 1);
  auto ring_vert = [&](int r, int s) -> uint32_t {
    return 1 + static_cast<uint32_t>((r - 1) * segments + (s % segments));
  };
  for (int s = 0; s < segments; ++s) mesh.triangles.push_back({0, ring_vert(1, s + 1), ring_vert(1, s)});
  for (int r = 1; r + 1 < rings; ++r)
    for (int s = 0; s < segments; ++s) {
      const uint32_t a = ring_vert(r, s), b = ring_vert(r, s + 1);
      const uint32_t c = ring_vert(r + 1, s), d = ring_vert(r + 1, s + 1);
      mesh.triangles.push_back({a, b, d});
      mesh.triangles.push_back({a, d, c});
    }
  for (int s = 0; s < segments; ++s)
    mesh.triangles.push_back({south, ring_vert(rings - 1, s), ring_vert(rings - 1, s + 1)});
  return mesh;
}

TriangleMesh make_box(const Vec3f& center, const Vec3f& he) {
  TriangleMesh mesh;
  for (int i = 0; i < 8; ++i)
    mesh.vertices.push_back(center + Vec3f(i & 1 ? he.x() : -he.x(), i & 2 ? he.y() : -he.y(),
                                           i & 4 ? he.z() : -he.z()));
  // outward wound faces (CCW seen from outside)
  const uint32_t f[6][4] = {{0, 4, 6, 2},   // -x
                            {1, 3, 7, 5},   // +x
                            {0, 1, 5, 4},   // -y
                            {2, 6, 7, 3},   // +y
                            {0, 2, 3, 1},   // -z
                            {4, 5, 7, 6}};  // +z
  for (const auto& q : f) {
    mesh.triangles.push_back({q[0], q[1], q[2]});
    mesh.triangles.push_back({q[0], q[2], q[3]});
  }
  return mesh;
}

namespace {

float sd_capsule(const Vec3f& p, const Vec3f& a, const Vec3f& b, float r) {
  const Vec3f pa = p - a, ba = b - a;
  const float h = std::clamp(pa.dot(ba) / ba.squaredNorm(), 0.0f, 1.0f);
  return (pa - ba * h).norm() - r;
}

float sd_sphere(const Vec3f& p, const Vec3f& c, float r) { return (p - c).norm() - r; }

TriangleMesh mesh_from_sdf(const std::function<float(const Vec3f&)>& sdf, const Vec3f& lo,
                           const Vec3f& hi, int res) {
  const Vec3f ext = hi - lo;
  const float spacing = ext.maxCoeff() / static_cast<float>(res - 1);
  const int nx = std::max(8, static_cast<int>(std::ceil(ext.x() / spacing)) + 1);
  const int ny = std::max(8, static_cast<int>(std::ceil(ext.y() / spacing)) + 1);
  const int nz = std::max(8, static_cast<int>(std::ceil(ext.z() / spacing)) + 1);
  ScalarGrid grid(nx, ny, nz, lo, spacing);
  for (int k = 0; k < nz; ++k)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) grid.at(i, j, k) = sdf(grid.point(i, j, k));
  return marching_cubes(grid, 0.0f);
}

}  // namespace

TriangleMesh make_capsule(const Vec3f& p0, const Vec3f& p1, float radius, int grid_res) {
  const Vec3f pad = Vec3f::Constant(radius * 1.5f);
  const Vec3f lo = p0.cwiseMin(p1) - pad;
  const Vec3f hi = p0.cwiseMax(p1) + pad;
  return mesh_from_sdf([&](const Vec3f& p) { return sd_capsule(p, p0, p1, radius); }, lo, hi,
                       grid_res);
}

Humanoid make_humanoid(const HumanoidSpec& spec) {
  const float H = spec.height;
  const float bulk = spec.bulk;
  const float spread = spec.arm_spread;

  auto J = [&](float x, float y, float z) { return H * Vec3f(x, y, z); };
  std::map<std::string, Vec3f> j;
  j["nose"] = J(0.0f, 0.40f, -0.055f);
  j["neck"] = J(0.0f, 0.32f, 0.0f);
  j["left_shoulder"] = J(0.105f * spread, 0.295f, 0.0f);
  j["right_shoulder"] = J(-0.105f * spread, 0.295f, 0.0f);
  j["left_elbow"] = J(0.160f * spread, 0.125f, 0.0f);
  j["right_elbow"] = J(-0.160f * spread, 0.125f, 0.0f);
  j["left_wrist"] = J(0.195f * spread, -0.035f, 0.0f);
  j["right_wrist"] = J(-0.195f * spread, -0.035f, 0.0f);
  j["left_hip"] = J(0.058f, 0.0f, 0.0f);
  j["right_hip"] = J(-0.058f, 0.0f, 0.0f);
  j["left_knee"] = J(0.068f, -0.235f, 0.0f);
  j["right_knee"] = J(-0.068f, -0.235f, 0.0f);
  j["left_ankle"] = J(0.072f, -0.435f, 0.0f);
  j["right_ankle"] = J(-0.072f, -0.435f, 0.0f);
  j["left_toe"] = J(0.090f, -0.478f, -0.065f);
  j["right_toe"] = J(-0.090f, -0.478f, -0.065f);

  const Vec3f head_center = J(0.0f, 0.405f, 0.0f);
  struct Cap {
    Vec3f a, b;
    float r;
  };
  std::vector<Cap> caps;
  const float r_head = 0.072f * H * bulk;
  const float r_torso = 0.092f * H * bulk;
  const float r_pelvis = 0.075f * H * bulk;
  const float r_upper_arm = 0.030f * H * bulk;
  const float r_lower_arm = 0.026f * H * bulk;
  const float r_upper_leg = 0.048f * H * bulk;
  const float r_lower_leg = 0.036f * H * bulk;
  const float r_foot = 0.026f * H * bulk;
  caps.push_back({j["neck"], head_center, r_head * 0.55f});
  caps.push_back({J(0.0f, 0.27f, 0.0f), J(0.0f, 0.05f, 0.0f), r_torso});
  caps.push_back({j["left_hip"], j["right_hip"], r_pelvis});
  for (const char* side : {"left", "right"}) {
    const std::string s(side);
    caps.push_back({j[s + "_shoulder"], j[s + "_elbow"], r_upper_arm});
    caps.push_back({j[s + "_elbow"], j[s + "_wrist"], r_lower_arm});
    caps.push_back({j[s + "_hip"], j[s + "_knee"], r_upper_leg});
    caps.push_back({j[s + "_knee"], j[s + "_ankle"], r_lower_leg});
    caps.push_back({j[s + "_ankle"], j[s + "_toe"], r_foot});
  }

  auto sdf = [&](const Vec3f& p) {
    float d = sd_sphere(p, head_center, r_head);
    for (const auto& c : caps) d = std::min(d, sd_capsule(p, c.a, c.b, c.r));
    return d;
  };

  const Vec3f lo = H * Vec3f(-0.30f, -0.52f, -0.16f);
  const Vec3f hi = H * Vec3f(0.30f, 0.52f, 0.14f);
  Humanoid out;
  out.mesh = mesh_from_sdf(sdf, lo, hi, spec.grid_res);
  out.joints3d = std::move(j);
  return out;
}

}  // namespace humrec
