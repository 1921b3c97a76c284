#include "humrec/mesh.hpp"

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace humrec {

Vec3f TriangleMesh::triangle_normal(size_t t) const {
  const auto& tri = triangles[t];
  const Vec3f e1 = vertices[tri[1]] - vertices[tri[0]];
  const Vec3f e2 = vertices[tri[2]] - vertices[tri[0]];
  Vec3f n = e1.cross(e2);
  const float len = n.norm();
  return len > 0.0f ? Vec3f(n / len) : Vec3f(0.0f, 0.0f, 0.0f);
}

float TriangleMesh::triangle_area(size_t t) const {
  const auto& tri = triangles[t];
  const Vec3f e1 = vertices[tri[1]] - vertices[tri[0]];
  const Vec3f e2 = vertices[tri[2]] - vertices[tri[0]];
  return 0.5f * e1.cross(e2).norm();
}

float TriangleMesh::surface_area() const {
  float a = 0.0f;
  for (size_t t = 0; t < triangles.size(); ++t) a += triangle_area(t);
  return a;
}

Vec3f TriangleMesh::centroid() const {
  if (vertices.empty()) return Vec3f::Zero();
  Vec3d acc = Vec3d::Zero();
  for (const Vec3f& v : vertices) acc += v.cast<double>();
  return (acc / static_cast<double>(vertices.size())).cast<float>();
}

void TriangleMesh::bounds(Vec3f& lo, Vec3f& hi) const {
  lo = Vec3f::Constant(std::numeric_limits<float>::max());
  hi = Vec3f::Constant(std::numeric_limits<float>::lowest());
  for (const Vec3f& v : vertices) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
}

void TriangleMesh::clean_degenerate(float area_eps) {
  std::vector<std::array<uint32_t, 3>> kept;
  kept.reserve(triangles.size());
  const uint32_t n = static_cast<uint32_t>(vertices.size());
  for (size_t t = 0; t < triangles.size(); ++t) {
    const auto& tri = triangles[t];
    if (tri[0] >= n || tri[1] >= n || tri[2] >= n) continue;
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) continue;
    if (triangle_area(t) <= area_eps) continue;
    kept.push_back(tri);
  }
  triangles = std::move(kept);
}

TriangleMesh center_and_rotate(const TriangleMesh& mesh, float yaw_deg) {
  if (mesh.vertices.empty()) throw std::invalid_argument("center_and_rotate: empty mesh");
  const Vec3f c = mesh.centroid();
  const float a = deg_to_rad(yaw_deg);
  const float ca = std::cos(a), sa = std::sin(a);
  TriangleMesh out = mesh;
  for (Vec3f& v : out.vertices) {
    const Vec3f p = v - c;
    v = Vec3f(ca * p.x() + sa * p.z(), p.y(), -sa * p.x() + ca * p.z());
  }
  return out;
}

bool is_watertight(const TriangleMesh& mesh) {
  if (mesh.triangles.empty()) return false;
  // key: undirected edge; value: net directed count (+1 forward, -1 backward)
  std::map<std::pair<uint32_t, uint32_t>, std::pair<int, int>> edges;  // {total, net}
  for (const auto& tri : mesh.triangles) {
    for (int k = 0; k < 3; ++k) {
      uint32_t a = tri[k], b = tri[(k + 1) % 3];
      const bool fwd = a < b;
      if (!fwd) std::swap(a, b);
      auto& e = edges[{a, b}];
      e.first += 1;
      e.second += fwd ? 1 : -1;
    }
  }
  for (const auto& [k, v] : edges)
    if (v.first != 2 || v.second != 0) return false;
  return true;
}

long euler_characteristic(const TriangleMesh& mesh) {
  std::set<uint32_t> verts;
  std::set<std::pair<uint32_t, uint32_t>> edges;
  for (const auto& tri : mesh.triangles) {
    for (int k = 0; k < 3; ++k) {
      verts.insert(tri[k]);
      uint32_t a = tri[k], b = tri[(k + 1) % 3];
      if (a > b) std::swap(a, b);
      edges.insert({a, b});
    }
  }
  return static_cast<long>(verts.size()) - static_cast<long>(edges.size()) +
         static_cast<long>(mesh.triangles.size());
}

}  // namespace humrec
