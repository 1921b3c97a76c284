#pragma once

#include <limits>
#include <vector>

#include "humrec/mesh.hpp"

namespace humrec {

struct RayHit {
  float t = std::numeric_limits<float>::max();
  uint32_t triangle = 0;
  float u = 0.0f, v = 0.0f;  // barycentric coords of the hit (w = 1-u-v on v0)
  bool valid = false;
};

// Bounding volume hierarchy over mesh triangles. The mesh must outlive the
// tree.
class Bvh {
 public:
  explicit Bvh(const TriangleMesh& mesh);

  RayHit closest_hit(const Vec3f& origin, const Vec3f& dir, float t_min = 0.0f) const;

  // Nearest and farthest intersection with t > t_min in a single traversal.
  void double_sided_hit(const Vec3f& origin, const Vec3f& dir, RayHit& front, RayHit& back,
                        float t_min = 0.0f) const;

  // All intersections with t > t_min, unsorted.
  void all_hits(const Vec3f& origin, const Vec3f& dir, std::vector<RayHit>& hits,
                float t_min = 0.0f) const;

  // Exact closest point on the mesh surface (branch and bound, double
  // precision primitive). Returns squared distance; fills point and triangle.
  double closest_point(const Vec3f& query, Vec3f& point, uint32_t& triangle) const;

  const TriangleMesh& mesh() const { return mesh_; }

 private:
  struct Node {
    Vec3f lo, hi;
    int left = -1, right = -1;  // internal children, or
    int first = 0, count = 0;   // leaf triangle range
    bool is_leaf() const { return count > 0; }
  };

  int build(int first, int count, std::vector<Vec3f>& centers);

  const TriangleMesh& mesh_;
  std::vector<Node> nodes_;
  std::vector<uint32_t> order_;  // triangle indices, leaf ranges index this
};

// Exact point-triangle squared distance (double precision).
double point_triangle_dist2(const Vec3d& p, const Vec3d& a, const Vec3d& b, const Vec3d& c,
                            Vec3d* closest = nullptr);

// Watertight enough for test oracles: Moller-Trumbore with epsilon 1e-9 on
// the determinant.
bool ray_triangle(const Vec3f& origin, const Vec3f& dir, const Vec3f& a, const Vec3f& b,
                  const Vec3f& c, float& t, float& u, float& v);

}  // namespace humrec
