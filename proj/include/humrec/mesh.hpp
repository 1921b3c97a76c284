#pragma once

#include <array>
#include <string>
#include <vector>

#include "humrec/math.hpp"

namespace humrec {

struct TriangleMesh {
  std::vector<Vec3f> vertices;
  std::vector<std::array<uint32_t, 3>> triangles;
  std::vector<Vec3f> colors;  // optional per-vertex color, empty or size == vertices

  size_t vertex_count() const { return vertices.size(); }
  size_t triangle_count() const { return triangles.size(); }
  bool empty() const { return triangles.empty(); }
  bool has_colors() const { return colors.size() == vertices.size(); }

  Vec3f triangle_normal(size_t t) const;  // unit geometric normal
  float triangle_area(size_t t) const;
  float surface_area() const;
  Vec3f centroid() const;  // vertex centroid
  void bounds(Vec3f& lo, Vec3f& hi) const;

  // Drops zero-area triangles and out-of-range indices.
  void clean_degenerate(float area_eps = 1e-12f);
};

// Translates the centroid to the origin, then rotates about the +y axis.
TriangleMesh center_and_rotate(const TriangleMesh& mesh, float yaw_deg);

// Every undirected edge referenced by exactly two triangles, with opposite
// orientation.
bool is_watertight(const TriangleMesh& mesh);

// V - E + F over the referenced vertex set.
long euler_characteristic(const TriangleMesh& mesh);

// Mesh file IO. Format chosen by extension: .obj or .ply (binary
// little-endian).
TriangleMesh load_mesh(const std::string& path);
void save_mesh(const std::string& path, const TriangleMesh& mesh);

TriangleMesh load_obj(const std::string& path);
void save_obj(const std::string& path, const TriangleMesh& mesh);
TriangleMesh load_ply(const std::string& path);
void save_ply(const std::string& path, const TriangleMesh& mesh,
              const std::vector<Vec3f>* normals = nullptr);

}  // namespace humrec
