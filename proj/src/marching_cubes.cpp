#include "humrec/marching_cubes.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace humrec {

float ScalarGrid::sample(const Vec3f& p) const {
  const Vec3f g = (p - origin) / spacing;
  const float fx = std::clamp(g.x(), 0.0f, static_cast<float>(nx - 1));
  const float fy = std::clamp(g.y(), 0.0f, static_cast<float>(ny - 1));
  const float fz = std::clamp(g.z(), 0.0f, static_cast<float>(nz - 1));
  const int i = std::min(static_cast<int>(fx), nx - 2);
  const int j = std::min(static_cast<int>(fy), ny - 2);
  const int k = std::min(static_cast<int>(fz), nz - 2);
  const float tx = fx - static_cast<float>(i), ty = fy - static_cast<float>(j),
              tz = fz - static_cast<float>(k);
  float c[2][2][2];
  for (int dk = 0; dk < 2; ++dk)
    for (int dj = 0; dj < 2; ++dj)
      for (int di = 0; di < 2; ++di) c[dk][dj][di] = at(i + di, j + dj, k + dk);
  auto lerp = [](float a, float b, float t) { return a + t * (b - a); };
  const float x00 = lerp(c[0][0][0], c[0][0][1], tx);
  const float x10 = lerp(c[0][1][0], c[0][1][1], tx);
  const float x01 = lerp(c[1][0][0], c[1][0][1], tx);
  const float x11 = lerp(c[1][1][0], c[1][1][1], tx);
  const float y0 = lerp(x00, x10, ty);
  const float y1 = lerp(x01, x11, ty);
  return lerp(y0, y1, tz);
}

namespace {

// Canonical grid-edge key for welding: base point index * 3 + axis.
uint64_t edge_key(const ScalarGrid& g, int i, int j, int k, int edge) {
  using namespace mc_tables;
  const int a = kEdgeCorners[edge][0];
  const int b = kEdgeCorners[edge][1];
  int pa[3] = {i + kCornerOffset[a][0], j + kCornerOffset[a][1], k + kCornerOffset[a][2]};
  int pb[3] = {i + kCornerOffset[b][0], j + kCornerOffset[b][1], k + kCornerOffset[b][2]};
  int axis = 0;
  for (int d = 0; d < 3; ++d)
    if (pa[d] != pb[d]) axis = d;
  if (pa[axis] > pb[axis]) std::swap(pa[0], pb[0]), std::swap(pa[1], pb[1]), std::swap(pa[2], pb[2]);
  const uint64_t base = g.index(pa[0], pa[1], pa[2]);
  return base * 3 + static_cast<uint64_t>(axis);
}

}  // namespace

TriangleMesh marching_cubes(const ScalarGrid& grid, float iso) {
  using namespace mc_tables;
  TriangleMesh mesh;
  std::unordered_map<uint64_t, uint32_t> weld;

  auto edge_vertex = [&](int i, int j, int k, int edge) -> uint32_t {
    const uint64_t key = edge_key(grid, i, j, k, edge);
    auto it = weld.find(key);
    if (it != weld.end()) return it->second;
    const int a = kEdgeCorners[edge][0];
    const int b = kEdgeCorners[edge][1];
    int pa[3] = {i + kCornerOffset[a][0], j + kCornerOffset[a][1], k + kCornerOffset[a][2]};
    int pb[3] = {i + kCornerOffset[b][0], j + kCornerOffset[b][1], k + kCornerOffset[b][2]};
    // canonical direction: from the lower grid point to the upper
    for (int d = 0; d < 3; ++d)
      if (pa[d] > pb[d]) std::swap(pa[0], pb[0]), std::swap(pa[1], pb[1]), std::swap(pa[2], pb[2]);
    const float va = grid.at(pa[0], pa[1], pa[2]);
    const float vb = grid.at(pb[0], pb[1], pb[2]);
    float t = vb != va ? (iso - va) / (vb - va) : 0.5f;
    t = std::clamp(t, 0.0f, 1.0f);
    const Vec3f p = grid.point(pa[0], pa[1], pa[2]) * (1.0f - t) +
                    grid.point(pb[0], pb[1], pb[2]) * t;
    const uint32_t idx = static_cast<uint32_t>(mesh.vertices.size());
    mesh.vertices.push_back(p);
    weld.emplace(key, idx);
    return idx;
  };

  for (int k = 0; k + 1 < grid.nz; ++k)
    for (int j = 0; j + 1 < grid.ny; ++j)
      for (int i = 0; i + 1 < grid.nx; ++i) {
        int config = 0;
        for (int c = 0; c < 8; ++c) {
          const float v = grid.at(i + kCornerOffset[c][0], j + kCornerOffset[c][1],
                                  k + kCornerOffset[c][2]);
          if (v < iso) config |= 1 << c;  // ties (v == iso) count as outside
        }
        const signed char* tris = kTriTable[config];
        for (int e = 0; tris[e] != -1; e += 3) {
          const uint32_t i0 = edge_vertex(i, j, k, tris[e]);
          const uint32_t i1 = edge_vertex(i, j, k, tris[e + 1]);
          const uint32_t i2 = edge_vertex(i, j, k, tris[e + 2]);
          if (i0 == i1 || i1 == i2 || i0 == i2) continue;  // collapsed at a tie
          mesh.triangles.push_back({i0, i1, i2});
        }
      }
  mesh.clean_degenerate(0.0f);
  return mesh;
}

}  // namespace humrec
