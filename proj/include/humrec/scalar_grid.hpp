#pragma once

#include <stdexcept>
#include <vector>

#include "humrec/math.hpp"

namespace humrec {

// Regular grid of scalar samples at grid points. Point (i,j,k) sits at
// origin + spacing * (i,j,k).
struct ScalarGrid {
  int nx = 0, ny = 0, nz = 0;
  Vec3f origin = Vec3f::Zero();
  float spacing = 1.0f;
  std::vector<float> values;

  ScalarGrid() = default;
  ScalarGrid(int nx_, int ny_, int nz_, const Vec3f& origin_, float spacing_)
      : nx(nx_), ny(ny_), nz(nz_), origin(origin_), spacing(spacing_),
        values(static_cast<size_t>(nx_) * ny_ * nz_, 0.0f) {
    if (nx < 8 || ny < 8 || nz < 8)
      throw std::invalid_argument("ScalarGrid: resolution must be >= 8 per axis");
    if (!(spacing > 0.0f)) throw std::invalid_argument("ScalarGrid: spacing must be positive");
  }

  size_t index(int i, int j, int k) const {
    return (static_cast<size_t>(k) * ny + j) * nx + i;
  }
  float& at(int i, int j, int k) { return values[index(i, j, k)]; }
  float at(int i, int j, int k) const { return values[index(i, j, k)]; }
  Vec3f point(int i, int j, int k) const {
    return origin + spacing * Vec3f(static_cast<float>(i), static_cast<float>(j),
                                    static_cast<float>(k));
  }

  // Trilinear interpolation, clamped to the grid bounds.
  float sample(const Vec3f& p) const;
};

}  // namespace humrec
