#pragma once

#include <cstdint>
#include <vector>

#include "humrec/math.hpp"

namespace humrec {

enum class SheetTag : uint8_t { Front = 0, Back = 1 };

struct PointCloud {
  std::vector<Vec3f> points;
  std::vector<Vec3f> normals;  // empty until estimated; unit length when set
  std::vector<SheetTag> tags;  // per-point source sheet

  size_t size() const { return points.size(); }
  bool has_normals() const { return normals.size() == points.size(); }
};

}  // namespace humrec
