#include "humrec/image.hpp"

#include <cmath>

namespace humrec {

namespace {
bool all_finite(const std::vector<float>& v) {
  for (float x : v)
    if (!std::isfinite(x)) return false;
  return true;
}
}  // namespace

bool is_valid(const ColorImage& img) {
  if (img.width <= 0 || img.height <= 0) return false;
  if (img.data.size() != img.pixel_count() * 3) return false;
  for (float x : img.data)
    if (!(x >= 0.0f && x <= 1.0f)) return false;
  return true;
}

bool is_valid(const DepthMap& d, const MaskMap& mask) {
  if (d.width != mask.width || d.height != mask.height) return false;
  if (!all_finite(d.data)) return false;
  for (int y = 0; y < d.height; ++y)
    for (int x = 0; x < d.width; ++x)
      if (mask.valid(x, y) && !(d.at(x, y) > 0.0f)) return false;
  return true;
}

bool is_valid(const NormalMap& n) {
  if (!all_finite(n.data)) return false;
  for (int y = 0; y < n.height; ++y)
    for (int x = 0; x < n.width; ++x) {
      const float len = n.vec(x, y).norm();
      if (len != 0.0f && std::abs(len - 1.0f) > 1e-4f) return false;
    }
  return true;
}

bool is_valid(const MaskMap& m) {
  for (float x : m.data)
    if (!(x >= 0.0f && x <= 1.0f)) return false;
  return true;
}

}  // namespace humrec
