#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "humrec/math.hpp"

namespace humrec {

// Image planes are dense row-major buffers with 32-bit float channels.
// Pixel (0,0) is the top-left corner; x grows right, y grows down.

struct ColorImage {
  int width = 0;
  int height = 0;
  std::vector<float> data;  // rgb interleaved, values in [0,1]

  ColorImage() = default;
  ColorImage(int w, int h, float fill = 0.0f)
      : width(w), height(h), data(static_cast<size_t>(w) * h * 3, fill) {}

  float& at(int x, int y, int c) { return data[(static_cast<size_t>(y) * width + x) * 3 + c]; }
  float at(int x, int y, int c) const { return data[(static_cast<size_t>(y) * width + x) * 3 + c]; }
  size_t pixel_count() const { return static_cast<size_t>(width) * height; }
};

struct DepthMap {
  int width = 0;
  int height = 0;
  std::vector<float> data;  // metric depth along the camera's principal axis

  DepthMap() = default;
  DepthMap(int w, int h, float fill = 0.0f)
      : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {}

  float& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
  float at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }
  size_t pixel_count() const { return static_cast<size_t>(width) * height; }
};

// Normals are stored in camera space: x right, y down, z toward the camera.
// Invalid pixels hold the exact zero vector.
struct NormalMap {
  int width = 0;
  int height = 0;
  std::vector<float> data;  // xyz interleaved

  NormalMap() = default;
  NormalMap(int w, int h) : width(w), height(h), data(static_cast<size_t>(w) * h * 3, 0.0f) {}

  float& at(int x, int y, int c) { return data[(static_cast<size_t>(y) * width + x) * 3 + c]; }
  float at(int x, int y, int c) const { return data[(static_cast<size_t>(y) * width + x) * 3 + c]; }
  Vec3f vec(int x, int y) const { return Vec3f(at(x, y, 0), at(x, y, 1), at(x, y, 2)); }
  void set(int x, int y, const Vec3f& n) {
    at(x, y, 0) = n.x();
    at(x, y, 1) = n.y();
    at(x, y, 2) = n.z();
  }
  size_t pixel_count() const { return static_cast<size_t>(width) * height; }
};

struct MaskMap {
  int width = 0;
  int height = 0;
  std::vector<float> data;  // [0,1]; binarization threshold is 0.5

  MaskMap() = default;
  MaskMap(int w, int h, float fill = 0.0f)
      : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {}

  float& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
  float at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }
  bool valid(int x, int y) const { return at(x, y) >= 0.5f; }
  size_t pixel_count() const { return static_cast<size_t>(width) * height; }
};

template <typename T>
struct DoubleSided {
  T front;
  T back;

  DoubleSided() = default;
  DoubleSided(T f, T b) : front(std::move(f)), back(std::move(b)) {
    if (front.width != back.width || front.height != back.height)
      throw std::invalid_argument("DoubleSided: front/back resolution mismatch");
  }
};

// Invariant checks used by loaders and tests.
bool is_valid(const ColorImage& img);
bool is_valid(const DepthMap& d, const MaskMap& mask);
bool is_valid(const NormalMap& n);
bool is_valid(const MaskMap& m);

inline void require_same_size(int wa, int ha, int wb, int hb, const char* what) {
  if (wa != wb || ha != hb)
    throw std::invalid_argument(std::string(what) + ": size mismatch (" + std::to_string(wa) +
                                "x" + std::to_string(ha) + " vs " + std::to_string(wb) + "x" +
                                std::to_string(hb) + ")");
}

}  // namespace humrec
