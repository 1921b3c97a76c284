#include "humrec/image_ops.hpp"

#include <cmath>
#include <stdexcept>

namespace humrec {

namespace {

void check_factor(int w, int h, int factor) {
  if (factor <= 0) throw std::invalid_argument("downsample: factor must be positive");
  if (w % factor != 0 || h % factor != 0)
    throw std::invalid_argument("downsample: factor " + std::to_string(factor) +
                                " does not divide " + std::to_string(w) + "x" + std::to_string(h));
}

template <int C, typename Img>
Img box_filter(const Img& img, int factor) {
  check_factor(img.width, img.height, factor);
  Img out(img.width / factor, img.height / factor);
  const float inv = 1.0f / static_cast<float>(factor * factor);
  for (int y = 0; y < out.height; ++y) {
    for (int x = 0; x < out.width; ++x) {
      float acc[C] = {};
      for (int dy = 0; dy < factor; ++dy)
        for (int dx = 0; dx < factor; ++dx) {
          const size_t idx =
              (static_cast<size_t>(y * factor + dy) * img.width + (x * factor + dx)) * C;
          for (int c = 0; c < C; ++c) acc[c] += img.data[idx + c];
        }
      const size_t o = (static_cast<size_t>(y) * out.width + x) * C;
      for (int c = 0; c < C; ++c) out.data[o + c] = acc[c] * inv;
    }
  }
  return out;
}

}  // namespace

ColorImage downsample(const ColorImage& img, int factor) { return box_filter<3>(img, factor); }
DepthMap downsample(const DepthMap& img, int factor) { return box_filter<1>(img, factor); }
MaskMap downsample(const MaskMap& img, int factor) { return box_filter<1>(img, factor); }

NormalMap downsample(const NormalMap& img, int factor) {
  NormalMap out = box_filter<3>(img, factor);
  for (int y = 0; y < out.height; ++y)
    for (int x = 0; x < out.width; ++x) {
      Vec3f n = out.vec(x, y);
      const float len = n.norm();
      if (len > 1e-12f)
        out.set(x, y, n / len);
      else
        out.set(x, y, Vec3f::Zero());
    }
  return out;
}

DepthMap downsample_masked(const DepthMap& d, const MaskMap& mask, int factor) {
  require_same_size(d.width, d.height, mask.width, mask.height, "downsample_masked");
  check_factor(d.width, d.height, factor);
  DepthMap out(d.width / factor, d.height / factor);
  for (int y = 0; y < out.height; ++y)
    for (int x = 0; x < out.width; ++x) {
      float num = 0.0f, den = 0.0f;
      for (int dy = 0; dy < factor; ++dy)
        for (int dx = 0; dx < factor; ++dx) {
          const int sx = x * factor + dx, sy = y * factor + dy;
          const float w = mask.at(sx, sy);
          num += w * d.at(sx, sy);
          den += w;
        }
      out.at(x, y) = den > 0.0f ? num / den : 0.0f;
    }
  return out;
}

NormalMap depth_to_normal(const DepthMap& d, const MaskMap& mask, float pixel_pitch) {
  require_same_size(d.width, d.height, mask.width, mask.height, "depth_to_normal");
  if (!(pixel_pitch > 0.0f)) throw std::invalid_argument("depth_to_normal: pixel_pitch <= 0");
  NormalMap out(d.width, d.height);
  const int w = d.width, h = d.height;
  auto valid = [&](int x, int y) { return x >= 0 && y >= 0 && x < w && y < h && mask.valid(x, y); };
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!mask.valid(x, y)) continue;
      float ddx = 0.0f, ddy = 0.0f;
      const bool xm = valid(x - 1, y), xp = valid(x + 1, y);
      if (xm && xp)
        ddx = (d.at(x + 1, y) - d.at(x - 1, y)) * 0.5f;
      else if (xp)
        ddx = d.at(x + 1, y) - d.at(x, y);
      else if (xm)
        ddx = d.at(x, y) - d.at(x - 1, y);
      const bool ym = valid(x, y - 1), yp = valid(x, y + 1);
      if (ym && yp)
        ddy = (d.at(x, y + 1) - d.at(x, y - 1)) * 0.5f;
      else if (yp)
        ddy = d.at(x, y + 1) - d.at(x, y);
      else if (ym)
        ddy = d.at(x, y) - d.at(x, y - 1);
      Vec3f n(-ddx / pixel_pitch, -ddy / pixel_pitch, 1.0f);
      out.set(x, y, n.normalized());
    }
  }
  return out;
}

PointCloud depth_to_points(const DoubleSided<DepthMap>& d, const MaskMap& mask, const Camera& cam) {
  require_same_size(d.front.width, d.front.height, mask.width, mask.height, "depth_to_points");
  PointCloud pc;
  for (int y = 0; y < mask.height; ++y)
    for (int x = 0; x < mask.width; ++x) {
      if (!mask.valid(x, y)) continue;
      const Vec3f ray = cam.pixel_ray(static_cast<float>(x), static_cast<float>(y));
      pc.points.push_back(cam.position + d.front.at(x, y) * ray);
      pc.tags.push_back(SheetTag::Front);
      pc.points.push_back(cam.position + d.back.at(x, y) * ray);
      pc.tags.push_back(SheetTag::Back);
    }
  return pc;
}

namespace {

template <int C, typename Img>
void bilinear(const Img& img, float x, float y, float* out) {
  for (int c = 0; c < C; ++c) out[c] = 0.0f;
  const int x0 = static_cast<int>(std::floor(x));
  const int y0 = static_cast<int>(std::floor(y));
  const float fx = x - static_cast<float>(x0);
  const float fy = y - static_cast<float>(y0);
  const float wgt[4] = {(1 - fx) * (1 - fy), fx * (1 - fy), (1 - fx) * fy, fx * fy};
  const int xs[4] = {x0, x0 + 1, x0, x0 + 1};
  const int ys[4] = {y0, y0, y0 + 1, y0 + 1};
  for (int k = 0; k < 4; ++k) {
    if (xs[k] < 0 || ys[k] < 0 || xs[k] >= img.width || ys[k] >= img.height) continue;
    const size_t idx = (static_cast<size_t>(ys[k]) * img.width + xs[k]) * C;
    for (int c = 0; c < C; ++c) out[c] += wgt[k] * img.data[idx + c];
  }
}

}  // namespace

float sample_bilinear(const DepthMap& img, float x, float y) {
  float v;
  bilinear<1>(img, x, y, &v);
  return v;
}

float sample_bilinear(const MaskMap& img, float x, float y) {
  float v;
  bilinear<1>(img, x, y, &v);
  return v;
}

Vec3f sample_bilinear(const NormalMap& img, float x, float y) {
  float v[3];
  bilinear<3>(img, x, y, v);
  return Vec3f(v[0], v[1], v[2]);
}

Vec3f sample_bilinear(const ColorImage& img, float x, float y) {
  float v[3];
  bilinear<3>(img, x, y, v);
  return Vec3f(v[0], v[1], v[2]);
}

MaskMap binarize(const MaskMap& m, float threshold) {
  MaskMap out(m.width, m.height);
  for (size_t i = 0; i < m.data.size(); ++i) out.data[i] = m.data[i] >= threshold ? 1.0f : 0.0f;
  return out;
}

}  // namespace humrec
