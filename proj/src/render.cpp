#include "humrec/render.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "humrec/bvh.hpp"

namespace humrec {

LightRig random_light_rig(uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<float> uni(0.0f, 1.0f);
  LightRig rig;
  rig.ambient = 0.3f;
  const float scale = 1.0f / std::max(1, count);  // keeps the diffuse sum ~O(1)
  const int ring = count / 3;
  for (int i = 0; i < count; ++i) {
    Vec3f pos_dir;
    if (i < ring) {
      const float az = 2.0f * kPi * uni(rng);
      pos_dir = Vec3f(std::cos(az), 0.0f, std::sin(az));
    } else {
      // uniform over the upper hemisphere
      const float z = uni(rng);
      const float az = 2.0f * kPi * uni(rng);
      const float s = std::sqrt(std::max(0.0f, 1.0f - z * z));
      pos_dir = Vec3f(s * std::cos(az), z, s * std::sin(az));
    }
    DirectionalLight light;
    light.direction = -pos_dir;  // light travels from its position toward the subject
    light.intensity = (0.2f + 0.6f * uni(rng)) * scale;
    light.color = Vec3f(0.8f + 0.2f * uni(rng), 0.8f + 0.2f * uni(rng), 0.8f + 0.2f * uni(rng));
    rig.lights.push_back(light);
  }
  return rig;
}

RasterOutput rasterize_double_sided(const TriangleMesh& mesh, const Camera& cam, int threads) {
  const int w = cam.width, h = cam.height;
  RasterOutput out{DoubleSided<DepthMap>(DepthMap(w, h), DepthMap(w, h)),
                   DoubleSided<NormalMap>(NormalMap(w, h), NormalMap(w, h)), MaskMap(w, h),
                   ColorImage(w, h), RasterStatus::Ok};

  // Everything behind the camera plane cannot hit any forward ray.
  bool any_in_front = false;
  for (const Vec3f& v : mesh.vertices)
    if ((v - cam.position).dot(cam.axis) > 0.0f) {
      any_in_front = true;
      break;
    }
  if (mesh.empty() || !any_in_front) {
    out.status = RasterStatus::EmptyWarning;
    return out;
  }

  const Bvh bvh(mesh);
  const bool has_colors = mesh.has_colors();

  auto shade_row = [&](int y) {
    for (int x = 0; x < w; ++x) {
      const Vec3f ray = cam.pixel_ray(static_cast<float>(x), static_cast<float>(y));
      RayHit front, back;
      bvh.double_sided_hit(cam.position, ray, front, back, 1e-5f);
      if (!front.valid) continue;
      out.mask.at(x, y) = 1.0f;
      // dir.dot(axis) == 1, so the ray parameter is the axis distance
      out.depth.front.at(x, y) = front.t;
      out.depth.back.at(x, y) = back.t;
      Vec3f nf = mesh.triangle_normal(front.triangle);
      if (nf.dot(ray) > 0.0f) nf = -nf;  // front sheet faces the camera
      Vec3f nb = mesh.triangle_normal(back.triangle);
      if (nb.dot(ray) < 0.0f) nb = -nb;  // back sheet faces away
      out.normal.front.set(x, y, cam.to_camera_normal(nf));
      out.normal.back.set(x, y, cam.to_camera_normal(nb));
      if (has_colors) {
        const auto& tri = mesh.triangles[front.triangle];
        const float bw = 1.0f - front.u - front.v;
        const Vec3f c = bw * mesh.colors[tri[0]] + front.u * mesh.colors[tri[1]] +
                        front.v * mesh.colors[tri[2]];
        out.albedo.at(x, y, 0) = std::clamp(c.x(), 0.0f, 1.0f);
        out.albedo.at(x, y, 1) = std::clamp(c.y(), 0.0f, 1.0f);
        out.albedo.at(x, y, 2) = std::clamp(c.z(), 0.0f, 1.0f);
      } else {
        out.albedo.at(x, y, 0) = out.albedo.at(x, y, 1) = out.albedo.at(x, y, 2) = 0.7f;
      }
    }
  };

  threads = std::max(1, threads);
  if (threads == 1) {
    for (int y = 0; y < h; ++y) shade_row(y);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next_row{0};
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&]() {
        for (int y = next_row.fetch_add(1); y < h; y = next_row.fetch_add(1)) shade_row(y);
      });
    for (auto& th : pool) th.join();
  }
  return out;
}

ColorImage shade_phong(const NormalMap& normal_cam, const MaskMap& mask, const Camera& cam,
                       const ColorImage& albedo, const LightRig& rig,
                       const ColorImage* background) {
  require_same_size(normal_cam.width, normal_cam.height, mask.width, mask.height, "shade_phong");
  const int w = normal_cam.width, h = normal_cam.height;
  ColorImage out(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      if (!mask.valid(x, y)) {
        for (int c = 0; c < 3; ++c)
          out.at(x, y, c) = background ? background->at(x % background->width,
                                                        y % background->height, c)
                                       : 0.5f;
        continue;
      }
      const Vec3f n = cam.to_world_normal(normal_cam.vec(x, y));
      Vec3f light = Vec3f::Constant(rig.ambient);
      for (const auto& l : rig.lights) {
        const float lambert = std::max(0.0f, n.dot(-l.direction));
        light += l.intensity * lambert * l.color;
      }
      for (int c = 0; c < 3; ++c)
        out.at(x, y, c) = std::clamp(albedo.at(x, y, c) * light[c], 0.0f, 1.0f);
    }
  return out;
}

}  // namespace humrec
