#include "humrec/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "humrec/io.hpp"

namespace humrec {

namespace fs = std::filesystem;
using nlohmann::json;

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

// Rough skeleton from bounding-box proportions, used when a mesh ships
// without 3D joint annotations.
std::map<std::string, Vec3f> heuristic_joints3d(const TriangleMesh& mesh) {
  Vec3f lo, hi;
  mesh.bounds(lo, hi);
  const Vec3f c = 0.5f * (lo + hi);
  const float h = hi.y() - lo.y();
  const float hw = 0.5f * (hi.x() - lo.x());
  const float zf = lo.z() + 0.2f * (hi.z() - lo.z());
  auto at = [&](float fx, float fy, float z) {
    return Vec3f(c.x() + fx * hw, lo.y() + fy * h, z);
  };
  std::map<std::string, Vec3f> j;
  j["nose"] = at(0.0f, 0.93f, zf);
  j["neck"] = at(0.0f, 0.84f, c.z());
  j["left_shoulder"] = at(0.34f, 0.81f, c.z());
  j["right_shoulder"] = at(-0.34f, 0.81f, c.z());
  j["left_elbow"] = at(0.55f, 0.63f, c.z());
  j["right_elbow"] = at(-0.55f, 0.63f, c.z());
  j["left_wrist"] = at(0.68f, 0.46f, c.z());
  j["right_wrist"] = at(-0.68f, 0.46f, c.z());
  j["left_hip"] = at(0.19f, 0.51f, c.z());
  j["right_hip"] = at(-0.19f, 0.51f, c.z());
  j["left_knee"] = at(0.22f, 0.27f, c.z());
  j["right_knee"] = at(-0.22f, 0.27f, c.z());
  j["left_ankle"] = at(0.24f, 0.06f, c.z());
  j["right_ankle"] = at(-0.24f, 0.06f, c.z());
  j["left_toe"] = at(0.30f, 0.02f, zf);
  j["right_toe"] = at(-0.30f, 0.02f, zf);
  return j;
}

Vec3f rotate_about_y(const Vec3f& p, float yaw_deg) {
  const float a = deg_to_rad(yaw_deg);
  const float ca = std::cos(a), sa = std::sin(a);
  return Vec3f(ca * p.x() + sa * p.z(), p.y(), -sa * p.x() + ca * p.z());
}

}  // namespace

RenderSample render_sample(const TriangleMesh& mesh, float yaw_deg, const DatasetConfig& config,
                           const std::string& mesh_id,
                           const std::map<std::string, Vec3f>* joints3d,
                           const ColorImage* background) {
  Camera cam = config.camera_template;
  cam.width = cam.height = config.resolution;

  const Vec3f centroid = mesh.centroid();
  TriangleMesh posed = center_and_rotate(mesh, yaw_deg);
  RasterOutput raster = rasterize_double_sided(posed, cam, config.threads);

  const uint64_t rig_seed =
      config.seed ^ fnv1a(mesh_id) ^ (static_cast<uint64_t>(static_cast<int64_t>(yaw_deg * 16)) *
                                      0x9e3779b97f4a7c15ull);
  const LightRig rig = random_light_rig(rig_seed, config.light_count);

  RenderSample sample{shade_phong(raster.normal.front, raster.mask, cam, raster.albedo, rig,
                                  background),
                      std::move(raster.depth),
                      std::move(raster.normal),
                      std::move(raster.mask),
                      JointSet{},
                      yaw_deg,
                      cam};

  std::map<std::string, Vec3f> src = joints3d ? *joints3d : heuristic_joints3d(mesh);
  const float conf = joints3d ? 1.0f : 0.5f;
  for (const auto& [name, p] : src) {
    const Vec3f posed_p = rotate_about_y(p - centroid, yaw_deg);
    float u, v, depth;
    cam.project(posed_p, u, v, depth);
    const bool inside = depth > 0 && u >= 0 && v >= 0 && u <= cam.width - 1 && v <= cam.height - 1;
    sample.joints.set(name, u, v, inside ? conf : 0.0f);
  }
  return sample;
}

void write_sample(const std::string& dir, const RenderSample& sample,
                  const std::string& joints_provenance, const std::string& mesh_id,
                  uint64_t seed) {
  fs::create_directories(dir);
  write_png(dir + "/color.png", sample.color);
  write_png(dir + "/mask.png", sample.mask);
  write_pfm(dir + "/depth_front.pfm", sample.depth.front);
  write_pfm(dir + "/depth_back.pfm", sample.depth.back);
  write_pfm(dir + "/normal_front.pfm", sample.normal.front);
  write_pfm(dir + "/normal_back.pfm", sample.normal.back);
  save_joints_json(dir + "/joints.json", sample.joints, joints_provenance);
  json meta;
  meta["mesh_id"] = mesh_id;
  meta["yaw_deg"] = sample.yaw_deg;
  meta["seed"] = seed;
  meta["camera"] = {{"position", {sample.camera.position.x(), sample.camera.position.y(),
                                  sample.camera.position.z()}},
                    {"axis", {sample.camera.axis.x(), sample.camera.axis.y(),
                              sample.camera.axis.z()}},
                    {"fov_y_deg", sample.camera.fov_y_deg},
                    {"width", sample.camera.width},
                    {"height", sample.camera.height}};
  std::ofstream f(dir + "/meta.json");
  f << meta.dump(2) << "\n";
}

RenderSample read_sample(const std::string& dir) {
  RenderSample s;
  s.color = read_png_color(dir + "/color.png");
  s.mask = read_png_mask(dir + "/mask.png");
  s.depth.front = read_pfm_depth(dir + "/depth_front.pfm");
  s.depth.back = read_pfm_depth(dir + "/depth_back.pfm");
  s.normal.front = read_pfm_normal(dir + "/normal_front.pfm");
  s.normal.back = read_pfm_normal(dir + "/normal_back.pfm");
  s.joints = load_joints_json(dir + "/joints.json");
  std::ifstream f(dir + "/meta.json");
  if (f) {
    json meta;
    f >> meta;
    s.yaw_deg = meta.value("yaw_deg", 0.0f);
    if (meta.contains("camera")) {
      const auto& c = meta["camera"];
      s.camera.position = Vec3f(c["position"][0], c["position"][1], c["position"][2]);
      s.camera.axis = Vec3f(c["axis"][0], c["axis"][1], c["axis"][2]);
      s.camera.fov_y_deg = c["fov_y_deg"];
      s.camera.width = c["width"];
      s.camera.height = c["height"];
    }
  }
  return s;
}

DatasetResult generate_dataset(const std::vector<std::string>& mesh_paths,
                               const std::string& out_dir, const DatasetConfig& config) {
  if (mesh_paths.empty()) throw std::invalid_argument("generate_dataset: no meshes given");
  if (config.resolution % config.low_res_factor != 0)
    throw std::invalid_argument("generate_dataset: resolution must be a multiple of " +
                                std::to_string(config.low_res_factor));

  std::optional<ColorImage> background;
  if (!config.background_dir.empty() && fs::exists(config.background_dir)) {
    std::vector<std::string> images;
    for (const auto& entry : fs::directory_iterator(config.background_dir))
      if (entry.path().extension() == ".png") images.push_back(entry.path().string());
    std::sort(images.begin(), images.end());
    if (!images.empty()) background = read_png_color(images[config.seed % images.size()]);
  }

  fs::create_directories(out_dir);
  DatasetResult result;
  int sample_idx = 0;
  for (const auto& path : mesh_paths) {
    TriangleMesh mesh;
    std::map<std::string, Vec3f> joints3d;
    bool have_joints3d = false;
    try {
      mesh = load_mesh(path);
      if (mesh.empty()) throw std::runtime_error("mesh has no triangles");
      const std::string jpath = fs::path(path).replace_extension(".joints3d.json").string();
      if (fs::exists(jpath)) {
        joints3d = load_joints3d_json(jpath);
        have_joints3d = true;
      }
    } catch (const std::exception& e) {
      result.errors.push_back({path, e.what()});
      continue;
    }
    const std::string mesh_id = fs::path(path).stem().string();
    for (float yaw : config.yaws) {
      RenderSample sample = render_sample(mesh, yaw, config, mesh_id,
                                          have_joints3d ? &joints3d : nullptr,
                                          background ? &*background : nullptr);
      char name[32];
      std::snprintf(name, sizeof(name), "sample_%05d", sample_idx++);
      const std::string dir = out_dir + "/" + name;
      write_sample(dir, sample, have_joints3d ? "projected_3d" : "heuristic", mesh_id,
                   config.seed);
      result.sample_dirs.push_back(dir);
    }
  }
  if (result.sample_dirs.empty())
    throw std::runtime_error("generate_dataset: no samples produced (all meshes failed)");
  return result;
}

}  // namespace humrec
