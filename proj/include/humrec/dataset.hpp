#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "humrec/joints.hpp"
#include "humrec/render.hpp"

namespace humrec {

struct RenderSample {
  ColorImage color;
  DoubleSided<DepthMap> depth;
  DoubleSided<NormalMap> normal;
  MaskMap mask;
  JointSet joints;
  float yaw_deg = 0.0f;
  Camera camera;
};

struct DatasetConfig {
  int resolution = 512;          // must be a multiple of the low-res factor
  int low_res_factor = 8;
  std::vector<float> yaws = {-30, -20, -10, 0, 10, 20, 30};
  uint64_t seed = 0;
  std::string background_dir;    // optional; mid-gray fallback
  Camera camera_template;        // position/fov; resolution overridden
  int threads = 1;
  int light_count = 90;
};

struct DatasetItemError {
  std::string mesh_path;
  std::string message;
};

struct DatasetResult {
  std::vector<std::string> sample_dirs;
  std::vector<DatasetItemError> errors;
};

// Renders one sample: center+rotate, ray cast, shade under a rig drawn from
// (seed, mesh_id, yaw). 3D joints (when given) ride the same transform and
// project through the camera; otherwise a bounding-box proportional skeleton
// stands in.
RenderSample render_sample(const TriangleMesh& mesh, float yaw_deg, const DatasetConfig& config,
                           const std::string& mesh_id,
                           const std::map<std::string, Vec3f>* joints3d,
                           const ColorImage* background);

void write_sample(const std::string& dir, const RenderSample& sample,
                  const std::string& joints_provenance, const std::string& mesh_id,
                  uint64_t seed);
RenderSample read_sample(const std::string& dir);

// One sample per (mesh, yaw) into out_dir/sample_%05d. Unreadable meshes are
// recorded and skipped. Deterministic for a fixed seed.
DatasetResult generate_dataset(const std::vector<std::string>& mesh_paths,
                               const std::string& out_dir, const DatasetConfig& config);

uint64_t fnv1a(const std::string& s);

}  // namespace humrec
