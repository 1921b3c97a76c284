#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "humrec/math.hpp"

namespace humrec {

struct Joint2D {
  std::string name;
  float x = 0.0f;
  float y = 0.0f;
  float confidence = 0.0f;
};

// Named 2D body joints in pixel coordinates. A joint with confidence below
// the presence threshold counts as missing.
struct JointSet {
  std::vector<Joint2D> joints;

  static constexpr float kPresenceThreshold = 0.3f;

  const Joint2D* find(const std::string& name) const;
  bool present(const std::string& name) const;
  void set(const std::string& name, float x, float y, float confidence = 1.0f);
};

// The joint names the part table relies on.
const std::vector<std::string>& required_joint_names();

JointSet load_joints_json(const std::string& path);
void save_joints_json(const std::string& path, const JointSet& joints,
                      const std::string& provenance = "");

// Optional per-mesh 3D joint annotations ({name, x, y, z} array).
std::map<std::string, Vec3f> load_joints3d_json(const std::string& path);
void save_joints3d_json(const std::string& path, const std::map<std::string, Vec3f>& joints);

}  // namespace humrec
