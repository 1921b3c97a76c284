#include "humrec/joints.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace humrec {

using nlohmann::json;

const Joint2D* JointSet::find(const std::string& name) const {
  for (const auto& j : joints)
    if (j.name == name) return &j;
  return nullptr;
}

bool JointSet::present(const std::string& name) const {
  const Joint2D* j = find(name);
  return j && j->confidence >= kPresenceThreshold;
}

void JointSet::set(const std::string& name, float x, float y, float confidence) {
  for (auto& j : joints)
    if (j.name == name) {
      j = {name, x, y, confidence};
      return;
    }
  joints.push_back({name, x, y, confidence});
}

const std::vector<std::string>& required_joint_names() {
  static const std::vector<std::string> names = {
      "nose",       "neck",       "left_shoulder", "right_shoulder",
      "left_elbow", "right_elbow", "left_wrist",    "right_wrist",
      "left_hip",   "right_hip",   "left_knee",     "right_knee",
      "left_ankle", "right_ankle", "left_toe",      "right_toe"};
  return names;
}

JointSet load_joints_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("load_joints_json: cannot open " + path);
  json doc;
  f >> doc;
  const json& arr = doc.is_array() ? doc : doc.at("joints");
  JointSet js;
  for (const auto& item : arr) {
    Joint2D j;
    j.name = item.at("name").get<std::string>();
    j.x = item.at("x").get<float>();
    j.y = item.at("y").get<float>();
    j.confidence = item.value("confidence", 1.0f);
    js.joints.push_back(j);
  }
  return js;
}

void save_joints_json(const std::string& path, const JointSet& joints,
                      const std::string& provenance) {
  json arr = json::array();
  for (const auto& j : joints.joints)
    arr.push_back({{"name", j.name}, {"x", j.x}, {"y", j.y}, {"confidence", j.confidence}});
  json doc;
  if (provenance.empty()) {
    doc = arr;
  } else {
    doc = json{{"joints", arr}, {"provenance", provenance}};
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("save_joints_json: cannot open " + path);
  f << doc.dump(2) << "\n";
}

std::map<std::string, Vec3f> load_joints3d_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("load_joints3d_json: cannot open " + path);
  json doc;
  f >> doc;
  std::map<std::string, Vec3f> out;
  for (const auto& item : doc) {
    out[item.at("name").get<std::string>()] =
        Vec3f(item.at("x").get<float>(), item.at("y").get<float>(), item.at("z").get<float>());
  }
  return out;
}

void save_joints3d_json(const std::string& path, const std::map<std::string, Vec3f>& joints) {
  json arr = json::array();
  for (const auto& [name, p] : joints)
    arr.push_back({{"name", name}, {"x", p.x()}, {"y", p.y()}, {"z", p.z()}});
  std::ofstream f(path);
  if (!f) throw std::runtime_error("save_joints3d_json: cannot open " + path);
  f << arr.dump(2) << "\n";
}

}  // namespace humrec
