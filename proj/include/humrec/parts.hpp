#pragma once

#include <array>
#include <string>
#include <vector>

#include "humrec/image.hpp"
#include "humrec/joints.hpp"

namespace humrec {

// 2D similarity map from full-image pixel coordinates to canonical patch
// coordinates: q = scale * R(rotation) * p + translation.
struct SimilarityTransform {
  float scale = 1.0f;
  float rotation = 0.0f;  // radians
  Vec2f translation = Vec2f::Zero();

  Vec2f apply(const Vec2f& p) const;
  Vec2f apply_inverse(const Vec2f& q) const;
  SimilarityTransform inverse() const;
  SimilarityTransform compose(const SimilarityTransform& first) const;  // this ∘ first
};

enum class PartGroup : int { Head = 0, Torso = 1, Arm = 2, Leg = 3, Foot = 4 };

struct PartSpec {
  int id = 0;
  PartGroup group = PartGroup::Head;
  std::string name;
  std::vector<std::string> joint_names;        // 2 for limbs, 4 for the torso
  std::vector<Vec2f> anchors;                  // canonical joint positions, patch px
  int patch_width = 0, patch_height = 0;
  bool mirrored = false;  // right-side limbs are mirrored into the left chirality
  bool active = false;
  SimilarityTransform transform;  // image -> patch, valid when active
  float residual_rms = 0.0f;      // LSQ alignment residual (multi-joint parts)
};

// Canonical patch sizes at a given working resolution. Sizes scale linearly
// from the 2048 reference table and stay divisible by 8.
struct PartTable {
  int reference_resolution = 2048;
  std::vector<PartSpec> parts;  // 12 entries

  static PartTable canonical(int resolution);
  // Sum over patch areas divided by the full image area.
  static double area_ratio(int resolution);
};

// Resolves the 12 parts against a joint set; parts with missing or
// degenerate joints are flagged absent. Throws if every part is absent.
std::vector<PartSpec> define_parts(const JointSet& joints, int resolution);

// Closed form for 2-joint parts, least-squares similarity for 3-4 joints.
// Throws on coincident joints (segment < 2 px).
SimilarityTransform estimate_similarity(const PartSpec& part, const JointSet& joints);

void save_parts_debug_json(const std::string& path, const std::vector<PartSpec>& parts);

}  // namespace humrec
