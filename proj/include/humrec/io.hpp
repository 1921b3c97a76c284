#pragma once

#include <string>

#include "humrec/image.hpp"

namespace humrec {

// Portable float map, little-endian (scale header -1.0). Depth and mask planes
// use the single-channel "Pf" variant, normal maps the 3-channel "PF" variant.
void write_pfm(const std::string& path, const DepthMap& d);
void write_pfm(const std::string& path, const MaskMap& m);
void write_pfm(const std::string& path, const NormalMap& n);
DepthMap read_pfm_depth(const std::string& path);
MaskMap read_pfm_mask(const std::string& path);
NormalMap read_pfm_normal(const std::string& path);

// 8-bit PNG: RGB for color images, grayscale for masks.
void write_png(const std::string& path, const ColorImage& img);
void write_png(const std::string& path, const MaskMap& m);
ColorImage read_png_color(const std::string& path);
MaskMap read_png_mask(const std::string& path);

}  // namespace humrec
