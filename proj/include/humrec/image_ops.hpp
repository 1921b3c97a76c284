#pragma once

#include "humrec/camera.hpp"
#include "humrec/image.hpp"
#include "humrec/pointcloud.hpp"

namespace humrec {

// Box-filter downsampling by an integer factor. The factor must divide both
// dimensions. Normal maps are renormalized on pixels whose averaged vector is
// nonzero; masks stay continuous.
ColorImage downsample(const ColorImage& img, int factor);
DepthMap downsample(const DepthMap& img, int factor);
NormalMap downsample(const NormalMap& img, int factor);
MaskMap downsample(const MaskMap& img, int factor);

// Depth average over valid source pixels only (mask-weighted box filter).
// Used to build low-resolution depth targets so that background zeros do not
// bleed into boundary blocks.
DepthMap downsample_masked(const DepthMap& d, const MaskMap& mask, int factor);

// Central differences on valid pixels, one-sided at mask boundaries.
// Output normal = normalize(-dd/dx, -dd/dy, 1); zero vector on invalid pixels,
// (0,0,1) where the gradient is degenerate.
NormalMap depth_to_normal(const DepthMap& d, const MaskMap& mask, float pixel_pitch);

// Un-projects every valid pixel of both sheets through the camera.
PointCloud depth_to_points(const DoubleSided<DepthMap>& d, const MaskMap& mask, const Camera& cam);

// Bilinear sample with zero outside the source. `x`,`y` are pixel-center
// coordinates (sample at integer (x,y) returns pixel (x,y) exactly).
float sample_bilinear(const DepthMap& img, float x, float y);
float sample_bilinear(const MaskMap& img, float x, float y);
Vec3f sample_bilinear(const NormalMap& img, float x, float y);
Vec3f sample_bilinear(const ColorImage& img, float x, float y);

MaskMap binarize(const MaskMap& m, float threshold = 0.5f);

}  // namespace humrec
