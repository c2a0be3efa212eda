#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dynfeat/geometry.hpp"

namespace dynfeat {

struct CameraIntrinsics {
    double fx = 525.0;
    double fy = 525.0;
    double cx = 319.5;
    double cy = 239.5;
    double depth_scale = 5000.0;  // raw units per meter, TUM convention

    void validate() const;
};

// Row-major 16-bit raw depth samples; 0 means "no measurement".
struct DepthImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint16_t> values;

    std::uint16_t at(int u, int v) const { return values[static_cast<std::size_t>(v) * width + u]; }
    void validate() const;
};

struct PosedFrame {
    double timestamp = 0.0;
    DepthImage depth;
    std::string rgb_path;
};

// key=value text file with fx, fy, cx, cy and optional depth_scale.
CameraIntrinsics load_intrinsics(const std::string& path);
void save_intrinsics(const std::string& path, const CameraIntrinsics& k);

// Pinhole back-projection of one pixel with metric depth.
inline Point3 backproject_pixel(const CameraIntrinsics& k, double u, double v, double depth_m) {
    return Point3{(u - k.cx) * depth_m / k.fx, (v - k.cy) * depth_m / k.fy, depth_m};
}

struct PixelDepth {
    double u = 0.0;
    double v = 0.0;
    double raw = 0.0;  // depth in raw sensor units
};

inline PixelDepth project_to_pixel(const CameraIntrinsics& k, const Point3& p) {
    return PixelDepth{p.x * k.fx / p.z + k.cx, p.y * k.fy / p.z + k.cy, p.z * k.depth_scale};
}

// Samples every stride-th pixel in both axes, skipping zero-depth samples.
PointCloud backproject(const DepthImage& depth, const CameraIntrinsics& k, int stride);

}  // namespace dynfeat
