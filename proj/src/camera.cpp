#include "dynfeat/camera.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "dynfeat/errors.hpp"
#include "dynfeat/parse.hpp"

namespace dynfeat {

void CameraIntrinsics::validate() const {
    if (!(fx > 0.0) || !(fy > 0.0)) throw InputError("intrinsics: fx and fy must be positive");
    if (!(depth_scale > 0.0)) throw InputError("intrinsics: depth_scale must be positive");
    if (!std::isfinite(cx) || !std::isfinite(cy)) throw InputError("intrinsics: cx/cy must be finite");
}

void DepthImage::validate() const {
    if (width < 0 || height < 0) throw InputError("depth image: negative dimensions");
    if (values.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
        throw InputError("depth image: values length != width*height");
}

CameraIntrinsics load_intrinsics(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open intrinsics file: " + path);

    std::map<std::string, double, std::less<>> kv;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view sv = trim(line);
        if (sv.empty() || sv.front() == '#') continue;
        const auto eq = sv.find('=');
        if (eq == std::string_view::npos)
            throw InputError(path + ":" + std::to_string(line_no) + ": expected key=value");
        const std::string key{trim(sv.substr(0, eq))};
        kv[key] = parse_double(trim(sv.substr(eq + 1)), path, line_no);
    }

    CameraIntrinsics k;
    for (const auto& [key, value] : kv) {
        if (key == "fx") k.fx = value;
        else if (key == "fy") k.fy = value;
        else if (key == "cx") k.cx = value;
        else if (key == "cy") k.cy = value;
        else if (key == "depth_scale") k.depth_scale = value;
        else throw InputError(path + ": unknown intrinsics key '" + key + "'");
    }
    for (const char* required : {"fx", "fy", "cx", "cy"})
        if (!kv.count(required)) throw InputError(path + ": missing intrinsics key '" + std::string(required) + "'");
    k.validate();
    return k;
}

void save_intrinsics(const std::string& path, const CameraIntrinsics& k) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write intrinsics file: " + path);
    char buf[256];
    std::snprintf(buf, sizeof(buf), "fx=%.9f\nfy=%.9f\ncx=%.9f\ncy=%.9f\ndepth_scale=%.9f\n",
                  k.fx, k.fy, k.cx, k.cy, k.depth_scale);
    out << buf;
}

PointCloud backproject(const DepthImage& depth, const CameraIntrinsics& k, int stride) {
    if (stride < 1) throw InputError("backproject: stride must be >= 1");
    k.validate();
    depth.validate();

    PointCloud cloud;
    cloud.reserve((static_cast<std::size_t>(depth.width) / stride + 1) *
                  (static_cast<std::size_t>(depth.height) / stride + 1));
    for (int v = 0; v < depth.height; v += stride) {
        const std::uint16_t* row = depth.values.data() + static_cast<std::size_t>(v) * depth.width;
        for (int u = 0; u < depth.width; u += stride) {
            const std::uint16_t raw = row[u];
            if (raw == 0) continue;
            const double z = raw / k.depth_scale;
            cloud.push_back(Point3{(u - k.cx) * z / k.fx, (v - k.cy) * z / k.fy, z});
        }
    }
    return cloud;
}

}  // namespace dynfeat
