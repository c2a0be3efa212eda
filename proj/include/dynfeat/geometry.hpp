#pragma once

#include <cmath>
#include <vector>

namespace dynfeat {

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

using PointCloud = std::vector<Point3>;

inline double squared_distance(const Point3& a, const Point3& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dz = a.z - b.z;
    return dx * dx + dy * dy + dz * dz;
}

inline double distance(const Point3& a, const Point3& b) {
    return std::sqrt(squared_distance(a, b));
}

inline bool finite(const Point3& p) {
    return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

}  // namespace dynfeat
