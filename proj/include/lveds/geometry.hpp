#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace lveds {

struct Point2D {
    double x = 0.0;
    double y = 0.0;
};

inline bool is_finite(const Point2D& p) {
    return std::isfinite(p.x) && std::isfinite(p.y);
}

inline double squared_distance(const Point2D& a, const Point2D& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

// Coordinates scaled by 10 and rounded to integers. Valid only when every
// input coordinate is an integer multiple of 0.1, in which case distance
// comparisons against a 0.1-aligned threshold are exact in int64 arithmetic.
struct ScaledPoint {
    std::int64_t x = 0;
    std::int64_t y = 0;
};

inline std::optional<std::int64_t> to_scaled_int(double v) {
    const double scaled = v * 10.0;
    const double rounded = std::nearbyint(scaled);
    if (std::abs(scaled - rounded) > 1e-9) return std::nullopt;
    if (std::abs(rounded) > 9.0e15) return std::nullopt;
    return static_cast<std::int64_t>(rounded);
}

// Scaled-integer view of a point set, or nullopt if any coordinate is off
// the 0.1 grid.
inline std::optional<std::vector<ScaledPoint>> to_scaled_grid(const std::vector<Point2D>& pts) {
    std::vector<ScaledPoint> out;
    out.reserve(pts.size());
    for (const Point2D& p : pts) {
        auto sx = to_scaled_int(p.x);
        auto sy = to_scaled_int(p.y);
        if (!sx || !sy) return std::nullopt;
        out.push_back({*sx, *sy});
    }
    return out;
}

inline std::int64_t squared_distance(const ScaledPoint& a, const ScaledPoint& b) {
    const std::int64_t dx = a.x - b.x;
    const std::int64_t dy = a.y - b.y;
    return dx * dx + dy * dy;
}

}  // namespace lveds
