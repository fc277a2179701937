#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "lveds/geometry.hpp"

namespace lveds {

struct GeneratorSpec {
    int n = 0;
    double side = 1.0;
    std::uint64_t seed = 0;
    std::optional<double> min_sep;
};

// Uniform points in [0, side]^2, identical across platforms for a fixed seed:
// mt19937_64 output mapped to [0,1) by taking the top 53 bits, with no
// distribution classes involved (their outputs are not portable).
inline std::vector<Point2D> generate_random_instance(const GeneratorSpec& spec) {
    if (spec.n < 0) throw std::invalid_argument("point count must be nonnegative");
    if (!(spec.side > 0.0)) throw std::invalid_argument("square side must be positive");
    if (spec.min_sep && !(*spec.min_sep >= 0.0))
        throw std::invalid_argument("minimum separation must be nonnegative");

    std::mt19937_64 rng(spec.seed);
    auto coord = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 * spec.side; };

    std::vector<Point2D> pts;
    pts.reserve(spec.n);
    const double sep2 = spec.min_sep ? *spec.min_sep * *spec.min_sep : 0.0;
    long long attempts_left = 1000LL * (spec.n + 1);
    while (static_cast<int>(pts.size()) < spec.n) {
        if (attempts_left-- <= 0)
            throw std::runtime_error("rejection sampling gave up after placing " +
                                     std::to_string(pts.size()) + " of " +
                                     std::to_string(spec.n) + " points; lower min_sep or n");
        Point2D p{coord(), coord()};
        if (spec.min_sep) {
            bool ok = true;
            for (const Point2D& q : pts) {
                if (squared_distance(p, q) < sep2) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
        }
        pts.push_back(p);
    }
    return pts;
}

}  // namespace lveds
