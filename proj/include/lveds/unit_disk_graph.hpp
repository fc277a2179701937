#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lveds/geometry.hpp"
#include "lveds/vertex_set.hpp"

namespace lveds {

using Edge = std::pair<int, int>;  // always stored with first < second

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Intersection graph of equal-radius disks: vertices are points, an edge
// joins two points whose Euclidean distance is at most radius_threshold
// (closed condition, so a pair exactly at the threshold is adjacent).
//
// Immutable after construction; concurrent readers are safe.
class UnitDiskGraph {
  public:
    UnitDiskGraph() = default;

    const std::vector<Point2D>& points() const { return points_; }
    double radius_threshold() const { return radius_; }
    int vertex_count() const { return static_cast<int>(points_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool adjacent(int u, int v) const {
        if (u == v) return false;
        const auto& a = adj_[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    // True when adjacency was decided on 10x-scaled integer coordinates.
    bool exact_grid() const { return exact_grid_; }
    // Number of coincident point pairs found during construction. Duplicates
    // are legal (mutually adjacent twins) but usually indicate input errors.
    std::int64_t duplicate_point_pairs() const { return duplicate_pairs_; }

    friend UnitDiskGraph detail_build_graph(std::vector<Point2D> points, double radius_threshold,
                                            std::optional<bool> force_buckets);

  private:
    std::vector<Point2D> points_;
    double radius_ = 1.0;
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
    bool exact_grid_ = false;
    std::int64_t duplicate_pairs_ = 0;
};

namespace detail {

// Adjacency oracle used during construction: exact scaled-int arithmetic when
// every coordinate sits on the 0.1 grid and the threshold does too, otherwise
// squared-distance comparison in doubles.
struct AdjacencyDecider {
    const std::vector<Point2D>& pts;
    double r2;
    const std::vector<ScaledPoint>* scaled = nullptr;  // non-null => exact path
    std::int64_t scaled_r2 = 0;

    bool operator()(int i, int j) const {
        if (scaled) return squared_distance((*scaled)[i], (*scaled)[j]) <= scaled_r2;
        return squared_distance(pts[i], pts[j]) <= r2;
    }
    bool coincident(int i, int j) const {
        if (scaled) return (*scaled)[i].x == (*scaled)[j].x && (*scaled)[i].y == (*scaled)[j].y;
        return pts[i].x == pts[j].x && pts[i].y == pts[j].y;
    }
};

inline void all_pairs_adjacency(const AdjacencyDecider& decide, int n,
                                std::vector<std::vector<int>>& adj, std::int64_t& dup_pairs) {
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (decide(i, j)) {
                adj[i].push_back(j);
                adj[j].push_back(i);
                if (decide.coincident(i, j)) ++dup_pairs;
            }
        }
    }
}

// Uniform-grid bucketing: cells of side radius_threshold, candidates from the
// 3x3 surrounding block. Used for large inputs; gives the same adjacency as
// the all-pairs check.
inline void bucketed_adjacency(const AdjacencyDecider& decide, const std::vector<Point2D>& pts,
                               double radius, std::vector<std::vector<int>>& adj,
                               std::int64_t& dup_pairs) {
    const int n = static_cast<int>(pts.size());
    struct CellKey {
        std::int64_t cx, cy;
        bool operator<(const CellKey& o) const {
            return cx != o.cx ? cx < o.cx : cy < o.cy;
        }
    };
    std::vector<std::pair<CellKey, int>> cells(n);
    for (int i = 0; i < n; ++i) {
        cells[i] = {{static_cast<std::int64_t>(std::floor(pts[i].x / radius)),
                     static_cast<std::int64_t>(std::floor(pts[i].y / radius))},
                    i};
    }
    std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
        if (a.first < b.first) return true;
        if (b.first < a.first) return false;
        return a.second < b.second;
    });
    auto cell_range = [&](CellKey k) {
        auto lo = std::lower_bound(cells.begin(), cells.end(), k, [](const auto& e, CellKey key) {
            return e.first < key;
        });
        auto hi = lo;
        while (hi != cells.end() && !(k < hi->first)) ++hi;
        return std::make_pair(lo, hi);
    };
    for (int i = 0; i < n; ++i) {
        const CellKey base{static_cast<std::int64_t>(std::floor(pts[i].x / radius)),
                           static_cast<std::int64_t>(std::floor(pts[i].y / radius))};
        for (std::int64_t dx = -1; dx <= 1; ++dx) {
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                auto [lo, hi] = cell_range({base.cx + dx, base.cy + dy});
                for (auto it = lo; it != hi; ++it) {
                    const int j = it->second;
                    if (j <= i) continue;
                    if (decide(i, j)) {
                        adj[i].push_back(j);
                        adj[j].push_back(i);
                        if (decide.coincident(i, j)) ++dup_pairs;
                    }
                }
            }
        }
    }
}

}  // namespace detail

inline UnitDiskGraph detail_build_graph(std::vector<Point2D> points, double radius_threshold,
                                        std::optional<bool> force_buckets) {
    if (!(radius_threshold > 0.0) || !std::isfinite(radius_threshold))
        throw std::invalid_argument("radius_threshold must be positive and finite");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!is_finite(points[i]))
            throw std::invalid_argument("non-finite coordinate at point index " + std::to_string(i));
    }

    UnitDiskGraph g;
    g.points_ = std::move(points);
    g.radius_ = radius_threshold;
    const int n = g.vertex_count();
    g.adj_.assign(n, {});

    auto scaled = to_scaled_grid(g.points_);
    auto scaled_r = to_scaled_int(radius_threshold);
    detail::AdjacencyDecider decide{g.points_, radius_threshold * radius_threshold};
    if (scaled && scaled_r) {
        decide.scaled = &*scaled;
        decide.scaled_r2 = *scaled_r * *scaled_r;
        g.exact_grid_ = true;
    }

    if (force_buckets.value_or(n > 10000)) {
        detail::bucketed_adjacency(decide, g.points_, radius_threshold, g.adj_, g.duplicate_pairs_);
        for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    } else {
        detail::all_pairs_adjacency(decide, n, g.adj_, g.duplicate_pairs_);
        // all-pairs fills neighbor lists in ascending order already
    }

    for (int u = 0; u < n; ++u)
        for (int v : g.adj_[u])
            if (u < v) g.edges_.emplace_back(u, v);
    return g;
}

inline UnitDiskGraph build_unit_disk_graph(std::vector<Point2D> points,
                                           double radius_threshold = 1.0) {
    return detail_build_graph(std::move(points), radius_threshold, std::nullopt);
}

namespace detail {
// Test hook: same construction with the spatial-bucket path forced on.
inline UnitDiskGraph build_with_buckets_for_testing(std::vector<Point2D> points,
                                                    double radius_threshold) {
    return detail_build_graph(std::move(points), radius_threshold, true);
}
}  // namespace detail

// N[e] = N[u] ∪ N[v] including both endpoints.
inline VertexSet closed_edge_neighborhood(const UnitDiskGraph& g, Edge e) {
    e = make_edge(e.first, e.second);
    if (e.first < 0 || e.second >= g.vertex_count() || !g.adjacent(e.first, e.second))
        throw std::invalid_argument("edge (" + std::to_string(e.first) + "," +
                                    std::to_string(e.second) + ") is not in the graph");
    std::vector<int> out;
    out.reserve(g.degree(e.first) + g.degree(e.second) + 2);
    out.push_back(e.first);
    out.push_back(e.second);
    out.insert(out.end(), g.neighbors(e.first).begin(), g.neighbors(e.first).end());
    out.insert(out.end(), g.neighbors(e.second).begin(), g.neighbors(e.second).end());
    return VertexSet(std::move(out));
}

// Breadth-first ball of hop radius r around v; r = 0 gives {v}.
inline VertexSet r_ball(const UnitDiskGraph& g, int v, int r) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
    if (r < 0) throw std::invalid_argument("radius must be non-negative");
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<int> ball{v};
    dist[v] = 0;
    std::queue<int> q;
    q.push(v);
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        if (dist[u] == r) continue;
        for (int w : g.neighbors(u)) {
            if (dist[w] >= 0) continue;
            dist[w] = dist[u] + 1;
            ball.push_back(w);
            q.push(w);
        }
    }
    return VertexSet(std::move(ball));
}

// Minimum hop distance between two nonempty vertex sets; nullopt when they
// lie in different connected components.
inline std::optional<int> hop_distance(const UnitDiskGraph& g, const VertexSet& a, const VertexSet& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("hop_distance requires nonempty sets");
    std::vector<char> in_b(g.vertex_count(), 0);
    for (int v : b) in_b[v] = 1;
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    for (int v : a) {
        if (in_b[v]) return 0;
        dist[v] = 0;
        q.push(v);
    }
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (dist[w] >= 0) continue;
            dist[w] = dist[u] + 1;
            if (in_b[w]) return dist[w];
            q.push(w);
        }
    }
    return std::nullopt;
}

// Edges of g with both endpoints in w, canonical order.
inline std::vector<Edge> induced_edges(const UnitDiskGraph& g, const VertexSet& w) {
    std::vector<char> in_w(g.vertex_count(), 0);
    for (int v : w) {
        if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
        in_w[v] = 1;
    }
    std::vector<Edge> out;
    for (int u : w)
        for (int v : g.neighbors(u))
            if (u < v && in_w[v]) out.emplace_back(u, v);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace lveds
