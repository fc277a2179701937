#include <catch_amalgamated.hpp>

#include <random>

#include "lveds/generator.hpp"
#include "lveds/geometry.hpp"
#include "lveds/unit_disk_graph.hpp"
#include "lveds/vertex_set.hpp"

using namespace lveds;

namespace {

std::vector<Point2D> grid_points(std::mt19937_64& rng, int n, int span_tenths) {
    std::vector<Point2D> pts;
    for (int i = 0; i < n; ++i) {
        const auto gx = static_cast<long long>(rng() % (2 * span_tenths + 1)) - span_tenths;
        const auto gy = static_cast<long long>(rng() % (2 * span_tenths + 1)) - span_tenths;
        pts.push_back({static_cast<double>(gx) / 10.0, static_cast<double>(gy) / 10.0});
    }
    return pts;
}

}  // namespace

TEST_CASE("scaled integer conversion accepts 0.1-grid coordinates") {
    CHECK(to_scaled_int(0.0) == 0);
    CHECK(to_scaled_int(1.0) == 10);
    CHECK(to_scaled_int(-4.2) == -42);
    CHECK(to_scaled_int(9.9) == 99);
    CHECK_FALSE(to_scaled_int(0.05).has_value());
    CHECK_FALSE(to_scaled_int(1.0 / 3.0).has_value());
}

TEST_CASE("adjacency is a closed condition at the threshold") {
    UnitDiskGraph g1 = build_unit_disk_graph({{0, 0}, {1, 0}}, 1.0);
    CHECK(g1.edges() == std::vector<Edge>{{0, 1}});
    UnitDiskGraph g2 = build_unit_disk_graph({{0, 0}, {1.2, 0}}, 1.0);
    CHECK(g2.edges().empty());
}

TEST_CASE("graph construction rejects bad input") {
    CHECK_THROWS_AS(build_unit_disk_graph({{0, 0}}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(build_unit_disk_graph({{0, 0}}, -1.0), std::invalid_argument);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(build_unit_disk_graph({{nan, 0}}, 1.0), std::invalid_argument);
}

TEST_CASE("duplicate points are allowed and counted") {
    UnitDiskGraph g = build_unit_disk_graph({{0, 0}, {0, 0}, {5, 5}}, 1.0);
    CHECK(g.duplicate_point_pairs() == 1);
    CHECK(g.adjacent(0, 1));
}

TEST_CASE("closed edge neighborhood expands both endpoints") {
    UnitDiskGraph path = build_unit_disk_graph({{0, 0}, {1, 0}, {2, 0}}, 1.0);
    CHECK(closed_edge_neighborhood(path, {0, 1}) == VertexSet{0, 1, 2});
    UnitDiskGraph k2 = build_unit_disk_graph({{0, 0}, {1, 0}}, 1.0);
    CHECK(closed_edge_neighborhood(k2, {0, 1}) == VertexSet{0, 1});
    UnitDiskGraph star = build_unit_disk_graph({{0, 0}, {1, 0}, {-1, 0}, {0, 1}}, 1.0);
    CHECK(closed_edge_neighborhood(star, {0, 1}) == VertexSet{0, 1, 2, 3});
    CHECK_THROWS_AS(closed_edge_neighborhood(star, {1, 2}), std::invalid_argument);
}

TEST_CASE("r_ball grows one hop at a time") {
    UnitDiskGraph path = build_unit_disk_graph({{0, 0}, {1, 0}, {2, 0}}, 1.0);
    CHECK(r_ball(path, 0, 0) == VertexSet{0});
    CHECK(r_ball(path, 0, 1) == VertexSet{0, 1});
    CHECK(r_ball(path, 0, 2) == VertexSet{0, 1, 2});
    CHECK(r_ball(path, 0, 7) == VertexSet{0, 1, 2});
}

TEST_CASE("hop distance between sets") {
    UnitDiskGraph path = build_unit_disk_graph({{0, 0}, {1, 0}, {2, 0}}, 1.0);
    CHECK(hop_distance(path, VertexSet{0}, VertexSet{0}) == 0);
    CHECK(hop_distance(path, VertexSet{0}, VertexSet{2}) == 2);
    UnitDiskGraph iso = build_unit_disk_graph({{0, 0}, {5, 0}}, 1.0);
    CHECK_FALSE(hop_distance(iso, VertexSet{0}, VertexSet{1}).has_value());
    CHECK_THROWS_AS(hop_distance(path, VertexSet{}, VertexSet{0}), std::invalid_argument);
}

TEST_CASE("induced edges keep both endpoints inside") {
    UnitDiskGraph path = build_unit_disk_graph({{0, 0}, {1, 0}, {2, 0}}, 1.0);
    CHECK(induced_edges(path, VertexSet{0, 1, 2}) == path.edges());
    CHECK(induced_edges(path, VertexSet{1}).empty());
    CHECK(induced_edges(path, VertexSet{0, 2}).empty());
}

TEST_CASE("adjacency is symmetric and irreflexive on random instances") {
    for (std::uint64_t seed : {1, 2, 3}) {
        GeneratorSpec spec{60, 5.0, seed, std::nullopt};
        UnitDiskGraph g = build_unit_disk_graph(generate_random_instance(spec), 1.0);
        for (int u = 0; u < g.vertex_count(); ++u) {
            CHECK_FALSE(g.adjacent(u, u));
            for (int v : g.neighbors(u)) CHECK(g.adjacent(v, u));
        }
        for (const Edge& e : g.edges()) {
            CHECK(e.first < e.second);
            CHECK(squared_distance(g.points()[e.first], g.points()[e.second]) <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("r_ball is monotone in r and saturates at the component") {
    GeneratorSpec spec{40, 4.0, 7, std::nullopt};
    UnitDiskGraph g = build_unit_disk_graph(generate_random_instance(spec), 1.0);
    for (int v = 0; v < g.vertex_count(); v += 5) {
        VertexSet prev = r_ball(g, v, 0);
        for (int r = 1; r <= 10; ++r) {
            VertexSet cur = r_ball(g, v, r);
            CHECK(prev.is_subset_of(cur));
            prev = cur;
        }
        CHECK(r_ball(g, v, g.vertex_count()) == r_ball(g, v, g.vertex_count() + 3));
    }
}

TEST_CASE("hop distance satisfies the triangle inequality") {
    GeneratorSpec spec{30, 3.0, 13, std::nullopt};
    UnitDiskGraph g = build_unit_disk_graph(generate_random_instance(spec), 1.0);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const int a = static_cast<int>(rng() % g.vertex_count());
        const int b = static_cast<int>(rng() % g.vertex_count());
        const int c = static_cast<int>(rng() % g.vertex_count());
        auto ab = hop_distance(g, VertexSet{a}, VertexSet{b});
        auto bc = hop_distance(g, VertexSet{b}, VertexSet{c});
        auto ac = hop_distance(g, VertexSet{a}, VertexSet{c});
        if (ab && bc) {
            REQUIRE(ac.has_value());
            CHECK(*ac <= *ab + *bc);
        }
    }
}

TEST_CASE("exact grid decisions agree with floating point away from the threshold") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Point2D> pts = grid_points(rng, 40, 30);
        UnitDiskGraph g = build_unit_disk_graph(pts, 1.0);
        REQUIRE(g.exact_grid());
        for (int u = 0; u < g.vertex_count(); ++u) {
            for (int v = u + 1; v < g.vertex_count(); ++v) {
                const double d2 = squared_distance(pts[u], pts[v]);
                if (std::abs(d2 - 1.0) > 1e-6) {
                    CHECK(g.adjacent(u, v) == (d2 < 1.0));
                } else {
                    // exactly at the threshold on the grid: must count as adjacent
                    CHECK(g.adjacent(u, v));
                }
            }
        }
    }
}

TEST_CASE("bucketed construction matches all-pairs construction") {
    GeneratorSpec spec{500, 10.0, 21, std::nullopt};
    std::vector<Point2D> pts = generate_random_instance(spec);
    UnitDiskGraph dense = build_unit_disk_graph(pts, 1.0);
    UnitDiskGraph bucketed = detail::build_with_buckets_for_testing(pts, 1.0);
    CHECK(dense.edges() == bucketed.edges());
}

TEST_CASE("generator is deterministic and respects bounds") {
    GeneratorSpec spec{12, 3.0, 7, std::nullopt};
    std::vector<Point2D> a = generate_random_instance(spec);
    std::vector<Point2D> b = generate_random_instance(spec);
    REQUIRE(a.size() == 12);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].x == b[i].x);
        CHECK(a[i].y == b[i].y);
        CHECK((a[i].x >= 0.0 && a[i].x <= 3.0));
        CHECK((a[i].y >= 0.0 && a[i].y <= 3.0));
    }
    CHECK(generate_random_instance({0, 1.0, 3, std::nullopt}).empty());

    GeneratorSpec sep{30, 10.0, 5, 0.5};
    std::vector<Point2D> spaced = generate_random_instance(sep);
    for (std::size_t i = 0; i < spaced.size(); ++i)
        for (std::size_t j = i + 1; j < spaced.size(); ++j)
            CHECK(squared_distance(spaced[i], spaced[j]) >= 0.25);
    CHECK_THROWS_AS(generate_random_instance({100, 1.0, 1, 5.0}), std::runtime_error);
}
