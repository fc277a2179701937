#pragma once

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lveds/domination.hpp"
#include "lveds/geometry.hpp"
#include "lveds/ptas.hpp"
#include "lveds/reduction.hpp"
#include "lveds/vertex_set.hpp"

namespace lveds {

using json = nlohmann::json;

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline std::string read_whole_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline json parse_json(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
}

inline const json& require_field(const json& obj, const char* key, const std::string& origin) {
    if (!obj.is_object() || !obj.contains(key))
        throw ParseError(origin + ": missing field \"" + key + "\"");
    return obj.at(key);
}

inline std::string shortest(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

}  // namespace detail

struct PointInput {
    std::vector<Point2D> points;
    std::optional<double> radius;  // only the JSON variant can carry one
};

// Text form: one "x y" per line, blanks and #-comments ignored.
inline PointInput parse_points_text(const std::string& text, const std::string& origin) {
    PointInput out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        double x, y;
        if (!(fields >> x)) continue;  // blank after comment strip
        if (!(fields >> y))
            throw ParseError(origin + ":" + std::to_string(lineno) + ": expected \"x y\"");
        std::string extra;
        if (fields >> extra)
            throw ParseError(origin + ":" + std::to_string(lineno) + ": trailing \"" + extra +
                             "\" after the two coordinates");
        if (!is_finite(Point2D{x, y}))
            throw ParseError(origin + ":" + std::to_string(lineno) + ": non-finite coordinate");
        out.points.push_back({x, y});
    }
    return out;
}

inline PointInput parse_points_json(const json& j, const std::string& origin) {
    PointInput out;
    const json& pts = detail::require_field(j, "points", origin);
    if (!pts.is_array()) throw ParseError(origin + ": \"points\" must be an array");
    int i = 0;
    for (const json& p : pts) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
            throw ParseError(origin + ": points[" + std::to_string(i) +
                             "] must be a [x, y] number pair");
        Point2D pt{p[0].get<double>(), p[1].get<double>()};
        if (!is_finite(pt))
            throw ParseError(origin + ": points[" + std::to_string(i) + "] is non-finite");
        out.points.push_back(pt);
        ++i;
    }
    if (j.contains("radius")) {
        if (!j["radius"].is_number() || !(j["radius"].get<double>() > 0.0))
            throw ParseError(origin + ": \"radius\" must be a positive number");
        out.radius = j["radius"].get<double>();
    }
    return out;
}

// Sniffs the variant: files whose first non-space byte is '{' are JSON.
inline PointInput read_point_input(const std::string& path) {
    const std::string text = detail::read_whole_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return parse_points_json(detail::parse_json(text, path), path);
    return parse_points_text(text, path);
}

inline std::string points_to_text(const std::vector<Point2D>& pts) {
    std::string out;
    for (const Point2D& p : pts) {
        out += detail::shortest(p.x);
        out += ' ';
        out += detail::shortest(p.y);
        out += '\n';
    }
    return out;
}

inline json set_to_json(const VertexSet& s) {
    return json{{"size", s.size()}, {"vertices", s.values()}};
}

inline VertexSet set_from_json(const json& j, const std::string& origin) {
    const json& verts = detail::require_field(j, "vertices", origin);
    if (!verts.is_array()) throw ParseError(origin + ": \"vertices\" must be an array");
    std::vector<int> v;
    for (const json& e : verts) {
        if (!e.is_number_integer())
            throw ParseError(origin + ": \"vertices\" entries must be integers");
        v.push_back(e.get<int>());
    }
    VertexSet out(std::move(v));
    if (j.contains("size") && j["size"].get<std::size_t>() != out.size())
        throw ParseError(origin + ": \"size\" disagrees with the vertex list");
    return out;
}

inline VertexSet set_from_file(const std::string& path) {
    return set_from_json(detail::parse_json(detail::read_whole_file(path), path), path);
}

inline json witness_to_json(const Witness& w) {
    if (const auto* ew = std::get_if<EdgeWitness>(&w))
        return json{{"kind", "edge"},
                    {"edge", {ew->edge.first, ew->edge.second}},
                    {"count", ew->count}};
    const auto& pw = std::get<PairWitness>(w);
    return json{{"kind", "pair"},
                {"edges",
                 {{pw.e1.first, pw.e1.second}, {pw.e2.first, pw.e2.second}}},
                {"count", pw.count}};
}

inline json verdict_to_json(const Verdict& v) {
    json j{{"valid", v.valid}};
    j["witness"] = v.witness ? witness_to_json(*v.witness) : json(nullptr);
    return j;
}

inline json oracle_result_to_json(const OracleResult& r) {
    json j;
    switch (r.status) {
        case OracleStatus::found: j["status"] = "found"; break;
        case OracleStatus::infeasible: j["status"] = "infeasible"; break;
        case OracleStatus::budget_exceeded: j["status"] = "budget_exceeded"; break;
        case OracleStatus::upper_bound_exhausted: j["status"] = "upper_bound_exhausted"; break;
    }
    j["solution"] = r.status == OracleStatus::found ? set_to_json(r.solution) : json(nullptr);
    j["witness"] = r.infeasibility ? witness_to_json(*r.infeasibility) : json(nullptr);
    j["cardinality_reached"] = r.cardinality_reached;
    j["subsets_examined"] = r.subsets_examined;
    return j;
}

inline json ptas_result_to_json(const PtasResult& r) {
    json pieces = json::array();
    for (std::size_t i = 0; i < r.pieces.size(); ++i) {
        const SeparatedEntry& e = r.collection.entries[i];
        pieces.push_back({{"center", e.center},
                          {"radius", e.radius},
                          {"core_size", e.s.size()},
                          {"hull_size", e.t.size()},
                          {"set_size", r.pieces[i].set.size()},
                          {"exact", r.pieces[i].exact},
                          {"work", r.pieces[i].work}});
    }
    return json{{"solution", set_to_json(r.solution)},
                {"valid", r.final_verdict.valid},
                {"repairs", r.repair_additions},
                {"pieces", pieces},
                {"stats",
                 {{"pieces", r.stats.pieces},
                  {"max_radius", r.stats.max_radius},
                  {"total_work", r.stats.total_work},
                  {"inexact_pieces", r.stats.inexact_pieces}}},
                {"timing_ms",
                 {{"build", r.stats.build_ms},
                  {"solve", r.stats.solve_ms},
                  {"verify", r.stats.verify_ms}}}};
}

inline OrthogonalEmbedding embedding_from_json(const json& j, const std::string& origin) {
    OrthogonalEmbedding emb;
    const json& nodes = detail::require_field(j, "nodes", origin);
    if (!nodes.is_array()) throw ParseError(origin + ": \"nodes\" must be an array");
    for (const json& nd : nodes) {
        const json& id = detail::require_field(nd, "id", origin + " nodes[]");
        const json& pos = detail::require_field(nd, "pos", origin + " nodes[]");
        if (!id.is_number_integer() || !pos.is_array() || pos.size() != 2 ||
            !pos[0].is_number_integer() || !pos[1].is_number_integer())
            throw ParseError(origin + ": node entries need integer \"id\" and integer \"pos\" pair");
        emb.nodes.push_back({id.get<int>(), pos[0].get<long long>(), pos[1].get<long long>()});
    }
    const json& edges = detail::require_field(j, "edges", origin);
    if (!edges.is_array()) throw ParseError(origin + ": \"edges\" must be an array");
    for (const json& ed : edges) {
        OrthogonalEmbedding::Chain c;
        c.u = detail::require_field(ed, "u", origin + " edges[]").get<int>();
        c.v = detail::require_field(ed, "v", origin + " edges[]").get<int>();
        const json& chain = detail::require_field(ed, "chain", origin + " edges[]");
        if (!chain.is_array()) throw ParseError(origin + ": edge \"chain\" must be an array");
        for (const json& p : chain) {
            if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
                !p[1].is_number_integer())
                throw ParseError(origin + ": chain corners must be integer pairs");
            c.corners.emplace_back(p[0].get<long long>(), p[1].get<long long>());
        }
        emb.edges.push_back(std::move(c));
    }
    if (j.contains("pendants")) {
        if (!j["pendants"].is_object())
            throw ParseError(origin + ": \"pendants\" must map node ids to directions");
        for (const auto& [key, val] : j["pendants"].items()) {
            int id;
            auto [end, ec] = std::from_chars(key.data(), key.data() + key.size(), id);
            if (ec != std::errc{} || end != key.data() + key.size() || !val.is_string())
                throw ParseError(origin + ": pendant entries are \"nodeid\": \"+x|-x|+y|-y\"");
            emb.pendant_dirs[id] = val.get<std::string>();
        }
    }
    return emb;
}

inline OrthogonalEmbedding embedding_from_file(const std::string& path) {
    return embedding_from_json(detail::parse_json(detail::read_whole_file(path), path), path);
}

inline json embedding_to_json(const OrthogonalEmbedding& emb) {
    json nodes = json::array();
    for (const auto& nd : emb.nodes)
        nodes.push_back({{"id", nd.id}, {"pos", {nd.x, nd.y}}});
    json edges = json::array();
    for (const auto& c : emb.edges) {
        json chain = json::array();
        for (const auto& [x, y] : c.corners) chain.push_back({x, y});
        edges.push_back({{"u", c.u}, {"v", c.v}, {"chain", chain}});
    }
    json pend = json::object();
    for (const auto& [id, dir] : emb.pendant_dirs) pend[std::to_string(id)] = dir;
    return json{{"nodes", nodes}, {"edges", edges}, {"pendants", pend}};
}

// Bookkeeping that travels next to the instance's point file.
inline json instance_sidecar_json(const ReductionInstance& inst) {
    json chains = json::array();
    for (const auto& c : inst.chains)
        chains.push_back({{"u", c.u},
                          {"v", c.v},
                          {"path", c.path_order},
                          {"segment_sizes", c.segment_sizes}});
    return json{{"n", inst.n},
                {"m", inst.m},
                {"l", inst.l},
                {"radius", 1.0},
                {"counts",
                 {{"node", inst.n},
                  {"chain", 10 * inst.l + inst.m},
                  {"pendant", 4 * inst.n},
                  {"total", inst.points.size()}}},
                {"node_points", inst.node_points},
                {"pendant_points", inst.pendant_points},
                {"chains", chains},
                {"note", inst.notes}};
}

}  // namespace lveds
