#pragma once

#include <fstream>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "obst/obstacles.hpp"

namespace obst {

using nlohmann::json;

/// On-disk problem instance: a graph, optionally its placement, optionally
/// an obstacle set. Vertex indices are 1-based in the file and 0-based in
/// memory; rationals travel as reduced "p/q" strings.
struct Instance {
    Graph graph;
    std::optional<PointSequence> points;
    std::vector<Obstacle> obstacles;

    Embedding embedding() const {
        if (!points) throw SchemaError("instance has no points");
        return Embedding(graph.n, *points);
    }
};

namespace detail {

inline Rat rat_from_json(const json& j, const char* what) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw SchemaError(std::string(what) + " must be an integer or a rational string");
}

inline json rat_to_json(const Rat& v) { return to_string(v); }

inline Point point_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2)
        throw SchemaError(std::string(what) + " must be a [x, y] pair");
    return Point{rat_from_json(j[0], what), rat_from_json(j[1], what)};
}

inline json point_to_json(const Point& p) {
    return json::array({rat_to_json(p.x), rat_to_json(p.y)});
}

} // namespace detail

inline Obstacle obstacle_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw SchemaError("obstacle must be an object with a \"type\"");
    const std::string type = j["type"].get<std::string>();
    if (type == "point") {
        if (!j.contains("at")) throw SchemaError("point obstacle needs \"at\"");
        return PointObstacle{detail::point_from_json(j["at"], "obstacle point")};
    }
    if (type == "polygon") {
        if (!j.contains("vertices") || !j["vertices"].is_array())
            throw SchemaError("polygon obstacle needs a \"vertices\" array");
        std::vector<Point> vs;
        for (const json& v : j["vertices"])
            vs.push_back(detail::point_from_json(v, "polygon vertex"));
        return make_polygon(std::move(vs));
    }
    if (type == "face") {
        if (!j.contains("id") || !j["id"].is_number_integer())
            throw SchemaError("face obstacle needs an integer \"id\"");
        const long long id = j["id"].get<long long>();
        if (id < 0) throw SchemaError("face id must be nonnegative");
        return FaceObstacle{static_cast<int>(id)};
    }
    throw SchemaError("unknown obstacle type \"" + type + "\"");
}

inline json obstacle_to_json(const Obstacle& o) {
    json j;
    if (const auto* pt = std::get_if<PointObstacle>(&o)) {
        j["type"] = "point";
        j["at"] = detail::point_to_json(pt->at);
    } else if (const auto* poly = std::get_if<PolygonObstacle>(&o)) {
        j["type"] = "polygon";
        j["vertices"] = json::array();
        for (const Point& v : poly->vertices) j["vertices"].push_back(detail::point_to_json(v));
    } else {
        j["type"] = "face";
        j["id"] = std::get<FaceObstacle>(o).face;
    }
    return j;
}

inline Instance parse_instance(const json& j) {
    if (!j.is_object()) throw SchemaError("instance must be a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw SchemaError("instance needs an integer \"n\"");
    const long long n = j["n"].get<long long>();
    if (n < 1 || n > 10000) throw SchemaError("vertex count out of range");

    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw SchemaError("\"edges\" must be an array");
        for (const json& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw SchemaError("each edge must be an [i, j] pair");
            edges.emplace_back(e[0].get<int>() - 1, e[1].get<int>() - 1);
        }
    }
    Instance inst;
    inst.graph = Graph(static_cast<int>(n), std::move(edges));

    if (j.contains("points")) {
        if (!j["points"].is_array() || j["points"].size() != static_cast<std::size_t>(n))
            throw SchemaError("\"points\" must list exactly n coordinate pairs");
        PointSequence points;
        for (const json& p : j["points"]) points.push_back(detail::point_from_json(p, "point"));
        try {
            require_distinct(points);
        } catch (const PreconditionError& err) {
            throw SchemaError(err.what());
        }
        inst.points = std::move(points);
    }
    if (j.contains("obstacles")) {
        if (!j["obstacles"].is_array()) throw SchemaError("\"obstacles\" must be an array");
        for (const json& o : j["obstacles"]) inst.obstacles.push_back(obstacle_from_json(o));
    }
    return inst;
}

inline json instance_to_json(const Instance& inst) {
    json j;
    j["n"] = inst.graph.n;
    j["edges"] = json::array();
    for (const auto& [u, v] : inst.graph.edges) j["edges"].push_back({u + 1, v + 1});
    if (inst.points) {
        j["points"] = json::array();
        for (const Point& p : *inst.points) j["points"].push_back(detail::point_to_json(p));
    }
    if (!inst.obstacles.empty()) {
        j["obstacles"] = json::array();
        for (const Obstacle& o : inst.obstacles) j["obstacles"].push_back(obstacle_to_json(o));
    }
    return j;
}

inline Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open instance file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw SchemaError("instance file " + path + " is not valid JSON: " + e.what());
    }
    return parse_instance(j);
}

/// Canonical dump: sorted keys (nlohmann's default object order), two-space
/// indent, trailing newline. Reports and instances written this way are
/// byte-stable.
inline std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

/// Atomic file write: stage to a sibling temp file, then rename over.
inline void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw SchemaError("cannot write file: " + tmp);
        out << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw SchemaError("cannot move " + tmp + " into place");
}

} // namespace obst
