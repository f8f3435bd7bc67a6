#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "obst/arrangement.hpp"
#include "obst/obstacles.hpp"

namespace obst {

namespace detail {

/// Does the open segment (a, b) meet the open interior of a simple polygon?
/// The closed segment is split at every boundary incidence; a sub-interval
/// midpoint strictly inside decides. Tangency along the boundary never
/// blocks.
inline bool open_segment_meets_polygon(const Point& a, const Point& b,
                                       const std::vector<Point>& poly) {
    std::vector<Rat> events{Rat(0), Rat(1)};
    const Point d = b - a;
    const std::size_t k = poly.size();
    for (std::size_t i = 0; i < k; ++i) {
        const Point& p = poly[i];
        const Point& q = poly[(i + 1) % k];
        const Point e = q - p;
        const Rat den = cross(d, e);
        if (den == 0) {
            if (cross(a, b, p) != 0) continue;
            // Collinear overlap: project the polygon edge onto the segment.
            const Rat dd = dot(d, d);
            for (const Point* v : {&p, &q}) {
                const Rat t = dot(*v - a, d) / dd;
                if (t > 0 && t < 1) events.push_back(t);
            }
            continue;
        }
        const Rat t = cross(p - a, e) / den;
        const Rat s = cross(p - a, d) / den;
        if (t > 0 && t < 1 && s >= 0 && s <= 1) events.push_back(t);
    }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());
    for (std::size_t i = 0; i + 1 < events.size(); ++i) {
        const Rat tm = (events[i] + events[i + 1]) / 2;
        if (polygon_side(poly, a + tm * d) == PolygonSide::inside) return true;
    }
    return false;
}

} // namespace detail

/// True iff the open segment phi(u)phi(w) intersects some obstacle: a point
/// obstacle strictly inside the segment, a polygon's open interior, or a
/// face's interior. `arr` is required when face obstacles are present.
inline bool is_blocked(int u, int w, const Embedding& emb, std::span<const Obstacle> obstacles,
                       const Arrangement* arr = nullptr) {
    if (u < 0 || w < 0 || u >= emb.n || w >= emb.n)
        throw PreconditionError("vertex index out of range");
    if (u == w) throw PreconditionError("blocked query needs two distinct vertices");
    const Point& a = emb.points[u];
    const Point& b = emb.points[w];
    std::vector<int> face_seq;
    bool face_seq_ready = false;
    for (const Obstacle& o : obstacles) {
        if (const auto* pt = std::get_if<PointObstacle>(&o)) {
            if (strictly_inside_segment(pt->at, a, b)) return true;
        } else if (const auto* poly = std::get_if<PolygonObstacle>(&o)) {
            if (detail::open_segment_meets_polygon(a, b, poly->vertices)) return true;
        } else {
            const auto& face = std::get<FaceObstacle>(o);
            if (!arr)
                throw PreconditionError("face obstacles need the arrangement they refer to");
            if (arr->graph.has_edge(u, w)) continue; // edges run along the drawing
            if (!face_seq_ready) {
                face_seq = arr->segment_faces(a, b);
                face_seq_ready = true;
            }
            for (int f : face_seq)
                if (f == face.face) return true;
        }
    }
    return false;
}

/// The graph whose edges are exactly the unblocked pairs.
inline Graph visibility_graph(const Embedding& emb, std::span<const Obstacle> obstacles,
                              const Arrangement* arr = nullptr) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < emb.n; ++u)
        for (int w = u + 1; w < emb.n; ++w)
            if (!is_blocked(u, w, emb, obstacles, arr)) edges.emplace_back(u, w);
    return Graph(emb.n, std::move(edges));
}

struct PairStatus {
    int u, w;
    bool edge;
    bool blocked;
};

struct Violation {
    int u, w;
    enum class Kind { edge_blocked, non_edge_visible } kind;
};

/// Full per-pair record: valid iff the visibility graph equals the claimed
/// graph. All C(n,2) pairs are reported, not just the violations.
struct VerificationReport {
    bool valid = true;
    std::vector<PairStatus> pairs;
    std::vector<Violation> violations;
};

inline VerificationReport verify(const ObstacleRepresentation& rep) {
    std::shared_ptr<const Arrangement> arr = rep.arrangement;
    bool needs_arr = false;
    for (const Obstacle& o : rep.obstacles)
        if (std::holds_alternative<FaceObstacle>(o)) needs_arr = true;
    if (needs_arr && !arr)
        arr = std::make_shared<const Arrangement>(planarize(rep.graph, rep.embedding));
    VerificationReport report;
    for (int u = 0; u < rep.graph.n; ++u)
        for (int w = u + 1; w < rep.graph.n; ++w) {
            const bool edge = rep.graph.has_edge(u, w);
            const bool blocked = is_blocked(u, w, rep.embedding, rep.obstacles, arr.get());
            report.pairs.push_back({u, w, edge, blocked});
            if (edge && blocked) {
                report.valid = false;
                report.violations.push_back({u, w, Violation::Kind::edge_blocked});
            } else if (!edge && !blocked) {
                report.valid = false;
                report.violations.push_back({u, w, Violation::Kind::non_edge_visible});
            }
        }
    return report;
}

/// Places one point obstacle on the midpoint of every non-edge. Requires the
/// general-position property that no such midpoint lies on any other pair's
/// closed segment.
inline ObstacleRepresentation midpoint_representation(const Graph& graph, const Embedding& emb) {
    if (graph.n != emb.n) throw PreconditionError("graph and embedding sizes differ");
    const auto non_edges = graph.non_edges();
    for (const auto& [u, w] : non_edges) {
        const Point m = midpoint(emb.points[u], emb.points[w]);
        for (int a = 0; a < graph.n; ++a)
            for (int b = a + 1; b < graph.n; ++b) {
                if (a == u && b == w) continue;
                if (on_segment(m, emb.points[a], emb.points[b]))
                    throw PreconditionError(
                        "midpoint of non-edge (" + std::to_string(u + 1) + ", " +
                        std::to_string(w + 1) + ") lies on the segment of pair (" +
                        std::to_string(a + 1) + ", " + std::to_string(b + 1) + ")");
            }
    }
    ObstacleRepresentation rep;
    rep.graph = graph;
    rep.embedding = emb;
    for (const auto& [u, w] : non_edges)
        rep.obstacles.push_back(PointObstacle{midpoint(emb.points[u], emb.points[w])});
    return rep;
}

/// Per-obstacle visibility graphs E_1, ..., E_h of a valid representation;
/// their common intersection is the represented graph.
inline std::vector<Graph> per_obstacle_decomposition(const ObstacleRepresentation& rep) {
    if (rep.obstacles.empty())
        throw PreconditionError("decomposition needs at least one obstacle");
    if (!verify(rep).valid)
        throw PreconditionError("decomposition requires a valid representation");
    std::shared_ptr<const Arrangement> arr = rep.arrangement;
    bool needs_arr = false;
    for (const Obstacle& o : rep.obstacles)
        if (std::holds_alternative<FaceObstacle>(o)) needs_arr = true;
    if (needs_arr && !arr)
        arr = std::make_shared<const Arrangement>(planarize(rep.graph, rep.embedding));
    std::vector<Graph> parts;
    for (const Obstacle& o : rep.obstacles) {
        const std::vector<Obstacle> single{o};
        parts.push_back(visibility_graph(rep.embedding, single, arr.get()));
    }
    return parts;
}

inline Graph intersect_graphs(const std::vector<Graph>& graphs) {
    if (graphs.empty()) throw PreconditionError("empty graph intersection");
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, w] : graphs.front().edges) {
        bool in_all = true;
        for (const Graph& g : graphs)
            if (!g.has_edge(u, w)) {
                in_all = false;
                break;
            }
        if (in_all) edges.emplace_back(u, w);
    }
    return Graph(graphs.front().n, std::move(edges));
}

struct CanonicalizeReport {
    ObstacleRepresentation rep;
    std::vector<std::vector<int>> faces_per_obstacle; // parallel to the input obstacles
    bool expanded = false;                            // some obstacle met several faces
};

namespace detail {

/// Faces whose interior the open polygon meets: faces whose witness sits
/// inside the polygon (faces swallowed whole), plus the faces found just
/// inside the polygon boundary wherever it passes through them.
inline std::vector<int> faces_met_by_polygon(const Arrangement& arr,
                                             const std::vector<Point>& poly) {
    std::vector<int> out;
    for (std::size_t f = 0; f < arr.faces.size(); ++f)
        if (polygon_side(poly, arr.faces[f].witness) == PolygonSide::inside)
            out.push_back(static_cast<int>(f));

    const std::size_t k = poly.size();
    for (std::size_t i = 0; i < k; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % k];
        const Point d = b - a;
        const Rat dd = dot(d, d);
        std::vector<Rat> events{Rat(0), Rat(1)};
        for (const auto& arc : arr.arcs) {
            const Point& p = arr.nodes[arc.a];
            const Point& q = arr.nodes[arc.b];
            const Point e = q - p;
            const Rat den = cross(d, e);
            if (den == 0) {
                if (cross(a, b, p) != 0) continue;
                for (const Point* v : {&p, &q}) {
                    const Rat t = dot(*v - a, d) / dd;
                    if (t > 0 && t < 1) events.push_back(t);
                }
                continue;
            }
            const Rat t = cross(p - a, e) / den;
            const Rat s = cross(p - a, d) / den;
            if (t > 0 && t < 1 && s >= 0 && s <= 1) events.push_back(t);
        }
        for (std::size_t v = 0; v < arr.nodes.size(); ++v) {
            if (cross(a, b, arr.nodes[v]) != 0) continue;
            const Rat t = dot(arr.nodes[v] - a, d) / dd;
            if (t > 0 && t < 1) events.push_back(t);
        }
        std::sort(events.begin(), events.end());
        events.erase(std::unique(events.begin(), events.end()), events.end());
        for (std::size_t ev = 0; ev + 1 < events.size(); ++ev) {
            const Rat tm = (events[ev] + events[ev + 1]) / 2;
            const Point m = a + tm * d;
            // Push m off the boundary to the interior side (the polygon is
            // CCW, so the interior lies to the left), by less than the
            // distance to every arrangement feature and polygon edge.
            Rat min_d2 = sq_dist(m, a);
            auto consider = [&](const Rat& d2) {
                if (d2 > 0 && d2 < min_d2) min_d2 = d2;
            };
            for (const auto& arc : arr.arcs)
                consider(sq_dist_segment(m, arr.nodes[arc.a], arr.nodes[arc.b]));
            for (const Point& node : arr.nodes) consider(sq_dist(m, node));
            for (std::size_t j = 0; j < k; ++j) {
                if (j == i) continue;
                consider(sq_dist_segment(m, poly[j], poly[(j + 1) % k]));
            }
            const Rat radius = (min_d2 < 1 ? min_d2 : Rat(1)) / 2;
            const Point perp{-d.y, d.x};
            const Rat l1 = abs(perp.x) + abs(perp.y);
            const Point probe = m + (radius / l1) * perp;
            if (polygon_side(poly, probe) != PolygonSide::inside) continue;
            const int f = arr.locate(probe);
            if (f >= 0) out.push_back(f);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace detail

/// Replaces every obstacle of a valid representation by the arrangement
/// face(s) whose interiors it meets. Validity is preserved: faces only ever
/// extend blocking over non-edges and never touch edges.
inline CanonicalizeReport canonicalize_representation(const ObstacleRepresentation& rep,
                                                      std::shared_ptr<const Arrangement> arr) {
    if (!arr) throw PreconditionError("canonicalization needs the arrangement");
    if (!verify(rep).valid)
        throw PreconditionError("canonicalization requires a valid representation");
    CanonicalizeReport out;
    out.rep.graph = rep.graph;
    out.rep.embedding = rep.embedding;
    out.rep.arrangement = arr;
    for (std::size_t i = 0; i < rep.obstacles.size(); ++i) {
        std::vector<int> faces;
        if (const auto* pt = std::get_if<PointObstacle>(&rep.obstacles[i])) {
            const int f = arr->locate(pt->at);
            if (f < 0)
                throw PreconditionError("obstacle " + std::to_string(i + 1) +
                                        " meets no face interior (it lies on the drawing)");
            faces.push_back(f);
        } else if (const auto* poly = std::get_if<PolygonObstacle>(&rep.obstacles[i])) {
            faces = detail::faces_met_by_polygon(*arr, poly->vertices);
            if (faces.empty())
                throw PreconditionError("obstacle " + std::to_string(i + 1) +
                                        " meets no face interior");
        } else {
            faces.push_back(std::get<FaceObstacle>(rep.obstacles[i]).face);
        }
        if (faces.size() > 1) out.expanded = true;
        for (int f : faces) out.rep.obstacles.push_back(FaceObstacle{f});
        out.faces_per_obstacle.push_back(std::move(faces));
    }
    return out;
}

} // namespace obst
