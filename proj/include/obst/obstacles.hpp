#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "obst/graph.hpp"
#include "obst/predicates.hpp"

namespace obst {

struct Arrangement; // arrangement.hpp

/// A single blocking point. Blocks a segment only by lying strictly inside
/// it.
struct PointObstacle {
    Point at;
};

/// An open simple polygon: the obstacle is the interior, boundary contact
/// does not block. Vertices are kept counter-clockwise.
struct PolygonObstacle {
    std::vector<Point> vertices;
};

/// The open interior of an arrangement face, by canonical face id.
struct FaceObstacle {
    int face = -1;
};

using Obstacle = std::variant<PointObstacle, PolygonObstacle, FaceObstacle>;

enum class PolygonSide { outside, boundary, inside };

/// Exact point-vs-polygon classification (winding number; the polygon is
/// simple).
inline PolygonSide polygon_side(const std::vector<Point>& poly, const Point& p) {
    const std::size_t k = poly.size();
    int winding = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % k];
        if (on_segment(p, a, b)) return PolygonSide::boundary;
        if (a.y <= p.y) {
            if (b.y > p.y && orientation(a, b, p) == TriState::plus) ++winding;
        } else {
            if (b.y <= p.y && orientation(a, b, p) == TriState::minus) --winding;
        }
    }
    return winding != 0 ? PolygonSide::inside : PolygonSide::outside;
}

inline Rat polygon_area2(const std::vector<Point>& poly) {
    Rat a = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) a += cross(poly[i], poly[(i + 1) % poly.size()]);
    return a;
}

/// Validates simplicity exactly and normalizes the orientation to CCW.
/// Adjacent edges may be collinear only when they continue forwards; a
/// doubled-back spike is a self-overlap and is rejected.
inline PolygonObstacle make_polygon(std::vector<Point> vertices) {
    const std::size_t k = vertices.size();
    if (k < 3) throw SchemaError("polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < k; ++i)
        if (vertices[i] == vertices[(i + 1) % k])
            throw SchemaError("polygon has a zero-length edge at vertex " + std::to_string(i + 1));
    for (std::size_t i = 0; i < k; ++i) {
        const Point& a = vertices[i];
        const Point& b = vertices[(i + 1) % k];
        // Turn at vertex b: collinear is fine, reversal is not.
        const Point& c = vertices[(i + 2) % k];
        if (cross(a, b, c) == 0 && dot(b - a, c - b) < 0)
            throw SchemaError("polygon doubles back at vertex " +
                              std::to_string((i + 1) % k + 1));
        for (std::size_t j = i + 1; j < k; ++j) {
            if (j == i || (j + 1) % k == i || (i + 1) % k == j) continue; // adjacent
            const Point& p = vertices[j];
            const Point& q = vertices[(j + 1) % k];
            // Non-adjacent closed edges must be disjoint.
            const Rat den = cross(b - a, q - p);
            bool hit;
            if (den == 0) {
                hit = cross(a, b, p) == 0 &&
                      (on_segment(p, a, b) || on_segment(q, a, b) || on_segment(a, p, q));
            } else {
                const Rat t = cross(p - a, q - p) / den;
                const Rat s = cross(p - a, b - a) / den;
                hit = t >= 0 && t <= 1 && s >= 0 && s <= 1;
            }
            if (hit)
                throw SchemaError("polygon self-intersects between edges " + std::to_string(i + 1) +
                                  " and " + std::to_string(j + 1));
        }
    }
    const Rat area2 = polygon_area2(vertices);
    if (area2 == 0) throw SchemaError("polygon has zero area");
    if (area2 < 0) std::reverse(vertices.begin(), vertices.end());
    return PolygonObstacle{std::move(vertices)};
}

/// One-to-one vertex placement phi: vertex i sits at points[i].
struct Embedding {
    int n = 0;
    PointSequence points;

    Embedding() = default;
    Embedding(int vertex_count, PointSequence p) : n(vertex_count), points(std::move(p)) {
        if (static_cast<int>(points.size()) != n)
            throw SchemaError("embedding has " + std::to_string(points.size()) + " points for " +
                              std::to_string(n) + " vertices");
        require_distinct(points);
    }
};

/// A graph, a placement and an obstacle set. Whether the pair (placement,
/// obstacles) actually represents the graph is decided by verify(). Face
/// obstacles refer into `arrangement`, which must then be present.
struct ObstacleRepresentation {
    Graph graph;
    Embedding embedding;
    std::vector<Obstacle> obstacles;
    std::shared_ptr<const Arrangement> arrangement;
};

} // namespace obst
