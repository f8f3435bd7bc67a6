#pragma once

#include <string>
#include <vector>

#include "obst/rational.hpp"

namespace obst {

struct Point {
    Rat x, y;
    bool operator==(const Point&) const = default;
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Rat& s, const Point& p) { return {s * p.x, s * p.y}; }

inline std::string to_string(const Point& p) {
    return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

/// 2D cross product a.x*b.y - a.y*b.x.
inline Rat cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

/// Cross product of (a-o) and (b-o); positive iff o,a,b make a left turn.
inline Rat cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline Rat dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

inline Rat sq_dist(const Point& a, const Point& b) {
    const Rat dx = a.x - b.x;
    const Rat dy = a.y - b.y;
    return dx * dx + dy * dy;
}

inline Point midpoint(const Point& a, const Point& b) {
    return {(a.x + b.x) / 2, (a.y + b.y) / 2};
}

/// The image <x_1, ..., x_n> of a vertex placement, in vertex order.
using PointSequence = std::vector<Point>;

/// Throws naming the first offending index pair (1-based) when two points
/// coincide.
inline void require_distinct(const PointSequence& points) {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw PreconditionError("points " + std::to_string(i + 1) + " and " +
                                        std::to_string(j + 1) + " coincide at " +
                                        to_string(points[i]));
}

/// Line through p1 and p2, directed from p1 towards p2.
struct DirectedLine {
    Point p1, p2;

    DirectedLine(Point a, Point b) : p1(std::move(a)), p2(std::move(b)) {
        if (p1 == p2)
            throw PreconditionError("directed line through coincident points " + to_string(p1));
    }

    Point direction() const { return p2 - p1; }
    bool vertical() const { return p1.x == p2.x; }
};

/// Exact squared distance from p to the closed segment [a, b].
inline Rat sq_dist_segment(const Point& p, const Point& a, const Point& b) {
    if (a == b) return sq_dist(p, a);
    const Point d = b - a;
    Rat t = dot(p - a, d) / dot(d, d);
    if (t < 0) t = 0;
    if (t > 1) t = 1;
    return sq_dist(p, a + t * d);
}

/// True iff p lies on the closed segment [a, b].
inline bool on_segment(const Point& p, const Point& a, const Point& b) {
    if (cross(a, b, p) != 0) return false;
    return dot(p - a, b - a) >= 0 && dot(p - b, a - b) >= 0;
}

/// True iff p lies strictly inside the open segment (a, b).
inline bool strictly_inside_segment(const Point& p, const Point& a, const Point& b) {
    if (cross(a, b, p) != 0) return false;
    return dot(p - a, b - a) > 0 && dot(p - b, a - b) > 0;
}

} // namespace obst
