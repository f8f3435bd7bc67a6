#pragma once

#include <array>
#include <optional>
#include <variant>

#include "obst/point.hpp"

namespace obst {

enum class TriState : int { minus = -1, zero = 0, plus = 1 };

constexpr int to_int(TriState t) { return static_cast<int>(t); }

inline TriState tri_of_sign(int s) {
    return s < 0 ? TriState::minus : s > 0 ? TriState::plus : TriState::zero;
}

inline char tri_char(TriState t) {
    return t == TriState::minus ? '-' : t == TriState::plus ? '+' : '0';
}

/// Sign of (q-p) x (r-p): +1 counter-clockwise, 0 collinear, -1 clockwise.
inline TriState orientation(const Point& p, const Point& q, const Point& r) {
    return tri_of_sign(sign_of(cross(p, q, r)));
}

struct Parallel {};
struct Identical {};
using LineIntersection = std::variant<Point, Parallel, Identical>;

/// Intersection of the two carrier lines: the unique common point, Parallel
/// for distinct lines of equal slope, Identical for coinciding carriers.
inline LineIntersection line_intersection(const DirectedLine& l1, const DirectedLine& l2) {
    const Point d1 = l1.direction();
    const Point d2 = l2.direction();
    const Rat den = cross(d1, d2);
    if (den == 0) {
        if (cross(l1.p1, l1.p2, l2.p1) == 0) return Identical{};
        return Parallel{};
    }
    const Rat t = cross(l2.p1 - l1.p1, d2) / den;
    return l1.p1 + t * d1;
}

/// Parameter of the intersection of `line` with `other`, measured along
/// `line`'s parameterization p1 + t * (p2 - p1). Empty when parallel.
inline std::optional<Rat> intersection_parameter(const DirectedLine& line,
                                                 const DirectedLine& other) {
    const Point d1 = line.direction();
    const Point d2 = other.direction();
    const Rat den = cross(d1, d2);
    if (den == 0) return std::nullopt;
    return cross(other.p1 - line.p1, d2) / den;
}

inline bool on_line(const DirectedLine& line, const Point& p) {
    return cross(line.p1, line.p2, p) == 0;
}

/// Six points naming three directed lines A = a1->a2, B = b1->b2, C = c1->c2.
struct Sextuple {
    Point a1, a2, b1, b2, c1, c2;
};

namespace detail {

inline bool same_pair(const Point& p, const Point& q, const Point& r, const Point& s) {
    return (p == r && q == s) || (p == s && q == r);
}

inline bool in_pair(const Point& p, const Point& r, const Point& s) {
    return p == r || p == s;
}

} // namespace detail

/// The three defining conditions: nondegenerate pairs, pairwise-distinct
/// pairs, and empty triple intersection of the pairs (pairwise intersections
/// are allowed).
inline bool is_admissible(const Sextuple& t) {
    if (t.a1 == t.a2 || t.b1 == t.b2 || t.c1 == t.c2) return false;
    if (detail::same_pair(t.a1, t.a2, t.b1, t.b2) || detail::same_pair(t.b1, t.b2, t.c1, t.c2) ||
        detail::same_pair(t.c1, t.c2, t.a1, t.a2))
        return false;
    for (const Point* p : {&t.a1, &t.a2})
        if (detail::in_pair(*p, t.b1, t.b2) && detail::in_pair(*p, t.c1, t.c2)) return false;
    return true;
}

inline void require_admissible(const Sextuple& t) {
    if (!is_admissible(t)) throw PreconditionError("sextuple is not admissible");
}

namespace detail {

inline bool lines_parallel(const DirectedLine& a, const DirectedLine& b) {
    return cross(a.direction(), b.direction()) == 0; // identical carriers count as parallel
}

/// Do A, B and C contain a common point?
inline bool lines_concurrent(const DirectedLine& a, const DirectedLine& b,
                             const DirectedLine& c) {
    const LineIntersection ab = line_intersection(a, b);
    if (const Point* p = std::get_if<Point>(&ab)) return on_line(c, *p);
    if (std::holds_alternative<Identical>(ab)) {
        // A and B share every point; any meeting with C is a common point.
        return !std::holds_alternative<Parallel>(line_intersection(a, c));
    }
    return false; // parallel and distinct: empty intersection
}

} // namespace detail

/// A sextuple is degenerate when one of the lines is vertical, A is parallel
/// to B or to C (B parallel to C alone does not count), or all three lines
/// pass through a common point.
inline bool is_degenerate(const Sextuple& t) {
    require_admissible(t);
    const DirectedLine a(t.a1, t.a2), b(t.b1, t.b2), c(t.c1, t.c2);
    if (a.vertical() || b.vertical() || c.vertical()) return true;
    if (detail::lines_parallel(a, b) || detail::lines_parallel(a, c)) return true;
    return detail::lines_concurrent(a, b, c);
}

/// -1 when A∩B precedes A∩C along A's direction, +1 when it follows,
/// 0 exactly for degenerate sextuples.
inline TriState sextuple_type(const Sextuple& t) {
    require_admissible(t);
    if (is_degenerate(t)) return TriState::zero;
    const DirectedLine a(t.a1, t.a2), b(t.b1, t.b2), c(t.c1, t.c2);
    const Rat tb = *intersection_parameter(a, b);
    const Rat tc = *intersection_parameter(a, c);
    // tb == tc would mean B and C meet A in the same point, i.e. concurrency.
    return tb < tc ? TriState::minus : TriState::plus;
}

/// x(a1-a2)*y(b1-b2) - x(b1-b2)*y(a1-a2): zero iff the carriers of (a1,a2)
/// and (b1,b2) have equal slope (identical lines and the doubly-vertical
/// case included).
inline Rat parallel_poly(const Point& a1, const Point& a2, const Point& b1, const Point& b2) {
    if (a1 == a2 || b1 == b2)
        throw PreconditionError("parallel_poly called with coincident defining points");
    return (a1.x - a2.x) * (b1.y - b2.y) - (b1.x - b2.x) * (a1.y - a2.y);
}

/// The slope/intercept determinant with rows cleared by the per-line
/// x-differences, multiplied by x(a1-a2)*x(b1-b2)*x(c1-c2). Vanishes when a
/// line is vertical (an x-difference factor) or the three carriers share a
/// point (the determinant). For non-vertical triples its sign equals the
/// sign of the plain slope/intercept determinant, since the clearing
/// contributes a squared factor.
inline Rat concurrency_poly(const Sextuple& t) {
    require_admissible(t);
    auto row = [](const Point& p, const Point& q) {
        return std::array<Rat, 3>{cross(p, q), p.y - q.y, p.x - q.x};
    };
    const auto ra = row(t.a1, t.a2);
    const auto rb = row(t.b1, t.b2);
    const auto rc = row(t.c1, t.c2);
    const Rat det = ra[0] * (rb[1] * rc[2] - rb[2] * rc[1]) -
                    ra[1] * (rb[0] * rc[2] - rb[2] * rc[0]) +
                    ra[2] * (rb[0] * rc[1] - rb[1] * rc[0]);
    return (t.a1.x - t.a2.x) * (t.b1.x - t.b2.x) * (t.c1.x - t.c2.x) * det;
}

/// Sign of the product of the three per-sextuple factors. Zero exactly when
/// the sextuple is degenerate.
inline TriState sextuple_factor_sign(const Sextuple& t) {
    const int s = sign_of(parallel_poly(t.a1, t.a2, t.b1, t.b2)) *
                  sign_of(parallel_poly(t.a1, t.a2, t.c1, t.c2)) *
                  sign_of(concurrency_poly(t));
    return tri_of_sign(s);
}

} // namespace obst
