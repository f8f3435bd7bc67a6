#pragma once

#include <cstdio>
#include <string>

#include "obst/arrangement.hpp"
#include "obst/obstacles.hpp"

namespace obst {

namespace detail {

inline double approx(const Rat& v) {
    return numerator(v).convert_to<double>() / denominator(v).convert_to<double>();
}

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

} // namespace detail

/// Presentation-only SVG 1.1 rendering of a representation: edges solid,
/// non-edges dashed, obstacles shaded. Coordinates are rounded; the JSON
/// report stays the source of truth.
inline std::string render_svg(const ObstacleRepresentation& rep) {
    const Embedding& emb = rep.embedding;
    double min_x = 0, min_y = 0, max_x = 1, max_y = 1;
    bool first = true;
    auto grow = [&](const Point& p) {
        const double x = detail::approx(p.x);
        const double y = detail::approx(p.y);
        if (first) {
            min_x = max_x = x;
            min_y = max_y = y;
            first = false;
        } else {
            min_x = std::min(min_x, x);
            max_x = std::max(max_x, x);
            min_y = std::min(min_y, y);
            max_y = std::max(max_y, y);
        }
    };
    for (const Point& p : emb.points) grow(p);
    for (const Obstacle& o : rep.obstacles) {
        if (const auto* pt = std::get_if<PointObstacle>(&o)) grow(pt->at);
        if (const auto* poly = std::get_if<PolygonObstacle>(&o))
            for (const Point& v : poly->vertices) grow(v);
    }
    const double span = std::max({max_x - min_x, max_y - min_y, 1.0});
    const double margin = span * 0.08;
    const double scale = 640.0 / (span + 2 * margin);
    auto tx = [&](const Point& p) { return (detail::approx(p.x) - min_x + margin) * scale; };
    auto ty = [&](const Point& p) { // SVG y grows downward
        return (max_y - detail::approx(p.y) + margin) * scale;
    };
    const double height = (max_y - min_y + 2 * margin) * scale;
    const double width = (max_x - min_x + 2 * margin) * scale;

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           detail::fmt(width) + "\" height=\"" + detail::fmt(height) + "\">\n";

    for (const Obstacle& o : rep.obstacles) {
        if (const auto* face = std::get_if<FaceObstacle>(&o)) {
            if (!rep.arrangement || face->face <= 0) continue;
            svg += "  <path fill=\"#f4c74233\" stroke=\"#f4c742\" d=\"";
            const auto poly = rep.arrangement->face_polygon(face->face);
            for (std::size_t i = 0; i < poly.size(); ++i)
                svg += (i == 0 ? "M " : "L ") + detail::fmt(tx(poly[i])) + " " +
                       detail::fmt(ty(poly[i])) + " ";
            svg += "Z\"/>\n";
        } else if (const auto* poly = std::get_if<PolygonObstacle>(&o)) {
            svg += "  <path fill=\"#f4c74233\" stroke=\"#f4c742\" d=\"";
            for (std::size_t i = 0; i < poly->vertices.size(); ++i)
                svg += (i == 0 ? "M " : "L ") + detail::fmt(tx(poly->vertices[i])) + " " +
                       detail::fmt(ty(poly->vertices[i])) + " ";
            svg += "Z\"/>\n";
        }
    }

    for (int u = 0; u < rep.graph.n; ++u)
        for (int w = u + 1; w < rep.graph.n; ++w) {
            if (rep.graph.has_edge(u, w)) continue;
            svg += "  <line stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\" x1=\"" +
                   detail::fmt(tx(emb.points[u])) + "\" y1=\"" + detail::fmt(ty(emb.points[u])) +
                   "\" x2=\"" + detail::fmt(tx(emb.points[w])) + "\" y2=\"" +
                   detail::fmt(ty(emb.points[w])) + "\"/>\n";
        }
    for (const auto& [u, w] : rep.graph.edges)
        svg += "  <line stroke=\"#222222\" stroke-width=\"1.5\" x1=\"" +
               detail::fmt(tx(emb.points[u])) + "\" y1=\"" + detail::fmt(ty(emb.points[u])) +
               "\" x2=\"" + detail::fmt(tx(emb.points[w])) + "\" y2=\"" +
               detail::fmt(ty(emb.points[w])) + "\"/>\n";

    for (const Obstacle& o : rep.obstacles)
        if (const auto* pt = std::get_if<PointObstacle>(&o))
            svg += "  <circle fill=\"#d62728\" r=\"3\" cx=\"" + detail::fmt(tx(pt->at)) +
                   "\" cy=\"" + detail::fmt(ty(pt->at)) + "\"/>\n";

    for (int v = 0; v < rep.graph.n; ++v) {
        svg += "  <circle fill=\"#1f77b4\" r=\"4\" cx=\"" + detail::fmt(tx(emb.points[v])) +
               "\" cy=\"" + detail::fmt(ty(emb.points[v])) + "\"/>\n";
        svg += "  <text font-size=\"11\" x=\"" + detail::fmt(tx(emb.points[v]) + 6) + "\" y=\"" +
               detail::fmt(ty(emb.points[v]) - 6) + "\">" + std::to_string(v + 1) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace obst
