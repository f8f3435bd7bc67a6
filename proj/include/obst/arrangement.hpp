#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "obst/obstacles.hpp"
#include "obst/super_order.hpp"

namespace obst {

/// Planarization of an embedded graph's edges: a node at every vertex and
/// every pairwise edge crossing, arcs between consecutive nodes along each
/// edge, and the faces of the resulting plane drawing. Face 0 is the
/// unbounded face; bounded faces carry canonical ids derived from their
/// boundary coordinates.
struct Arrangement {
    Graph graph;
    Embedding embedding;

    std::vector<Point> nodes; // 0..n-1 are the original vertices
    struct Arc {
        int a = -1, b = -1; // node ids
        int edge = -1;      // index into graph.edges
    };
    std::vector<Arc> arcs;

    /// Half-edge h: arc h/2 directed a->b when h is even, b->a when odd.
    int half_edge_count() const { return static_cast<int>(arcs.size()) * 2; }
    int he_src(int h) const { return h % 2 == 0 ? arcs[h / 2].a : arcs[h / 2].b; }
    int he_dst(int h) const { return h % 2 == 0 ? arcs[h / 2].b : arcs[h / 2].a; }
    static int he_twin(int h) { return h ^ 1; }

    /// One closed boundary walk (an orbit of the face-tracing successor).
    /// The adjacent face lies to the left of every half-edge of the walk.
    struct Walk {
        std::vector<int> half_edges;
        Rat area2;     // twice the signed area of the closed node polyline
        int face = -1; // assigned face id
    };
    std::vector<Walk> walks;

    struct Face {
        bool bounded = false;
        std::vector<int> walks;          // bounded: walks[0] is the positive boundary walk
        Point witness;                   // exact point strictly inside
        std::vector<int> boundary_nodes; // sorted, unique
    };
    std::vector<Face> faces;

    int component_count = 0;
    int crossing_count = 0;

    bool on_drawing(const Point& p) const {
        for (const Arc& arc : arcs)
            if (on_segment(p, nodes[arc.a], nodes[arc.b])) return true;
        for (const Point& q : nodes)
            if (q == p) return true;
        return false;
    }

    /// Winding number of a walk around p; p must not lie on the walk.
    int winding(const Walk& walk, const Point& p) const {
        int wn = 0;
        for (int h : walk.half_edges) {
            const Point& a = nodes[he_src(h)];
            const Point& b = nodes[he_dst(h)];
            if (a.y <= p.y) {
                if (b.y > p.y && orientation(a, b, p) == TriState::plus) ++wn;
            } else {
                if (b.y <= p.y && orientation(a, b, p) == TriState::minus) --wn;
            }
        }
        return wn;
    }

    /// Face containing p, or -1 when p lies on an arc or node. The innermost
    /// positive walk enclosing p identifies the face; walk regions are
    /// laminar, so the one of smallest area wins.
    int locate(const Point& p) const {
        if (on_drawing(p)) return -1;
        int best_walk = -1;
        for (std::size_t w = 0; w < walks.size(); ++w) {
            if (walks[w].area2 <= 0) continue;
            if (winding(walks[w], p) == 0) continue;
            if (best_walk < 0 || walks[w].area2 < walks[best_walk].area2)
                best_walk = static_cast<int>(w);
        }
        return best_walk < 0 ? 0 : walks[best_walk].face;
    }

    /// Ordered faces met by the open segment (a, b), consecutive duplicates
    /// merged. Sub-segments lying on the drawing contribute nothing.
    std::vector<int> segment_faces(const Point& a, const Point& b) const {
        std::vector<Rat> events = segment_events(a, b);
        std::vector<int> seq;
        for (std::size_t i = 0; i + 1 < events.size(); ++i) {
            const Rat tm = (events[i] + events[i + 1]) / 2;
            const Point m = a + tm * (b - a);
            const int f = locate(m);
            if (f < 0) continue; // midpoint on the drawing: segment runs along an arc
            if (seq.empty() || seq.back() != f) seq.push_back(f);
        }
        return seq;
    }

    /// Faces traversed by the open segment of the non-edge {u, w}.
    std::vector<int> non_edge_face_sequence(int u, int w) const {
        if (u < 0 || w < 0 || u >= graph.n || w >= graph.n || u == w)
            throw PreconditionError("invalid vertex pair");
        if (graph.has_edge(u, w))
            throw PreconditionError("pair (" + std::to_string(u + 1) + ", " +
                                    std::to_string(w + 1) + ") is an edge, not a non-edge");
        return segment_faces(embedding.points[u], embedding.points[w]);
    }

    /// Vertex node ids on the boundary of face f (crossing nodes excluded).
    std::vector<int> face_vertices(int f) const {
        std::vector<int> out;
        for (int node : faces[f].boundary_nodes)
            if (node < graph.n) out.push_back(node);
        return out;
    }

    /// Node coordinates of the positive boundary walk of a bounded face.
    std::vector<Point> face_polygon(int f) const {
        if (f <= 0 || f >= static_cast<int>(faces.size()))
            throw PreconditionError("face_polygon needs a bounded face id");
        std::vector<Point> poly;
        for (int h : walks[faces[f].walks.front()].half_edges) poly.push_back(nodes[he_src(h)]);
        return poly;
    }

  private:
    /// Sorted parameters 0 = t_0 < ... < t_m = 1 splitting [a, b] at every
    /// transversal arc crossing. Touches at t = 0 or 1 (arcs meeting an
    /// endpoint) are not events; anything non-transversal signals a
    /// non-simple configuration and cannot happen under the construction
    /// precondition.
    std::vector<Rat> segment_events(const Point& a, const Point& b) const {
        std::vector<Rat> events{Rat(0), Rat(1)};
        const Point d = b - a;
        for (const Arc& arc : arcs) {
            const Point& p = nodes[arc.a];
            const Point& q = nodes[arc.b];
            const Point e = q - p;
            const Rat den = cross(d, e);
            if (den == 0) continue; // parallel carriers never cross transversally
            const Rat t = cross(p - a, e) / den;
            const Rat s = cross(p - a, d) / den;
            if (t <= 0 || t >= 1) continue;
            if (s < 0 || s > 1) continue;
            if (s == 0 || s == 1)
                throw PreconditionError("segment passes through an arrangement node");
            events.push_back(t);
        }
        std::sort(events.begin(), events.end());
        events.erase(std::unique(events.begin(), events.end()), events.end());
        return events;
    }

    friend Arrangement planarize_assume_simple(const Graph&, const Embedding&);
};

namespace detail {

/// CCW-before comparison of direction vectors, starting at the positive
/// x-axis.
inline bool ccw_less(const Point& d1, const Point& d2) {
    auto half = [](const Point& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; };
    const int h1 = half(d1), h2 = half(d2);
    if (h1 != h2) return h1 < h2;
    return cross(d1, d2) > 0;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace detail

/// Perpendicular-offset witness strictly inside the face to the left of
/// half-edge h: the midpoint of the arc, pushed left by less than the
/// distance to every other feature of the drawing.
inline Point left_side_witness(const Arrangement& arr, int h) {
    const Point& a = arr.nodes[arr.he_src(h)];
    const Point& b = arr.nodes[arr.he_dst(h)];
    const Point m = midpoint(a, b);
    // The arc's own endpoints are nodes, so some feature is always there.
    Rat min_d2 = sq_dist(m, a);
    auto consider = [&](const Rat& d2) {
        if (d2 < min_d2) min_d2 = d2;
    };
    for (std::size_t ai = 0; ai < arr.arcs.size(); ++ai) {
        if (static_cast<int>(ai) == h / 2) continue;
        consider(sq_dist_segment(m, arr.nodes[arr.arcs[ai].a], arr.nodes[arr.arcs[ai].b]));
    }
    for (const Point& node : arr.nodes) consider(sq_dist(m, node));
    if (min_d2 <= 0) throw std::logic_error("arrangement feature touches an arc midpoint");
    // min(d2, 1)/2 < sqrt(d2): a safe exact radius.
    const Rat radius = (min_d2 < 1 ? min_d2 : Rat(1)) / 2;
    const Point dir = b - a;
    const Point perp{-dir.y, dir.x}; // left of the direction
    const Rat l1 = abs(perp.x) + abs(perp.y);
    return m + (radius / l1) * perp;
}

/// Builds the arrangement without re-checking simplicity. Callers must have
/// established it; planarize() is the checked entry point.
inline Arrangement planarize_assume_simple(const Graph& graph, const Embedding& embedding) {
    if (graph.n != embedding.n) throw PreconditionError("graph and embedding sizes differ");
    Arrangement arr;
    arr.graph = graph;
    arr.embedding = embedding;
    arr.nodes = embedding.points;

    const int m = static_cast<int>(graph.edges.size());
    // Transversal crossings; simplicity rules out every other incidence.
    std::vector<std::vector<std::pair<Rat, int>>> cuts(m); // per edge: (parameter, node)
    for (int e1 = 0; e1 < m; ++e1) {
        const Point& p = embedding.points[graph.edges[e1].first];
        const Point& q = embedding.points[graph.edges[e1].second];
        for (int e2 = e1 + 1; e2 < m; ++e2) {
            const Point& r = embedding.points[graph.edges[e2].first];
            const Point& s = embedding.points[graph.edges[e2].second];
            const Rat den = cross(q - p, s - r);
            if (den == 0) {
                if (cross(p, q, r) == 0 &&
                    (on_segment(r, p, q) || on_segment(s, p, q) || on_segment(p, r, s)))
                    throw PreconditionError("overlapping collinear edges in the drawing");
                continue;
            }
            const Rat t = cross(r - p, s - r) / den;
            const Rat u = cross(r - p, q - p) / den;
            if (t < 0 || t > 1 || u < 0 || u > 1) continue;
            const bool t_interior = t > 0 && t < 1;
            const bool u_interior = u > 0 && u < 1;
            if (t_interior && u_interior) {
                const int node = static_cast<int>(arr.nodes.size());
                arr.nodes.push_back(p + t * (q - p));
                cuts[e1].emplace_back(t, node);
                cuts[e2].emplace_back(u, node);
                ++arr.crossing_count;
            } else if (t_interior != u_interior) {
                throw PreconditionError("edge endpoint lies in another edge's interior");
            }
            // Shared endpoints (both parameters at 0 or 1) are not crossings.
        }
    }

    for (int e = 0; e < m; ++e) {
        std::sort(cuts[e].begin(), cuts[e].end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        int prev = graph.edges[e].first;
        for (const auto& [t, node] : cuts[e]) {
            arr.arcs.push_back({prev, node, e});
            prev = node;
        }
        arr.arcs.push_back({prev, graph.edges[e].second, e});
    }

    // Rotation system: CCW order of outgoing half-edges at every node.
    const int node_count = static_cast<int>(arr.nodes.size());
    std::vector<std::vector<int>> outgoing(node_count);
    for (int h = 0; h < arr.half_edge_count(); ++h) outgoing[arr.he_src(h)].push_back(h);
    std::vector<int> position(arr.half_edge_count(), -1);
    for (int v = 0; v < node_count; ++v) {
        auto& list = outgoing[v];
        std::sort(list.begin(), list.end(), [&](int h1, int h2) {
            const Point d1 = arr.nodes[arr.he_dst(h1)] - arr.nodes[v];
            const Point d2 = arr.nodes[arr.he_dst(h2)] - arr.nodes[v];
            return detail::ccw_less(d1, d2);
        });
        for (std::size_t i = 0; i + 1 < list.size(); ++i) {
            const Point d1 = arr.nodes[arr.he_dst(list[i])] - arr.nodes[v];
            const Point d2 = arr.nodes[arr.he_dst(list[i + 1])] - arr.nodes[v];
            if (cross(d1, d2) == 0 && detail::ccw_less(d1, d2) == false &&
                detail::ccw_less(d2, d1) == false)
                throw PreconditionError("two arcs leave a node in the same direction");
        }
        for (std::size_t i = 0; i < list.size(); ++i) position[list[i]] = static_cast<int>(i);
    }

    // Face tracing: continue from h with the clockwise successor of its twin
    // around the head node; the adjacent face stays on the left.
    auto next_he = [&](int h) {
        const int v = arr.he_dst(h);
        const auto& list = outgoing[v];
        const int pos = position[Arrangement::he_twin(h)];
        return list[(pos + list.size() - 1) % list.size()];
    };
    std::vector<int> walk_of(arr.half_edge_count(), -1);
    for (int h0 = 0; h0 < arr.half_edge_count(); ++h0) {
        if (walk_of[h0] >= 0) continue;
        Arrangement::Walk walk;
        int h = h0;
        do {
            walk_of[h] = static_cast<int>(arr.walks.size());
            walk.half_edges.push_back(h);
            h = next_he(h);
        } while (h != h0);
        walk.area2 = 0;
        for (int he : walk.half_edges)
            walk.area2 += cross(arr.nodes[arr.he_src(he)], arr.nodes[arr.he_dst(he)]);
        arr.walks.push_back(std::move(walk));
    }

    // Euler check per connected component: V - E + F = 2, faces counted as
    // walk orbits of the component.
    detail::UnionFind uf(node_count);
    for (const auto& arc : arr.arcs) uf.unite(arc.a, arc.b);
    std::map<int, std::array<long long, 3>> comp; // root -> (nodes, arcs, walks)
    for (int v = 0; v < node_count; ++v) comp[uf.find(v)][0]++;
    for (const auto& arc : arr.arcs) comp[uf.find(arc.a)][1]++;
    for (const auto& walk : arr.walks)
        comp[uf.find(arr.he_src(walk.half_edges.front()))][2]++;
    arr.component_count = static_cast<int>(comp.size());
    for (const auto& [root, counts] : comp) {
        if (counts[1] == 0) continue; // isolated node
        if (counts[0] - counts[1] + counts[2] != 2)
            throw std::logic_error("planarization violates the Euler relation");
    }

    // Assemble faces: every positive walk bounds one bounded face; every
    // other walk is the outward boundary of a component and belongs to the
    // face that contains it.
    struct ProtoFace {
        std::vector<int> walk_ids;
        Point witness;
    };
    std::vector<ProtoFace> bounded;
    std::vector<int> proto_of_walk(arr.walks.size(), -1);
    for (std::size_t w = 0; w < arr.walks.size(); ++w) {
        if (arr.walks[w].area2 > 0) {
            proto_of_walk[w] = static_cast<int>(bounded.size());
            bounded.push_back(
                {{static_cast<int>(w)}, left_side_witness(arr, arr.walks[w].half_edges.front())});
        }
    }
    auto innermost_positive_walk = [&](const Point& p) {
        int best = -1;
        for (std::size_t w = 0; w < arr.walks.size(); ++w) {
            if (arr.walks[w].area2 <= 0) continue;
            if (arr.winding(arr.walks[w], p) == 0) continue;
            if (best < 0 || arr.walks[w].area2 < arr.walks[best].area2)
                best = static_cast<int>(w);
        }
        return best;
    };
    std::vector<int> outer_walks;
    for (std::size_t w = 0; w < arr.walks.size(); ++w) {
        if (arr.walks[w].area2 > 0) continue;
        const Point witness = left_side_witness(arr, arr.walks[w].half_edges.front());
        const int host = innermost_positive_walk(witness);
        if (host < 0)
            outer_walks.push_back(static_cast<int>(w));
        else
            bounded[proto_of_walk[host]].walk_ids.push_back(static_cast<int>(w));
    }

    auto boundary_nodes_of = [&](const std::vector<int>& walk_ids) {
        std::vector<int> nodes_on;
        for (int w : walk_ids)
            for (int h : arr.walks[w].half_edges) nodes_on.push_back(arr.he_src(h));
        std::sort(nodes_on.begin(), nodes_on.end());
        nodes_on.erase(std::unique(nodes_on.begin(), nodes_on.end()), nodes_on.end());
        return nodes_on;
    };

    // Canonical bounded-face order: lexicographically smallest boundary
    // coordinate, then total boundary length, then the full coordinate list.
    struct Key {
        std::vector<std::pair<Rat, Rat>> coords;
        std::size_t length;
    };
    std::vector<Key> keys(bounded.size());
    std::vector<std::vector<int>> bnodes(bounded.size());
    for (std::size_t i = 0; i < bounded.size(); ++i) {
        bnodes[i] = boundary_nodes_of(bounded[i].walk_ids);
        std::size_t len = 0;
        for (int w : bounded[i].walk_ids) len += arr.walks[w].half_edges.size();
        keys[i].length = len;
        for (int v : bnodes[i]) keys[i].coords.emplace_back(arr.nodes[v].x, arr.nodes[v].y);
        std::sort(keys[i].coords.begin(), keys[i].coords.end());
    }
    std::vector<int> order(bounded.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        if (keys[i].coords.front() != keys[j].coords.front())
            return keys[i].coords.front() < keys[j].coords.front();
        if (keys[i].length != keys[j].length) return keys[i].length < keys[j].length;
        return keys[i].coords < keys[j].coords;
    });

    Rat max_coord = 0;
    for (const Point& p : arr.nodes) {
        if (p.x > max_coord) max_coord = p.x;
        if (p.y > max_coord) max_coord = p.y;
    }
    Arrangement::Face outer;
    outer.bounded = false;
    outer.walks = outer_walks;
    outer.witness = Point{max_coord + 1, max_coord + 1};
    outer.boundary_nodes = boundary_nodes_of(outer_walks);
    arr.faces.push_back(std::move(outer));
    for (int idx : order) {
        Arrangement::Face f;
        f.bounded = true;
        f.walks = bounded[idx].walk_ids;
        f.witness = bounded[idx].witness;
        f.boundary_nodes = bnodes[idx];
        arr.faces.push_back(std::move(f));
    }
    for (std::size_t f = 0; f < arr.faces.size(); ++f)
        for (int w : arr.faces[f].walks) arr.walks[w].face = static_cast<int>(f);

    return arr;
}

/// Checked construction: requires a simple point sequence (which rules out
/// collinear triples, concurrent edge carriers and vertical degeneracies).
inline Arrangement planarize(const Graph& graph, const Embedding& embedding) {
    if (!is_simple(embedding.points))
        throw PreconditionError(
            "embedding is not simple; perturb it into simple position first");
    return planarize_assume_simple(graph, embedding);
}

/// Which faces meet which non-edges: row e covers face f when f appears in
/// the face sequence of non-edge e. Every row of a simple instance is
/// non-empty (each non-edge starts inside some face).
struct CoverageMatrix {
    std::vector<std::pair<int, int>> rows; // non-edges, lexicographic
    int face_count = 0;
    std::vector<std::vector<int>> row_faces;          // per row: sorted face ids
    std::vector<boost::dynamic_bitset<>> face_covers; // per face: bitset over rows
};

inline CoverageMatrix coverage_matrix(const Arrangement& arr) {
    CoverageMatrix cm;
    cm.rows = arr.graph.non_edges();
    cm.face_count = static_cast<int>(arr.faces.size());
    cm.face_covers.assign(cm.face_count, boost::dynamic_bitset<>(cm.rows.size()));
    cm.row_faces.resize(cm.rows.size());
    for (std::size_t r = 0; r < cm.rows.size(); ++r) {
        std::vector<int> seq = arr.non_edge_face_sequence(cm.rows[r].first, cm.rows[r].second);
        std::sort(seq.begin(), seq.end());
        seq.erase(std::unique(seq.begin(), seq.end()), seq.end());
        cm.row_faces[r] = seq;
        for (int f : seq) cm.face_covers[f].set(r);
        if (seq.empty()) throw std::logic_error("non-edge meets no face interior");
    }
    return cm;
}

} // namespace obst
