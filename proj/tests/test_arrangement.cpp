#include <catch2/catch_amalgamated.hpp>

#include "obst/arrangement.hpp"
#include "oracles.hpp"

using namespace obst;

namespace {

Point P(long long x, long long y) { return {Rat(x), Rat(y)}; }

} // namespace

TEST_CASE("triangle arrangement") {
    const Graph g(3, {{0, 1}, {1, 2}, {0, 2}});
    const Embedding emb(3, {P(0, 0), P(4, 0), P(1, 3)});
    const Arrangement arr = planarize(g, emb);
    CHECK(arr.nodes.size() == 3);
    CHECK(arr.arcs.size() == 3);
    CHECK(arr.faces.size() == 2);
    CHECK(arr.crossing_count == 0);
    CHECK_FALSE(arr.faces[0].bounded);
    CHECK(arr.faces[1].bounded);
    // The witness of the bounded face lies inside the triangle.
    CHECK(arr.locate(arr.faces[1].witness) == 1);
    CHECK(arr.locate(P(100, 100)) == 0);
    CHECK(arr.locate(P(1, 1)) == 1);
}

TEST_CASE("complete graph on four convex points has one crossing") {
    const Graph g = Graph::complete(4);
    const Embedding emb(4, {P(0, 5), P(1, 4), P(5, 9), P(3, 9)});
    const Arrangement arr = planarize(g, emb);
    CHECK(arr.crossing_count == 1);
    CHECK(arr.nodes.size() == 5);
    CHECK(arr.arcs.size() == 8);
    // Euler: 5 - 8 + F = 2 on one component.
    CHECK(arr.faces.size() == 5);
}

TEST_CASE("edgeless graphs have a single face") {
    const Graph g(4, {});
    const Embedding emb(4, {P(0, 0), P(5, 1), P(2, 7), P(9, 4)});
    const Arrangement arr = planarize(g, emb);
    CHECK(arr.faces.size() == 1);
    CHECK(arr.arcs.empty());
    CHECK(arr.nodes.size() == 4);
    CHECK(arr.locate(P(3, 3)) == 0);
}

TEST_CASE("non-simple embeddings are rejected with advice") {
    const Graph g(3, {{0, 1}});
    CHECK_THROWS_WITH(planarize(g, Embedding(3, {P(0, 0), P(2, 0), P(4, 0)})),
                      Catch::Matchers::ContainsSubstring("perturb"));
}

TEST_CASE("disconnected drawings: nested triangles") {
    // Two disjoint triangles, one inside the other: the annulus-like face
    // between them is the inner face of the big triangle carrying the small
    // triangle's outer walk as a hole.
    const Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    const Embedding emb(6, {P(0, 1), P(12, 0), P(1, 9), P(5, 2), P(7, 2), P(3, 6)});
    const Arrangement arr = planarize(g, emb);
    CHECK(arr.component_count == 2);
    CHECK(arr.faces.size() == 3);
    const int inner_small = arr.locate(midpoint(midpoint(P(5, 2), P(7, 2)), P(3, 6)));
    const int between = arr.locate(P(2, 2));
    const int outside = arr.locate(P(-5, -5));
    CHECK(outside == 0);
    CHECK(inner_small != between);
    CHECK(inner_small != 0);
    CHECK(between != 0);
    // The face between the triangles is bounded by both walks.
    CHECK(arr.faces[between].walks.size() == 2);
}

TEST_CASE("every off-drawing probe lands in exactly one face") {
    Rng rng(9301);
    const int n = 6;
    for (int trial = 0; trial < 8; ++trial) {
        const Graph g = random_graph(n, rng);
        PointSequence points = random_integer_points(n, 60, rng);
        if (!is_simple(points)) continue;
        const Arrangement arr = planarize_assume_simple(g, Embedding(n, points));
        for (int probe_i = 0; probe_i < 40; ++probe_i) {
            const Point p{Rat(rng.int_in(-10, 70)) + Rat(1, 3),
                          Rat(rng.int_in(-10, 70)) + Rat(1, 7)};
            if (arr.on_drawing(p)) continue;
            // Independent membership: total winding of the face's walks.
            int member_count = 0;
            int member_face = -1;
            for (std::size_t f = 0; f < arr.faces.size(); ++f) {
                int total = 0;
                for (int w : arr.faces[f].walks) total += arr.winding(arr.walks[w], p);
                const bool inside = arr.faces[f].bounded ? total != 0 : total == 0;
                if (inside) {
                    ++member_count;
                    member_face = static_cast<int>(f);
                }
            }
            CHECK(member_count == 1);
            CHECK(member_face == arr.locate(p));
        }
    }
}

TEST_CASE("non-edge face sequences") {
    // Triangle with an outside vertex: the segment from it to the apex
    // crosses the base edge, visiting outer then inner face.
    const Graph g(4, {{0, 1}, {1, 2}, {0, 2}});
    const Embedding emb(4, {P(12, 10), P(5, 1), P(4, 2), P(10, 5)});
    const Arrangement arr = planarize(g, emb);
    const auto seq = arr.non_edge_face_sequence(3, 2);
    REQUIRE(seq.size() == 2);
    CHECK(seq[0] == 0);           // starts outside
    CHECK(seq[1] != 0);           // ends inside the triangle
    // Consecutive entries always differ.
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) CHECK(seq[i] != seq[i + 1]);
    // Edges are rejected.
    CHECK_THROWS_AS(arr.non_edge_face_sequence(0, 1), PreconditionError);
}

TEST_CASE("two isolated points see one outer-face interval") {
    const Graph g(2, {});
    const Embedding emb(2, {P(0, 0), P(5, 3)});
    const Arrangement arr = planarize_assume_simple(g, emb);
    const auto seq = arr.non_edge_face_sequence(0, 1);
    REQUIRE(seq.size() == 1);
    CHECK(seq[0] == 0);
}

TEST_CASE("face sequence covers the open segment between crossings") {
    // A non-edge crossing a single bridge edge keeps the same face on both
    // sides; the deduplicated sequence has one entry.
    const Graph g(4, {{0, 1}});
    const Embedding emb(4, {P(0, 0), P(6, 0), P(3, 4), P(2, -5)});
    const Arrangement arr = planarize_assume_simple(g, emb);
    const auto seq = arr.non_edge_face_sequence(2, 3);
    REQUIRE(seq.size() == 1);
    CHECK(seq[0] == 0);
}

TEST_CASE("coverage matrix rows are the non-edges and never empty") {
    Rng rng(9302);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 4 + static_cast<int>(rng.below(3));
        const Graph g = random_graph(n, rng);
        PointSequence points = random_integer_points(n, 200, rng);
        if (!is_simple(points)) continue;
        const Arrangement arr = planarize_assume_simple(g, Embedding(n, points));
        const CoverageMatrix cm = coverage_matrix(arr);
        CHECK(cm.rows == g.non_edges());
        for (std::size_t r = 0; r < cm.rows.size(); ++r) {
            CHECK_FALSE(cm.row_faces[r].empty());
            // Row support matches the recomputed face sequence.
            auto seq = arr.non_edge_face_sequence(cm.rows[r].first, cm.rows[r].second);
            std::sort(seq.begin(), seq.end());
            seq.erase(std::unique(seq.begin(), seq.end()), seq.end());
            CHECK(cm.row_faces[r] == seq);
        }
        // Column/row consistency.
        for (int f = 0; f < cm.face_count; ++f)
            for (std::size_t r = 0; r < cm.rows.size(); ++r)
                CHECK(cm.face_covers[f].test(r) ==
                      std::binary_search(cm.row_faces[r].begin(), cm.row_faces[r].end(), f));
    }
}

TEST_CASE("face ids are canonical across rebuilds") {
    Rng rng(9303);
    const Graph g = random_graph(6, rng);
    PointSequence points;
    do {
        points = random_integer_points(6, 100, rng);
    } while (!is_simple(points));
    const Arrangement a = planarize_assume_simple(g, Embedding(6, points));
    const Arrangement b = planarize_assume_simple(g, Embedding(6, points));
    REQUIRE(a.faces.size() == b.faces.size());
    for (std::size_t f = 0; f < a.faces.size(); ++f) {
        CHECK(a.faces[f].boundary_nodes == b.faces[f].boundary_nodes);
        CHECK(a.faces[f].witness == b.faces[f].witness);
    }
}
