#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "obst/minimize.hpp"
#include "oracles.hpp"

using namespace obst;

namespace {

Point P(long long x, long long y) { return {Rat(x), Rat(y)}; }

Embedding random_simple_embedding(int n, long long range, Rng& rng) {
    PointSequence points;
    do {
        points = random_integer_points(n, range, rng);
    } while (!is_simple(points));
    return Embedding(n, points);
}

} // namespace

TEST_CASE("complete graphs need no obstacles") {
    Rng rng(11001);
    const Embedding emb = random_simple_embedding(5, 625, rng);
    const MinimizeResult res = min_obstacles_fixed(Graph::complete(5), emb);
    CHECK(res.count == 0);
    CHECK(res.certificate.obstacles.empty());
    CHECK(verify(res.certificate).valid);
}

TEST_CASE("one missing edge needs exactly one obstacle") {
    Rng rng(11002);
    Graph g = Graph::complete(5);
    g = Graph(5, {g.edges.begin() + 1, g.edges.end()});
    const Embedding emb = random_simple_embedding(5, 625, rng);
    const MinimizeResult res = min_obstacles_fixed(g, emb);
    CHECK(res.count == 1);
    CHECK(verify(res.certificate).valid);
}

TEST_CASE("exact solver agrees with the exhaustive subset oracle") {
    Rng rng(11003);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 4 + static_cast<int>(rng.below(4)); // 4..7
        const Graph g = random_graph(n, rng);
        const Embedding emb = random_simple_embedding(n, 200, rng);
        const MinimizeResult res =
            min_obstacles_fixed(g, emb, MinimizeMode::faces, {.assume_simple = true});
        const CoverageMatrix cm = coverage_matrix(*res.arrangement);
        CHECK(res.count == oracle::exhaustive_min_cover(cm.face_covers, cm.rows.size()));
        CHECK(verify(res.certificate).valid);
        CHECK(res.clusters.size() == static_cast<std::size_t>(res.count));
    }
}

TEST_CASE("the chosen face set is the lexicographically smallest optimum") {
    Rng rng(11004);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_graph(5, rng);
        if (g.is_complete()) continue;
        const Embedding emb = random_simple_embedding(5, 200, rng);
        const MinimizeResult res =
            min_obstacles_fixed(g, emb, MinimizeMode::faces, {.assume_simple = true});
        const CoverageMatrix cm = coverage_matrix(*res.arrangement);
        // Recompute by brute force over all k-subsets in lexicographic order.
        const int k = res.count;
        std::vector<int> ids(cm.face_count);
        std::iota(ids.begin(), ids.end(), 0);
        std::vector<int> best;
        std::vector<int> pick;
        std::function<bool(int, int)> rec = [&](int depth, int from) {
            if (depth == k) {
                boost::dynamic_bitset<> acc(cm.rows.size());
                for (int f : pick) acc |= cm.face_covers[f];
                return acc.all();
            }
            for (int f = from; f < cm.face_count; ++f) {
                pick.push_back(f);
                if (rec(depth + 1, f + 1)) return true;
                pick.pop_back();
            }
            return false;
        };
        REQUIRE(rec(0, 0)); // first hit in this order IS the lex-smallest
        best = pick;
        CHECK(res.chosen_faces() == best);
    }
}

TEST_CASE("greedy upper-bounds the exact minimum") {
    Rng rng(11005);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 4 + static_cast<int>(rng.below(4));
        const Graph g = random_graph(n, rng);
        const Embedding emb = random_simple_embedding(n, 200, rng);
        const MinimizeResult exact =
            min_obstacles_fixed(g, emb, MinimizeMode::faces, {.assume_simple = true});
        const MinimizeResult greedy = greedy_fixed(g, emb, {.assume_simple = true});
        CHECK(greedy.count >= exact.count);
        CHECK(verify(greedy.certificate).valid);
        const std::size_t non_edges = g.non_edges().size();
        if (non_edges > 0)
            CHECK(static_cast<double>(greedy.count) <=
                  exact.count * (1.0 + std::log(static_cast<double>(non_edges))) + 1e-9);
    }
}

TEST_CASE("vertex clusters never exceed the faces minimum") {
    Rng rng(11006);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 4 + static_cast<int>(rng.below(3));
        const Graph g = random_graph(n, rng);
        const Embedding emb = random_simple_embedding(n, 200, rng);
        const MinimizeResult faces =
            min_obstacles_fixed(g, emb, MinimizeMode::faces, {.assume_simple = true});
        const MinimizeResult clusters =
            min_obstacles_fixed(g, emb, MinimizeMode::vertex_clusters, {.assume_simple = true});
        CHECK(clusters.count <= faces.count);
        CHECK(verify(clusters.certificate).valid);
        CHECK(clusters.clusters.size() == static_cast<std::size_t>(clusters.count));
    }
}

TEST_CASE("search certifies the grid claims") {
    SearchConfig cfg;
    cfg.budget = 1000;
    cfg.seed = 5;
    // 2x2 grid graph = C4.
    const SearchResult c4 = obstacle_number_search(grid_graph(2, 2), cfg);
    CHECK(c4.best.count == 1);
    CHECK(verify(c4.best.certificate).valid);
    // Any non-complete graph needs at least one obstacle.
    CHECK(c4.best.count >= 1);
    // Complete graphs stop at zero immediately.
    const SearchResult k4 = obstacle_number_search(Graph::complete(4), cfg);
    CHECK(k4.best.count == 0);
    CHECK(k4.samples_used == 1);
}

TEST_CASE("search best-so-far curve never increases") {
    SearchConfig cfg;
    cfg.budget = 40;
    cfg.seed = 17;
    Rng rng(11007);
    const Graph g = random_graph(6, rng);
    if (g.is_complete()) return;
    const SearchResult res = obstacle_number_search(g, cfg);
    for (std::size_t i = 0; i + 1 < res.best_so_far.size(); ++i)
        CHECK(res.best_so_far[i + 1] <= res.best_so_far[i]);
    CHECK(res.best.count >= 1);
    CHECK(verify(res.best.certificate).valid);
}

TEST_CASE("search is deterministic for a fixed seed") {
    SearchConfig cfg;
    cfg.budget = 25;
    cfg.seed = 99;
    const Graph g = grid_graph(2, 2);
    const SearchResult a = obstacle_number_search(g, cfg);
    const SearchResult b = obstacle_number_search(g, cfg);
    CHECK(a.best.count == b.best.count);
    CHECK(a.embedding.points == b.embedding.points);
    CHECK(a.best.chosen_faces() == b.best.chosen_faces());
    CHECK(a.best_so_far == b.best_so_far);
}

TEST_CASE("slab report structure and monotonicity") {
    Rng rng(11008);
    const int n = 8;
    const Graph g = random_graph(n, rng);
    const Embedding emb = random_simple_embedding(n, 4096, rng);
    const SlabReportData rep = slab_report(g, emb, 3);
    CHECK(rep.m == 2);
    CHECK(rep.slabs.size() == 2);
    for (const SlabEntry& s : rep.slabs) {
        CHECK(s.vertices.size() == 3);
        // Induced-subgraph monotonicity.
        CHECK(s.min_count <= rep.whole_count);
        CHECK(s.whole_obstacles_inside <= rep.whole_count);
    }
    // k = n: a single slab whose minimum is the whole minimum.
    const SlabReportData whole = slab_report(g, emb, n);
    CHECK(whole.m == 1);
    REQUIRE(whole.slabs.size() == 1);
    CHECK(whole.slabs[0].min_count == whole.whole_count);
}

TEST_CASE("slab report rejects duplicate x coordinates") {
    const Graph g(3, {{0, 1}});
    // Distinct points sharing an x-coordinate.
    CHECK_THROWS_WITH(
        slab_report(g, Embedding(3, {P(0, 0), P(0, 5), P(3, 1)}), 1,
                    {.assume_simple = true}),
        Catch::Matchers::ContainsSubstring("x-coordinate"));
}

TEST_CASE("sigma-preserving perturbations keep the minimum") {
    Rng rng(11009);
    int done = 0;
    for (int trial = 0; trial < 40 && done < 12; ++trial) {
        const int n = 5;
        const Graph g = random_graph(n, rng);
        if (g.is_complete()) continue;
        const Embedding emb = random_simple_embedding(n, 400, rng);
        const CanonicalSextupleSequence canon = enumerate_admissible(n);
        const SuperOrderTypeVector sigma = super_order_type(emb.points, canon);
        // Find a sigma-preserving single-point move by shrinking offsets.
        Rat rho(1, 2);
        for (int attempt = 0; attempt < 30; ++attempt, rho /= 2) {
            PointSequence moved = emb.points;
            const int v = static_cast<int>(rng.below(n));
            moved[v] = moved[v] + Point{random_offset(rng, rho), random_offset(rng, rho)};
            bool distinct = true;
            for (int i = 0; i < n; ++i)
                if (i != v && moved[i] == moved[v]) distinct = false;
            if (!distinct) continue;
            if (super_order_type(moved, canon) != sigma) continue;
            const int before = min_obstacles_fixed(g, emb, MinimizeMode::faces,
                                                   {.assume_simple = true})
                                   .count;
            const int after = min_obstacles_fixed(g, Embedding(n, moved),
                                                  MinimizeMode::faces,
                                                  {.assume_simple = true})
                                  .count;
            CHECK(before == after);
            ++done;
            break;
        }
    }
    CHECK(done == 12);
}
