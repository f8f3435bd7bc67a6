#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "obst/arrangement.hpp"
#include "obst/perturb.hpp"
#include "obst/visibility.hpp"

namespace obst {

namespace detail {

using Bitset = boost::dynamic_bitset<>;

/// Exact minimum number of sets covering all rows, branch and bound with a
/// greedy upper bound and a coverage-ratio lower bound.
class SetCoverSolver {
  public:
    SetCoverSolver(const std::vector<Bitset>& sets, std::size_t rows)
        : sets_(sets), rows_(rows) {}

    int greedy(std::vector<int>* chosen = nullptr) const {
        Bitset uncovered(rows_);
        uncovered.set();
        int count = 0;
        while (uncovered.any()) {
            int best = -1;
            std::size_t best_gain = 0;
            for (std::size_t s = 0; s < sets_.size(); ++s) {
                const std::size_t gain = (sets_[s] & uncovered).count();
                if (gain > best_gain) {
                    best_gain = gain;
                    best = static_cast<int>(s);
                }
            }
            if (best < 0) throw PreconditionError("rows cannot be covered");
            uncovered -= sets_[best];
            if (chosen) chosen->push_back(best);
            ++count;
        }
        return count;
    }

    int minimum() {
        if (rows_ == 0) return 0;
        best_ = greedy();
        Bitset uncovered(rows_);
        uncovered.set();
        branch(uncovered, 0);
        return best_;
    }

    /// Can `budget` sets cover `rows_mask`? Decision variant used by the
    /// lexicographic reconstruction.
    bool coverable(const Bitset& rows_mask, int budget) {
        if (!rows_mask.any()) return true;
        if (budget <= 0) return false;
        saved_best_ = best_;
        best_ = budget + 1;
        branch(rows_mask, 0);
        const bool ok = best_ <= budget;
        best_ = saved_best_;
        return ok;
    }

    /// Lexicographically smallest set-id selection of size `k` covering all
    /// rows (ids ascending; the selection sequence is compared as a sorted
    /// sequence, so a greedy-by-id scan with feasibility checks is exact).
    std::vector<int> lex_minimum(int k) {
        std::vector<int> chosen;
        Bitset uncovered(rows_);
        uncovered.set();
        int from = 0;
        while (uncovered.any()) {
            bool advanced = false;
            for (std::size_t s = from; s < sets_.size(); ++s) {
                if ((sets_[s] & uncovered).none()) continue;
                Bitset rest = uncovered - sets_[s];
                if (coverable(rest, k - static_cast<int>(chosen.size()) - 1)) {
                    chosen.push_back(static_cast<int>(s));
                    uncovered = std::move(rest);
                    from = static_cast<int>(s) + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) throw std::logic_error("lexicographic cover reconstruction failed");
        }
        return chosen;
    }

  private:
    void branch(const Bitset& uncovered, int used) {
        if (!uncovered.any()) {
            if (used < best_) best_ = used;
            return;
        }
        if (used + 1 >= best_) return;
        // Lower bound: every set covers at most max_gain of the uncovered rows.
        std::size_t max_gain = 0;
        for (const Bitset& s : sets_) {
            const std::size_t gain = (s & uncovered).count();
            if (gain > max_gain) max_gain = gain;
        }
        if (max_gain == 0) return; // uncoverable residue
        const std::size_t need = uncovered.count();
        const int lower = static_cast<int>((need + max_gain - 1) / max_gain);
        if (used + lower >= best_) return;

        // Branch on the hardest row: try exactly the sets that cover it.
        std::size_t row = uncovered.find_first();
        std::size_t fewest = std::numeric_limits<std::size_t>::max();
        for (std::size_t r = uncovered.find_first(); r != Bitset::npos;
             r = uncovered.find_next(r)) {
            std::size_t options = 0;
            for (const Bitset& s : sets_)
                if (s.test(r)) ++options;
            if (options < fewest) {
                fewest = options;
                row = r;
            }
        }
        std::vector<int> candidates;
        for (std::size_t s = 0; s < sets_.size(); ++s)
            if (sets_[s].test(row)) candidates.push_back(static_cast<int>(s));
        std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
            return (sets_[a] & uncovered).count() > (sets_[b] & uncovered).count();
        });
        for (int s : candidates) branch(uncovered - sets_[s], used + 1);
    }

    const std::vector<Bitset>& sets_;
    std::size_t rows_;
    int best_ = std::numeric_limits<int>::max();
    int saved_best_ = 0;
};

} // namespace detail

enum class MinimizeMode { faces, vertex_clusters };

struct SolveOptions {
    bool assume_simple = false;
};

/// Outcome of a fixed-embedding minimization: `count` obstacles realized by
/// face interiors, grouped into vertex-connected clusters in the extended
/// mode (singletons otherwise). The certificate re-verifies against the
/// input graph.
struct MinimizeResult {
    int count = 0;
    std::vector<std::vector<int>> clusters; // face ids per obstacle
    ObstacleRepresentation certificate;
    std::shared_ptr<const Arrangement> arrangement;

    std::vector<int> chosen_faces() const {
        std::vector<int> out;
        for (const auto& c : clusters) out.insert(out.end(), c.begin(), c.end());
        std::sort(out.begin(), out.end());
        return out;
    }
};

/// Exact minimum number of obstacles for a fixed embedding. In `faces` mode
/// the candidates are single face interiors and the optimum is the minimum
/// hitting set over the coverage matrix, tie-broken to the
/// lexicographically smallest face-id set. In `vertex_clusters` mode a
/// candidate is a connected union of faces, connectivity through shared
/// original vertices; merging clusters inside one connected component is
/// always free, so the optimum picks whole components.
inline MinimizeResult min_obstacles_fixed(const Graph& graph, const Embedding& emb,
                                          MinimizeMode mode = MinimizeMode::faces,
                                          const SolveOptions& options = {}) {
    auto arr = std::make_shared<const Arrangement>(
        options.assume_simple ? planarize_assume_simple(graph, emb) : planarize(graph, emb));
    const CoverageMatrix cm = coverage_matrix(*arr);

    MinimizeResult result;
    result.arrangement = arr;
    result.certificate.graph = graph;
    result.certificate.embedding = emb;
    result.certificate.arrangement = arr;
    if (cm.rows.empty()) return result; // complete graph: zero obstacles

    if (mode == MinimizeMode::faces) {
        detail::SetCoverSolver solver(cm.face_covers, cm.rows.size());
        result.count = solver.minimum();
        const std::vector<int> faces = solver.lex_minimum(result.count);
        for (int f : faces) {
            result.clusters.push_back({f});
            result.certificate.obstacles.push_back(FaceObstacle{f});
        }
        return result;
    }

    // Vertex-cluster mode: component decomposition of the face graph whose
    // adjacencies are shared original vertices.
    const int face_count = static_cast<int>(arr->faces.size());
    detail::UnionFind uf(face_count);
    for (int v = 0; v < graph.n; ++v) {
        int first = -1;
        for (int f = 0; f < face_count; ++f) {
            const auto& bn = arr->faces[f].boundary_nodes;
            if (!std::binary_search(bn.begin(), bn.end(), v)) continue;
            if (first < 0)
                first = f;
            else
                uf.unite(first, f);
        }
    }
    std::map<int, std::vector<int>> components;
    for (int f = 0; f < face_count; ++f) components[uf.find(f)].push_back(f);
    std::vector<std::vector<int>> clusters;
    for (auto& [root, faces] : components) clusters.push_back(std::move(faces));
    std::sort(clusters.begin(), clusters.end()); // by smallest face id
    std::vector<detail::Bitset> cluster_covers;
    for (const auto& cluster : clusters) {
        detail::Bitset mask(cm.rows.size());
        for (int f : cluster) mask |= cm.face_covers[f];
        cluster_covers.push_back(std::move(mask));
    }
    detail::SetCoverSolver solver(cluster_covers, cm.rows.size());
    result.count = solver.minimum();
    for (int c : solver.lex_minimum(result.count)) {
        result.clusters.push_back(clusters[c]);
        for (int f : clusters[c]) result.certificate.obstacles.push_back(FaceObstacle{f});
    }
    return result;
}

/// Greedy set cover companion: highest coverage first, ties to the smaller
/// face id. Returns a valid certificate whose count upper-bounds the exact
/// minimum.
inline MinimizeResult greedy_fixed(const Graph& graph, const Embedding& emb,
                                   const SolveOptions& options = {}) {
    auto arr = std::make_shared<const Arrangement>(
        options.assume_simple ? planarize_assume_simple(graph, emb) : planarize(graph, emb));
    const CoverageMatrix cm = coverage_matrix(*arr);
    MinimizeResult result;
    result.arrangement = arr;
    result.certificate.graph = graph;
    result.certificate.embedding = emb;
    result.certificate.arrangement = arr;
    if (cm.rows.empty()) return result;

    detail::Bitset uncovered(cm.rows.size());
    uncovered.set();
    while (uncovered.any()) {
        int best = -1;
        std::size_t best_gain = 0;
        for (int f = 0; f < cm.face_count; ++f) {
            const std::size_t gain = (cm.face_covers[f] & uncovered).count();
            if (gain > best_gain) { // ties keep the smaller id
                best_gain = gain;
                best = f;
            }
        }
        uncovered -= cm.face_covers[best];
        result.clusters.push_back({best});
        result.certificate.obstacles.push_back(FaceObstacle{best});
        ++result.count;
    }
    return result;
}

struct SearchConfig {
    int budget = 1000;
    std::uint64_t seed = 0;
    long long coord_range = -1; // default n^4
    int simplicity_retries = 64;
};

struct SearchResult {
    MinimizeResult best;
    Embedding embedding;
    int samples_used = 0;
    std::vector<int> best_so_far; // per processed sample
};

/// Samples random integer embeddings (perturbed into simple position when
/// needed), minimizes each, and keeps the best. The result is a certified
/// upper bound on the obstacle number. Stops early once the theoretical
/// floor (0 for complete graphs, otherwise 1) is reached.
inline SearchResult obstacle_number_search(const Graph& graph, const SearchConfig& cfg) {
    if (cfg.budget < 1) throw PreconditionError("search budget must be at least 1");
    const long long range = cfg.coord_range > 0
                                ? cfg.coord_range
                                : static_cast<long long>(graph.n) * graph.n * graph.n * graph.n;
    const int floor_count = graph.is_complete() ? 0 : 1;
    Rng rng(cfg.seed);
    std::optional<SearchResult> found;
    std::vector<int> curve;
    int failures = 0;
    int sample = 0;
    for (; sample < cfg.budget; ++sample) {
        PointSequence points = random_integer_points(graph.n, range, rng);
        const std::uint64_t perturb_seed = rng.next();
        if (!is_simple(points)) {
            try {
                points = perturb_to_simple(std::move(points), perturb_seed).points;
            } catch (const BudgetError&) {
                if (++failures > cfg.simplicity_retries)
                    throw BudgetError("no simple embedding found within the retry limit");
                continue;
            }
        }
        Embedding emb(graph.n, points);
        MinimizeResult res = min_obstacles_fixed(graph, emb, MinimizeMode::faces,
                                                 {.assume_simple = true});
        if (!found || res.count < found->best.count) {
            found = SearchResult{std::move(res), emb, 0, {}};
        }
        curve.push_back(found->best.count);
        if (found->best.count <= floor_count) {
            ++sample;
            break;
        }
    }
    if (!found) throw BudgetError("search produced no simple embedding");
    found->samples_used = sample;
    found->best_so_far = std::move(curve);
    return *found;
}

struct SlabEntry {
    std::vector<int> vertices; // original ids, ascending x
    int induced_edges = 0;
    int min_count = 0;
    std::vector<int> faces;             // chosen faces in the slab-local arrangement
    int whole_obstacles_inside = 0;     // whole-instance obstacles strictly in the slab
};

struct SlabReportData {
    int k = 0;
    int m = 0;
    std::vector<SlabEntry> slabs;
    int whole_count = 0;
    std::vector<int> whole_faces;
};

/// Vertical-slab decomposition: the k*m leftmost points split into m
/// consecutive slabs of k points each. Per-slab minima are fixed-embedding
/// minima of the induced subgraphs; induced-subgraph monotonicity puts each
/// at or below the whole-instance minimum.
inline SlabReportData slab_report(const Graph& graph, const Embedding& emb, int k,
                                  const SolveOptions& options = {}) {
    if (k < 1 || k > graph.n) throw PreconditionError("slab size must be in [1, n]");
    if (!options.assume_simple && !is_simple(emb.points))
        throw PreconditionError("embedding is not simple; perturb it first");
    std::vector<int> order(graph.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return emb.points[a].x < emb.points[b].x; });
    for (int i = 0; i + 1 < graph.n; ++i)
        if (emb.points[order[i]].x == emb.points[order[i + 1]].x)
            throw PreconditionError("vertices " + std::to_string(order[i] + 1) + " and " +
                                    std::to_string(order[i + 1] + 1) +
                                    " share an x-coordinate");

    SlabReportData report;
    report.k = k;
    report.m = graph.n / k;

    MinimizeResult whole =
        min_obstacles_fixed(graph, emb, MinimizeMode::faces, {.assume_simple = true});
    report.whole_count = whole.count;
    report.whole_faces = whole.chosen_faces();

    for (int s = 0; s < report.m; ++s) {
        SlabEntry entry;
        for (int i = s * k; i < (s + 1) * k; ++i) entry.vertices.push_back(order[i]);
        const Graph sub = graph.induced(entry.vertices);
        PointSequence sub_points;
        for (int v : entry.vertices) sub_points.push_back(emb.points[v]);
        entry.induced_edges = static_cast<int>(sub.edges.size());
        MinimizeResult sub_min = min_obstacles_fixed(sub, Embedding(k, sub_points),
                                                     MinimizeMode::faces,
                                                     {.assume_simple = true});
        entry.min_count = sub_min.count;
        entry.faces = sub_min.chosen_faces();

        // Slab extent: open strip between the midpoints separating it from
        // its neighbors (unbounded on the outside of the first/last slab).
        std::optional<Rat> lo, hi;
        if (s > 0)
            lo = (emb.points[order[s * k - 1]].x + emb.points[order[s * k]].x) / 2;
        if ((s + 1) * k < graph.n)
            hi = (emb.points[order[(s + 1) * k - 1]].x + emb.points[order[(s + 1) * k]].x) / 2;
        for (int f : report.whole_faces) {
            const auto& face = whole.arrangement->faces[f];
            if (!face.bounded) continue;
            bool inside = true;
            for (int node : face.boundary_nodes) {
                const Rat& x = whole.arrangement->nodes[node].x;
                if ((lo && x <= *lo) || (hi && x >= *hi)) {
                    inside = false;
                    break;
                }
            }
            if (inside) ++entry.whole_obstacles_inside;
        }
        report.slabs.push_back(std::move(entry));
    }
    return report;
}

} // namespace obst
