#pragma once

#include <set>
#include <string>
#include <vector>

#include "obst/minimize.hpp"

namespace obst {

/// Samples a simple point sequence by drawing random integer coordinates
/// until simplicity holds (degenerate draws are rare at the default range).
inline PointSequence sample_simple_points(int n, long long range, Rng& rng,
                                          const CanonicalSextupleSequence& canon,
                                          int max_attempts = 1000) {
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        PointSequence points = random_integer_points(n, range, rng);
        if (is_simple(points, canon)) return points;
    }
    throw BudgetError("no simple point sequence found in " + std::to_string(max_attempts) +
                      " attempts");
}

struct CensusResult {
    int n = 0;
    int samples = 0;
    std::size_t r = 0;
    std::size_t distinct = 0;
    std::vector<int> new_type_at; // sample indices that revealed a new type
};

/// Counts distinct super-order types among random simple sequences.
inline CensusResult census(int n, int samples, std::uint64_t seed) {
    if (n < 1) throw PreconditionError("census needs n >= 1");
    if (samples < 1) throw PreconditionError("census needs at least one sample");
    const CanonicalSextupleSequence canon = enumerate_admissible(n);
    const long long range = std::max<long long>(16, static_cast<long long>(n) * n * n * n);
    Rng rng(seed);
    CensusResult out;
    out.n = n;
    out.samples = samples;
    out.r = canon.size();
    std::set<std::string> seen;
    for (int s = 0; s < samples; ++s) {
        const PointSequence points = sample_simple_points(n, range, rng, canon);
        const SuperOrderTypeVector sigma = super_order_type(points, canon);
        if (seen.insert(sigma.to_chars()).second) out.new_type_at.push_back(s);
    }
    out.distinct = seen.size();
    return out;
}

struct OrderTypeGapResult {
    bool found = false;
    int trials_used = 0;
    Graph graph;
    PointSequence points_a, points_b;
    int count_a = 0, count_b = 0;
};

/// Finds a second simple sequence with the same classical order type but a
/// different super-order type, by shrinking random single-point moves until
/// no orientation flips.
inline std::optional<PointSequence> order_preserving_variant(
    const PointSequence& base, const CanonicalSextupleSequence& canon, Rng& rng,
    int attempts = 256) {
    const OrderTypeVector ot = order_type(base);
    const SuperOrderTypeVector sigma = super_order_type(base, canon);
    const int n = static_cast<int>(base.size());
    const Rat rho0 = sqrt_lower_bound(detail::min_pairwise_sq_dist(base));
    for (int attempt = 0; attempt < attempts; ++attempt) {
        const int v = static_cast<int>(rng.below(n));
        const Rat rho = rho0 / (1 + static_cast<long long>(rng.below(8)));
        PointSequence moved = base;
        moved[v] = moved[v] + Point{random_offset(rng, rho), random_offset(rng, rho)};
        bool distinct = true;
        for (int i = 0; i < n; ++i)
            if (i != v && moved[i] == moved[v]) distinct = false;
        if (!distinct) continue;
        if (order_type(moved) != ot) continue;
        if (!is_simple(moved, canon)) continue;
        if (super_order_type(moved, canon) == sigma) continue;
        return moved;
    }
    return std::nullopt;
}

/// Searches for a graph with two equal-order-type simple embeddings whose
/// fixed-embedding minima differ. Equal super-order types can never appear
/// among hits (they force equal minima), which the caller may re-verify.
inline OrderTypeGapResult order_type_gap_search(int n, int budget, std::uint64_t seed) {
    if (n < 4) throw PreconditionError("order-type gap search needs n >= 4");
    const CanonicalSextupleSequence canon = enumerate_admissible(n);
    const long long range = static_cast<long long>(n) * n * n * n;
    Rng rng(seed);
    OrderTypeGapResult out;
    for (int trial = 0; trial < budget; ++trial) {
        out.trials_used = trial + 1;
        PointSequence base;
        try {
            base = sample_simple_points(n, range, rng, canon, 100);
        } catch (const BudgetError&) {
            continue;
        }
        const auto variant = order_preserving_variant(base, canon, rng);
        if (!variant) continue;
        const Embedding emb_a(n, base);
        const Embedding emb_b(n, *variant);
        for (int g = 0; g < 4; ++g) {
            const Graph graph = random_graph(n, rng);
            if (graph.is_complete() || graph.edges.empty()) continue;
            const int ca = min_obstacles_fixed(graph, emb_a, MinimizeMode::faces,
                                               {.assume_simple = true})
                               .count;
            const int cb = min_obstacles_fixed(graph, emb_b, MinimizeMode::faces,
                                               {.assume_simple = true})
                               .count;
            if (ca != cb) {
                out.found = true;
                out.graph = graph;
                out.points_a = base;
                out.points_b = *variant;
                out.count_a = ca;
                out.count_b = cb;
                return out;
            }
        }
    }
    return out;
}

} // namespace obst
