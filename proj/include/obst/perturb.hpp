#pragma once

#include <optional>
#include <vector>

#include "obst/rng.hpp"
#include "obst/super_order.hpp"
#include "obst/visibility.hpp"

namespace obst {

/// A representation whose visibilities the perturbation must preserve. The
/// embedding is the point sequence being perturbed.
struct PerturbContext {
    Graph graph;
    std::vector<Obstacle> obstacles;
};

struct PerturbResult {
    PointSequence points;
    int steps = 0;                              // accepted perturbation steps
    std::vector<long long> degenerate_counts;   // before each step and after the last
    bool changed = false;
};

namespace detail {

inline long long count_zeros(const std::vector<TriState>& values) {
    long long z = 0;
    for (TriState t : values)
        if (t == TriState::zero) ++z;
    return z;
}

inline Rat min_pairwise_sq_dist(const PointSequence& points) {
    Rat best = -1;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const Rat d2 = sq_dist(points[i], points[j]);
            if (best < 0 || d2 < best) best = d2;
        }
    return best;
}

/// Closed obstacle at positive distance from the closed edge segment?
/// Exact: compact sets are disjoint iff the distance is positive.
inline bool obstacle_clear_of_segment(const Obstacle& o, const Point& a, const Point& b) {
    if (const auto* pt = std::get_if<PointObstacle>(&o)) return !on_segment(pt->at, a, b);
    if (const auto* poly = std::get_if<PolygonObstacle>(&o)) {
        const auto& vs = poly->vertices;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            const Point& p = vs[i];
            const Point& q = vs[(i + 1) % vs.size()];
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
            if (hit) return false;
        }
        // No boundary contact: the segment is clear unless it sits inside.
        return polygon_side(vs, a) != PolygonSide::inside;
    }
    // A face obstacle's closure contains boundary arcs of the drawing.
    return false;
}

} // namespace detail

/// Randomized realization of the simple-position perturbation: move one
/// point of a degenerate sextuple by a random offset, accept only when the
/// degenerate count strictly drops, no non-degenerate type changes, and
/// (with a context) the visibility graph stays put. The offset magnitude
/// starts at half the minimum pairwise distance and halves on rejection.
inline PerturbResult perturb_to_simple(PointSequence points, std::uint64_t seed,
                                       const PerturbContext* context = nullptr) {
    require_distinct(points);
    const int n = static_cast<int>(points.size());
    const CanonicalSextupleSequence canon = enumerate_admissible(n);

    if (context) {
        if (context->graph.n != n) throw PreconditionError("context graph size mismatch");
        for (const Obstacle& o : context->obstacles)
            for (const auto& [u, w] : context->graph.edges)
                if (!detail::obstacle_clear_of_segment(o, points[u], points[w]))
                    throw PreconditionError(
                        "context obstacle touches edge (" + std::to_string(u + 1) + ", " +
                        std::to_string(w + 1) + "); perturbation needs positive clearance");
        if (!verify({context->graph, Embedding(n, points), context->obstacles, nullptr}).valid)
            throw PreconditionError("context is not a valid obstacle representation");
    }

    constexpr int max_halvings = 64;
    constexpr int attempts_per_radius = 32;

    Rng rng(seed);
    PerturbResult result;
    SuperOrderTypeVector sigma = super_order_type(points, canon);
    long long zeros = detail::count_zeros(sigma.values);
    result.degenerate_counts.push_back(zeros);

    while (zeros > 0) {
        // The first degenerate canonical sextuple names the point to move.
        int victim = -1;
        for (std::size_t l = 0; l < sigma.values.size(); ++l)
            if (sigma.values[l] == TriState::zero) {
                victim = canon.entries[l].i1;
                break;
            }

        const Rat rho0 = sqrt_lower_bound(detail::min_pairwise_sq_dist(points)) / 2;
        bool accepted = false;
        Rat rho = rho0;
        for (int halving = 0; halving < max_halvings && !accepted; ++halving, rho /= 2) {
            for (int attempt = 0; attempt < attempts_per_radius; ++attempt) {
                const Point offset{random_offset(rng, rho), random_offset(rng, rho)};
                if (offset.x == 0 && offset.y == 0) continue;
                PointSequence moved = points;
                moved[victim] = moved[victim] + offset;
                bool distinct = true;
                for (int i = 0; i < n; ++i)
                    if (i != victim && moved[i] == moved[victim]) distinct = false;
                if (!distinct) continue;

                // Entry-wise acceptance: nonzero types must survive, zeros
                // must strictly decrease.
                bool ok = true;
                long long new_zeros = 0;
                std::vector<TriState> new_values(sigma.values.size());
                for (std::size_t l = 0; l < canon.entries.size() && ok; ++l) {
                    const TriState t = sextuple_type(instantiate(canon.entries[l], moved));
                    new_values[l] = t;
                    if (sigma.values[l] != TriState::zero && t != sigma.values[l]) ok = false;
                    if (t == TriState::zero) ++new_zeros;
                }
                if (!ok || new_zeros >= zeros) continue;

                if (context) {
                    const Embedding emb(n, moved);
                    if (visibility_graph(emb, context->obstacles) != context->graph) continue;
                }

                points = std::move(moved);
                sigma.values = std::move(new_values);
                zeros = new_zeros;
                accepted = true;
                ++result.steps;
                result.changed = true;
                result.degenerate_counts.push_back(zeros);
                break;
            }
        }
        if (!accepted)
            throw BudgetError("perturbation budget exhausted with " + std::to_string(zeros) +
                                  " degenerate sextuples remaining",
                              zeros);
    }

    result.points = std::move(points);
    return result;
}

} // namespace obst
