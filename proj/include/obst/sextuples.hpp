#pragma once

#include <compare>
#include <vector>

#include "obst/point.hpp"
#include "obst/predicates.hpp"

namespace obst {

/// Index form of a sextuple over vertices 0..n-1: the A-pair (i1, i2),
/// B-pair (j1, j2) and C-pair (k1, k2), each oriented with the smaller
/// index first.
struct SextupleIndices {
    int i1, i2, j1, j2, k1, k2;
    auto operator<=>(const SextupleIndices&) const = default;
};

/// The canonical listing of admissible index sextuples for a given n:
/// ordered triples of pairwise-distinct oriented pairs with empty triple
/// intersection, sorted lexicographically.
struct CanonicalSextupleSequence {
    int n = 0;
    std::vector<SextupleIndices> entries;

    std::size_t size() const { return entries.size(); }
};

/// Deterministic enumeration; r < C(n,2)^3 always. n < 3 yields the empty
/// sequence (three distinct pairs need at least three indices).
inline CanonicalSextupleSequence enumerate_admissible(int n) {
    CanonicalSextupleSequence seq;
    seq.n = n;
    if (n < 3) return seq;

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    auto contains = [](const std::pair<int, int>& p, int v) {
        return p.first == v || p.second == v;
    };
    for (const auto& pa : pairs)
        for (const auto& pb : pairs) {
            if (pb == pa) continue;
            for (const auto& pc : pairs) {
                if (pc == pa || pc == pb) continue;
                bool common = false;
                for (int v : {pa.first, pa.second})
                    if (contains(pb, v) && contains(pc, v)) {
                        common = true;
                        break;
                    }
                if (common) continue;
                seq.entries.push_back(
                    {pa.first, pa.second, pb.first, pb.second, pc.first, pc.second});
            }
        }
    // The triple loop over lex-sorted pairs emits entries in lex order.
    return seq;
}

/// Instantiates entry indices at a point sequence.
inline Sextuple instantiate(const SextupleIndices& s, const PointSequence& points) {
    return Sextuple{points[s.i1], points[s.i2], points[s.j1],
                    points[s.j2], points[s.k1], points[s.k2]};
}

} // namespace obst
