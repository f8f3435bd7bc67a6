#pragma once

#include <vector>

#include "obst/sextuples.hpp"

namespace obst {

/// The sequence of sextuple types over the canonical admissible sextuples
/// of a point sequence. Finer than the classical order type; "simple" means
/// no zero entry.
struct SuperOrderTypeVector {
    int n = 0;
    std::vector<TriState> values;

    bool simple() const {
        for (TriState t : values)
            if (t == TriState::zero) return false;
        return true;
    }

    std::size_t zero_count() const {
        std::size_t z = 0;
        for (TriState t : values)
            if (t == TriState::zero) ++z;
        return z;
    }

    bool operator==(const SuperOrderTypeVector&) const = default;

    std::string to_chars() const {
        std::string s;
        s.reserve(values.size());
        for (TriState t : values) s.push_back(tri_char(t));
        return s;
    }
};

inline SuperOrderTypeVector super_order_type(const PointSequence& points,
                                             const CanonicalSextupleSequence& canon) {
    require_distinct(points);
    SuperOrderTypeVector v;
    v.n = canon.n;
    v.values.reserve(canon.size());
    for (const SextupleIndices& s : canon.entries)
        v.values.push_back(sextuple_type(instantiate(s, points)));
    return v;
}

inline SuperOrderTypeVector super_order_type(const PointSequence& points) {
    return super_order_type(points, enumerate_admissible(static_cast<int>(points.size())));
}

/// True iff no canonical sextuple of the sequence is degenerate. Bails out
/// on the first zero.
inline bool is_simple(const PointSequence& points, const CanonicalSextupleSequence& canon) {
    require_distinct(points);
    for (const SextupleIndices& s : canon.entries)
        if (sextuple_type(instantiate(s, points)) == TriState::zero) return false;
    return true;
}

inline bool is_simple(const PointSequence& points) {
    return is_simple(points, enumerate_admissible(static_cast<int>(points.size())));
}

/// Sign of the product polynomial whose factors are, per canonical
/// sextuple, the two parallelism polynomials and the cleared concurrency
/// determinant. Computed as a product of signs, never of magnitudes; zero
/// exactly on non-simple sequences.
inline TriState pstar_sign(const PointSequence& points, const CanonicalSextupleSequence& canon) {
    require_distinct(points);
    int sign = 1;
    for (const SextupleIndices& s : canon.entries) {
        const TriState f = sextuple_factor_sign(instantiate(s, points));
        if (f == TriState::zero) return TriState::zero;
        sign *= to_int(f);
    }
    return tri_of_sign(sign);
}

inline TriState pstar_sign(const PointSequence& points) {
    return pstar_sign(points, enumerate_admissible(static_cast<int>(points.size())));
}

/// Classical order type: orientation of every triple i < j < k, in
/// lexicographic triple order.
struct OrderTypeVector {
    int n = 0;
    std::vector<TriState> values;

    bool operator==(const OrderTypeVector&) const = default;
};

inline OrderTypeVector order_type(const PointSequence& points) {
    require_distinct(points);
    const int n = static_cast<int>(points.size());
    OrderTypeVector v;
    v.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                v.values.push_back(orientation(points[i], points[j], points[k]));
    return v;
}

} // namespace obst
