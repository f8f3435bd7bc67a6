#pragma once

#include <cstdint>
#include <random>

#include "obst/point.hpp"

namespace obst {

/// Seeded deterministic random stream. All bounded draws go through
/// rejection sampling on the raw mt19937_64 output, so identical seeds give
/// identical streams on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform value in [0, n).
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    /// Uniform value in [lo, hi], inclusive.
    long long int_in(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool coin() { return (engine_() & 1) != 0; }

    /// Derives an independent stream; keeps per-phase draws decoupled from
    /// the parent's consumption pattern.
    Rng fork() { return Rng(engine_()); }

  private:
    std::mt19937_64 engine_;
};

/// Uniform rational in [-magnitude, magnitude] on a 2^20 grid.
inline Rat random_offset(Rng& rng, const Rat& magnitude) {
    constexpr long long grid = 1 << 20;
    const long long k = rng.int_in(-grid, grid);
    return magnitude * Rat(k, grid);
}

/// Distinct integer-coordinate points, uniform in [0, range]^2.
inline PointSequence random_integer_points(int n, long long range, Rng& rng) {
    PointSequence points;
    points.reserve(n);
    while (static_cast<int>(points.size()) < n) {
        Point p{Rat(rng.int_in(0, range)), Rat(rng.int_in(0, range))};
        bool fresh = true;
        for (const Point& q : points)
            if (q == p) {
                fresh = false;
                break;
            }
        if (fresh) points.push_back(std::move(p));
    }
    return points;
}

} // namespace obst
