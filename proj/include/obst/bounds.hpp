#pragma once

#include <functional>
#include <limits>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "obst/rational.hpp"

namespace obst {

/// 128-bit-significand binary float for the log-space calculators. Wide
/// enough that quantities like e^{-m k^2} never underflow at the sizes the
/// reports handle.
using Real =
    boost::multiprecision::number<boost::multiprecision::cpp_bin_float<128,
                                                                       boost::multiprecision::digit_base_2>>;

inline Real to_real(const Rat& v) {
    return Real(numerator(v)) / Real(denominator(v));
}

inline Real log2_real(const Real& v) { return log(v) / log(Real(2)); }

/// Binomial(m, p) tail query Pr{B >= t}, with mu = m*p and delta = t/mu - 1.
struct ChernoffParams {
    long long m = 0;
    Rat p;
    Rat t;

    Rat mu() const { return Rat(m) * p; }
    Rat delta() const { return t / mu() - 1; }
};

struct ChernoffBound {
    Real log_bound = 0; // natural log of the tail bound
    bool trivial = false; // delta <= 0: only the vacuous bound Pr <= 1
};

/// Natural log of the multiplicative Chernoff bound
/// (e^delta / (1+delta)^{1+delta})^mu = exp(mu (delta - (1+delta) ln(1+delta))).
inline ChernoffBound chernoff_tail_log(const ChernoffParams& params) {
    if (params.m < 1) throw PreconditionError("trial count must be positive");
    if (params.p < 0 || params.p > 1) throw PreconditionError("probability out of [0, 1]");
    if (params.p == 0) throw PreconditionError("zero success probability has an empty tail bound");
    const Rat delta = params.delta();
    if (delta <= 0) return {Real(0), true};
    const Real mu = to_real(params.mu());
    const Real d = to_real(delta);
    const Real one_plus = to_real(1 + delta); // exact in the rationals
    return {mu * (d - one_plus * log(one_plus)), false};
}

/// Exact rational Pr{B >= t} for binomial(m, p); the oracle side of the
/// Chernoff evaluator. Guarded to m <= 40 where the exact sum stays cheap.
inline Rat binomial_tail_exact(long long m, const Rat& p, long long t) {
    if (m < 0 || m > 40) throw PreconditionError("exact binomial tail supports 0 <= m <= 40");
    if (p < 0 || p > 1) throw PreconditionError("probability out of [0, 1]");
    if (t <= 0) return 1;
    if (t > m) return 0;
    const Rat q = 1 - p;
    Rat sum = 0;
    for (long long i = t; i <= m; ++i) {
        Int binom = 1;
        for (long long j = 0; j < i; ++j) binom = binom * Int(m - j) / Int(j + 1);
        Rat term(binom);
        for (long long j = 0; j < i; ++j) term *= p;
        for (long long j = 0; j < m - i; ++j) term *= q;
        sum += term;
    }
    return sum;
}

/// User-supplied constants for the slab calculators: the slab-size constant
/// c, the per-slab failure exponent constant alpha, and the encoding
/// constant `enc` scaling the default exponent function enc*h*n*log2(n)^2.
/// None of these are pinned by theory; reports echo them.
struct BoundConfig {
    Real c = 1;
    Real alpha = Real(1) / 100;
    Real enc = 1;
};

/// All logs base 2 except the probability chain, which is natural-log by
/// construction.
struct Lemma1Report {
    long long n = 0;
    long long k = 0; // floor(sqrt(c) * log2 n), at least 1
    long long m = 0; // floor(n / k)
    Real ck2 = 0;
    Real mu = 0;           // m * e^{-c k^2}
    Real delta = 0;        // e^{c k^2 - 1} - 1
    Real chain_log = 0;    // ln of the closed-form failure bound: m - m(ck^2-1)/e
    Real chain_log_factorwise = 0; // same quantity, evaluated factor by factor
    Real chernoff_log = 0; // ln of the plain Chernoff bound at (mu, delta)
    bool chernoff_trivial = false;
    Real obstacle_lower_bound = 0; // (alpha k / log2(k)^2) * (m / 2)
    bool lower_bound_degenerate = false; // k == 1 makes log2(k) vanish
};

/// Evaluates the slab-failure chain for n points with the given constants:
/// k consecutive points per vertical slab, m slabs, per-slab failure
/// probability e^{-c k^2}, and the probability that at least m/2 slabs fail
/// bounded through the binomial tail. Everything is carried in log space.
inline Lemma1Report lemma1_report(long long n, const BoundConfig& cfg) {
    if (n < 3) throw PreconditionError("slab report needs n >= 3");
    if (cfg.c <= 0 || cfg.alpha <= 0 || cfg.enc <= 0)
        throw PreconditionError("bound constants must be positive");
    Lemma1Report rep;
    rep.n = n;
    const Real k_real = sqrt(cfg.c) * log2_real(Real(n));
    rep.k = std::max<long long>(1, static_cast<long long>(floor(k_real)));
    rep.m = n / rep.k;
    rep.ck2 = cfg.c * Real(rep.k) * Real(rep.k);
    const Real e = exp(Real(1));
    rep.mu = Real(rep.m) * exp(-rep.ck2);
    rep.delta = exp(rep.ck2 - 1) - 1;

    const Real m_real(rep.m);
    rep.chain_log = m_real - m_real * (rep.ck2 - 1) / e;
    // The same bound assembled from its factors, exponentials evaluated
    // rather than cancelled: mu * e^{ck^2} - mu * e^{ck^2-1} * (ck^2 - 1).
    rep.chain_log_factorwise =
        rep.mu * exp(rep.ck2) - rep.mu * exp(rep.ck2 - 1) * (rep.ck2 - 1);

    // chernoff_tail_log is rational-facing; evaluate directly in Real here.
    if (rep.delta <= 0) {
        rep.chernoff_trivial = true;
    } else {
        rep.chernoff_log = rep.mu * (rep.delta - (1 + rep.delta) * log(1 + rep.delta));
    }

    if (rep.k <= 1) {
        rep.lower_bound_degenerate = true;
    } else {
        const Real logk = log2_real(Real(rep.k));
        rep.obstacle_lower_bound = cfg.alpha * Real(rep.k) / (logk * logk) * m_real / 2;
    }
    return rep;
}

/// Exponent function handle g(h, n); hhat needs it monotone nondecreasing
/// in h.
using ExponentFn = std::function<Real(long long h, long long n)>;

inline ExponentFn default_exponent(const BoundConfig& cfg) {
    return [enc = cfg.enc](long long h, long long n) {
        const Real l = log2_real(Real(n));
        return enc * Real(h) * Real(n) * l * l;
    };
}

struct HhatResult {
    long long h = 0;
    enum class Flag { ok, none, unbounded } flag = Flag::ok;
};

/// Largest h with g(h, n) <= n^2/4, by binary search over the monotone
/// handle. h = 0 flags that no h >= 1 qualifies; an exponent that never
/// crosses the budget flags as unbounded (degenerate).
inline HhatResult hhat(long long n, const ExponentFn& g) {
    if (n < 2) throw PreconditionError("hhat needs n >= 2");
    const Real budget = Real(n) * Real(n) / 4;
    if (g(1, n) > budget) return {0, HhatResult::Flag::none};
    constexpr long long cap = 1LL << 40;
    long long lo = 1, hi = 1;
    while (g(hi, n) <= budget) {
        if (hi >= cap) return {cap, HhatResult::Flag::unbounded};
        hi *= 2;
    }
    // g(lo) <= budget < g(hi)
    lo = hi / 2;
    while (lo + 1 < hi) {
        const long long mid = lo + (hi - lo) / 2;
        if (g(mid, n) <= budget)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, HhatResult::Flag::ok};
}

inline HhatResult hhat(long long n, const BoundConfig& cfg) {
    return hhat(n, default_exponent(cfg));
}

struct WnBound {
    Real value = 0;
    HhatResult::Flag flag = HhatResult::Flag::ok;
    long long hhat_arg = 0;
    long long hhat_value = 0;
};

/// The counting-based lower bound n * hhat(ceil(c log2 n)) / (c log2 n) on
/// the worst-case obstacle number. Vacuous (zero, flagged) while hhat of
/// the logarithmic argument is still zero.
inline WnBound wn_lower_bound(long long n, const BoundConfig& cfg, const ExponentFn& g) {
    if (n < 2) throw PreconditionError("wn_lower_bound needs n >= 2");
    const Real clogn = cfg.c * log2_real(Real(n));
    const long long arg = static_cast<long long>(ceil(clogn));
    if (arg < 2) throw PreconditionError("c log2 n must be at least 2");
    const HhatResult h = hhat(arg, g);
    WnBound out;
    out.hhat_arg = arg;
    out.hhat_value = h.h;
    out.flag = h.flag;
    out.value = Real(n) * Real(h.h) / clogn;
    return out;
}

inline WnBound wn_lower_bound(long long n, const BoundConfig& cfg) {
    return wn_lower_bound(n, cfg, default_exponent(cfg));
}

} // namespace obst
