#include <catch2/catch_amalgamated.hpp>

#include "obst/bounds.hpp"

using namespace obst;

TEST_CASE("exact binomial tail") {
    CHECK(binomial_tail_exact(10, Rat(1, 2), 0) == 1);
    CHECK(binomial_tail_exact(10, Rat(1, 2), 11) == 0);
    // Direct summation of C(10,i)/2^10 for i = 5..10.
    CHECK(binomial_tail_exact(10, Rat(1, 2), 5) == Rat(319, 512));
    CHECK_THROWS_AS(binomial_tail_exact(41, Rat(1, 2), 3), PreconditionError);
}

TEST_CASE("chernoff bound upper-bounds the exact tail") {
    for (long long m = 1; m <= 30; ++m) {
        for (const Rat& p : {Rat(1, 4), Rat(1, 2), Rat(3, 4)}) {
            const Rat mu = Rat(m) * p;
            for (long long t = 1; t <= m; ++t) {
                if (Rat(t) <= mu) continue; // delta <= 0: bound degenerates
                const ChernoffBound bound = chernoff_tail_log({m, p, Rat(t)});
                REQUIRE_FALSE(bound.trivial);
                const Rat tail = binomial_tail_exact(m, p, t);
                REQUIRE(tail > 0);
                CHECK(bound.log_bound >= log(to_real(tail)));
            }
        }
    }
}

TEST_CASE("chernoff degenerates gracefully at delta <= 0") {
    const ChernoffBound bound = chernoff_tail_log({30, Rat(1, 2), Rat(10)});
    CHECK(bound.trivial);
    CHECK(bound.log_bound == 0);
}

TEST_CASE("doubling the trial count doubles the log bound at fixed delta") {
    const ChernoffBound one = chernoff_tail_log({30, Rat(1, 2), Rat(25)});
    const ChernoffBound two = chernoff_tail_log({60, Rat(1, 2), Rat(50)});
    CHECK(abs(two.log_bound - 2 * one.log_bound) < Real(1e-30));
}

TEST_CASE("slab chain report") {
    BoundConfig cfg;
    const Lemma1Report rep = lemma1_report(1000000, cfg);
    CHECK(rep.k == 19);
    CHECK(rep.m == 52631);
    // The closed form and the factor-by-factor evaluation agree to well
    // below 1e-9 relative.
    const Real rel = abs(rep.chain_log - rep.chain_log_factorwise) / abs(rep.chain_log);
    CHECK(rel < Real("1e-9"));
    // The plain Chernoff bound at (mu, delta) is at least as strong.
    CHECK(rep.chernoff_log <= rep.chain_log);
}

TEST_CASE("slab chain dual-path agreement across a sweep") {
    for (const double c : {0.5, 1.0, 2.0}) {
        BoundConfig cfg;
        cfg.c = c;
        for (long long n = 1000; n <= 1000000000; n *= 10) {
            const Lemma1Report rep = lemma1_report(n, cfg);
            if (rep.chain_log == 0) continue;
            const Real rel =
                abs(rep.chain_log - rep.chain_log_factorwise) / abs(rep.chain_log);
            CHECK(rel < Real("1e-9"));
        }
    }
}

TEST_CASE("hhat closed form with the default exponent") {
    BoundConfig cfg; // enc = 1
    // n = 256: floor(256 / (4 * 8^2)) = 1.
    CHECK(hhat(256, cfg).h == 1);
    for (int e = 8; e <= 20; ++e) {
        const long long n = 1LL << e;
        const long long expected = n / (4LL * e * e);
        const HhatResult h = hhat(n, cfg);
        CHECK(h.h == expected);
        if (expected >= 1) CHECK(h.flag == HhatResult::Flag::ok);
    }
}

TEST_CASE("hhat flags the degenerate exponent") {
    const ExponentFn zero = [](long long, long long) { return Real(0); };
    CHECK(hhat(100, zero).flag == HhatResult::Flag::unbounded);
}

TEST_CASE("hhat monotonicity") {
    BoundConfig enc1, enc2;
    enc2.enc = 2;
    long long prev = 0;
    for (int e = 8; e <= 24; ++e) {
        const long long n = 1LL << e;
        const long long h1 = hhat(n, enc1).h;
        const long long h2 = hhat(n, enc2).h;
        CHECK(h2 <= h1);            // nonincreasing in enc
        CHECK(h1 >= prev);          // nondecreasing in n
        prev = h1;
    }
    // Unbounded growth for the default exponent.
    CHECK(hhat(1LL << 30, enc1).h > hhat(1LL << 12, enc1).h);
}

TEST_CASE("wn lower bound with a large slab constant stays in its bracket") {
    BoundConfig cfg;
    cfg.c = 64;
    for (int e = 10; e <= 30; ++e) {
        const long long n = 1LL << e;
        const WnBound wn = wn_lower_bound(n, cfg);
        const Real loglog = log2_real(Real(e));
        const Real reference = Real(n) / (loglog * loglog);
        const Real ratio = wn.value / reference;
        CHECK(ratio >= Real(1) / 64);
        CHECK(ratio <= Real(64));
    }
}

TEST_CASE("wn lower bound is vacuous while hhat of the log argument is zero") {
    BoundConfig cfg; // c = 1: hhat(log2 n) = 0 throughout this range
    const WnBound wn = wn_lower_bound(1 << 20, cfg);
    CHECK(wn.flag == HhatResult::Flag::none);
    CHECK(wn.value == 0);
}

TEST_CASE("doubling enc halves the default hhat up to floors") {
    BoundConfig one, two;
    two.enc = 2;
    for (int e = 10; e <= 20; ++e) {
        const long long n = 1LL << e;
        const long long h1 = hhat(n, one).h;
        const long long h2 = hhat(n, two).h;
        CHECK(h2 <= h1 / 2 + 1);
        CHECK(h2 >= h1 / 2 - 1);
    }
}
