#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "mont/quantum.hpp"

using namespace mont;

namespace {

LaurentPoly mono(long long c, long long e) { return LaurentPoly::monomial(BigInt(c), e); }

// Piecewise expansions used in the degree-theorem proof; test oracles only.
Rational head_piecewise(long long a, long long b, long long c, long long n) {
    if (a >= b && a >= c) return Rational(-a * a - 2 * a + 2 * (a + b + c + 2) * n - 2 * b * c, 2);
    if (b >= a && b >= c) return Rational(-b * b - 2 * b + 2 * (a + b + c + 2) * n - 2 * a * c, 2);
    return Rational(-c * c - 2 * c + 2 * (a + b + c + 2) * n - 2 * a * b, 2);
}

Rational chain_piecewise(long long a, long long b, long long n) {
    if (a + b >= 2 * n)
        return Rational(-a * a - 2 * a - 2 * b * b - 2 * a * b + 4 * a * n + 8 * b * n + 4 * n -
                            4 * n * n,
                        2);
    return Rational(-b * b + 2 * b + 4 * n * b, 2);
}

}  // namespace

TEST_CASE("quantum integers, factorials, multinomials") {
    CHECK(qint(0).is_zero());
    CHECK(qint(1) == LaurentPoly(BigInt(1)));
    CHECK(qint(2) == mono(1, 2) + mono(1, -2));
    CHECK(qfact(3) == mono(1, 6) + mono(2, 2) + mono(2, -2) + mono(1, -6));
    CHECK(qmultinomial({1, 1}) == qint(2));
    CHECK(qmultinomial({5, 0}) == LaurentPoly(BigInt(1)));
    CHECK(qbinomial(2, 1) == qint(2));
    CHECK(qbinomial(3, -1).is_zero());
    CHECK(qbinomial(3, 4).is_zero());
}

TEST_CASE("framing and unknot values") {
    CHECK(framing_f(2) == mono(-1, -4));
    CHECK(framing_f(0) == LaurentPoly(BigInt(1)));
    CHECK(unknot_value(2) == mono(1, 4) + mono(1, 0) + mono(1, -4));
    CHECK(unknot_value(0) == LaurentPoly(BigInt(1)));
    // odd color with an exponent multiple of 4 is legal: f(1)^4 = v^{-6}
    CHECK(framing_power(1, 4) == mono(1, -6));
    CHECK_THROWS_AS(framing_f(1), OddFraming);
    // inverse powers
    CHECK(framing_power(4, -3) * framing_power(4, 3) == LaurentPoly(BigInt(1)));
}

TEST_CASE("theta pinned values") {
    CHECK(theta(0, 0, 0) == LaurentPoly(BigInt(1)));
    CHECK(theta(2, 2, 2) == -(qint(4) * qint(3) * qint(2)));
    CHECK(theta(2, 0, 2) == qint(3));
    CHECK_THROWS_AS(theta(2, 0, 0), Inadmissible);
    CHECK_THROWS_AS(theta(1, 0, 0), Inadmissible);
}

TEST_CASE("theta is symmetric in its arguments") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long long> d(0, 8);
    int done = 0;
    while (done < 200) {
        long long a = d(rng), b = d(rng);
        long long lo = a > b ? a - b : b - a;
        std::uniform_int_distribution<long long> dc(0, (a + b - lo) / 2);
        long long c = lo + 2 * dc(rng);
        if (!is_admissible_triple(a, b, c)) continue;
        ++done;
        LaurentPoly ref = theta(a, b, c);
        CHECK(theta(a, c, b) == ref);
        CHECK(theta(b, a, c) == ref);
        CHECK(theta(b, c, a) == ref);
        CHECK(theta(c, a, b) == ref);
        CHECK(theta(c, b, a) == ref);
    }
}

TEST_CASE("6j-quotient pinned values") {
    CHECK(delta6j(0, 0, 0, 0, 0, 0) == LaurentPoly(BigInt(1)));
    CHECK(2 * delta6j(2, 2, 2, 2, 2, 2).max_degree() == d2_plus_delta(2, 2, 2, 2, 2, 2));
    CHECK(2 * delta6j(2, 2, 2, 2, 0, 2).max_degree() == d2_plus_delta(2, 2, 2, 2, 0, 2));
}

TEST_CASE("closed-form degree pins") {
    CHECK(d_plus_f(2) == Rational(-4));
    CHECK(d_plus_O(0) == Rational(0));
    CHECK(d_plus_theta(2, 2, 2) == Rational(12));
    CHECK(2 * theta(2, 2, 2).max_degree() == d2_plus_theta(2, 2, 2));
}

TEST_CASE("degree formulas equal attained degrees on random admissible inputs") {
    std::mt19937_64 rng(20240818);
    std::uniform_int_distribution<long long> d(0, 8);
    int theta_checked = 0;
    while (theta_checked < 200) {
        long long a = d(rng), b = d(rng), c = d(rng);
        if (!is_admissible_triple(a, b, c)) continue;
        ++theta_checked;
        CHECK(2 * theta(a, b, c).max_degree() == d2_plus_theta(a, b, c));
    }
    int delta_checked = 0, vanished = 0;
    while (delta_checked < 200) {
        long long a = d(rng), b = d(rng), c = d(rng);
        long long al = d(rng), be = d(rng), ga = d(rng);
        if (!is_admissible_triple(a, b, c) || !is_admissible_triple(a, be, ga) ||
            !is_admissible_triple(al, b, ga) || !is_admissible_triple(al, be, c))
            continue;
        ++delta_checked;
        LaurentPoly p = delta6j(a, b, c, al, be, ga);
        if (p.is_zero()) {
            ++vanished;  // recorded: Lemma-level formula presumes a nonzero sum
            continue;
        }
        CHECK(2 * p.max_degree() == d2_plus_delta(a, b, c, al, be, ga));
    }
    CHECK(vanished < delta_checked);  // the equality was actually exercised
}

TEST_CASE("proof piecewise expansions agree with the closed form, n <= 8") {
    for (long long n = 0; n <= 8; ++n)
        for (long long a = 0; a <= 2 * n; a += 2)
            for (long long b = 0; b <= 2 * n; b += 2) {
                CHECK(d_plus_delta(a, n, n, b, n, n) == chain_piecewise(a, b, n));
                for (long long c = 0; c <= 2 * n; c += 2)
                    if (is_admissible_triple(a, b, c))
                        CHECK(d_plus_delta(a, b, c, n, n, n) == head_piecewise(a, b, c, n));
            }
}
