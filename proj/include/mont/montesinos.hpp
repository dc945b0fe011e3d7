#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mont/rational.hpp"

namespace mont {

/// Tangle parameter [x0,...,xL] = 1/(x0 - 1/(x1 - ... - 1/xL)).
struct ContinuedFraction {
    std::vector<long long> entries;

    int last_index() const { return static_cast<int>(entries.size()) - 1; }
};

enum class FamilyErrorCode {
    TooShort,          // tail length < 2 (paper requires m,p,q >= 1)
    ZeroEntry,
    ParityViolation,   // C(1): last entry odd, all others even
    SignViolation,     // C(2): s0,t0 > 0, every other entry < 0
    OddOddViolation,   // tangle fraction must be odd/odd in lowest terms
    ZeroDenominator,   // partial continued fraction undefined
};

struct FamilyError : std::runtime_error {
    FamilyErrorCode code;
    FamilyError(FamilyErrorCode c, const std::string& what)
        : std::runtime_error(what), code(c) {}
};

enum class CaseTag { NegDisc, NonNegDisc };

struct MontesinosKnot {
    ContinuedFraction r, s, t;
    Rational fr, fs, ft;       // tangle fractions, reduced, denominator > 0
    Rational A, B, C;
    Rational disc;             // 4AC - B^2
    CaseTag case_tag;
    long long period;          // (s0+t0)/2 when disc<0, else 1

    long long r0() const { return r.entries[0]; }
    long long s0() const { return s.entries[0]; }
    long long t0() const { return t.entries[0]; }
    int m() const { return r.last_index(); }
    int p() const { return s.last_index(); }
    int q() const { return t.last_index(); }

    // Sums over positive even / positive odd indices, and over all indices >= 1,
    // across the three tails.
    long long sum_even_index() const;
    long long sum_odd_index() const;
    long long sum_from_one() const;

    long long total_crossings() const;
    std::string label() const;  // e.g. "M([-4,-1],[2,-1],[2,-1])"
};

/// Exact value of the nested fraction; throws FamilyError(ZeroDenominator)
/// naming the truncation depth when a partial denominator vanishes.
Rational eval_continued_fraction(const ContinuedFraction& cf);

/// Validates C(1)/C(2) and populates the family metadata.
MontesinosKnot validate_family(const ContinuedFraction& r, const ContinuedFraction& s,
                               const ContinuedFraction& t);

struct WritheFraming {
    long long framing;              // F(K), sum of all entries
    long long writhe;               // alternating-sign sum
    long long correction_exponent;  // -2F - 2w = -4 * sum_odd_index
};

WritheFraming writhe_and_framing(const MontesinosKnot& k);

// "-4,-1" -> {-4,-1}; used by the CLI and grid configs.
ContinuedFraction parse_tail(const std::string& text);

}  // namespace mont
