#pragma once

#include <stdexcept>
#include <vector>

#include "mont/laurent.hpp"

namespace mont {

/// Skein-theoretic building blocks: quantum integers/factorials/multinomials,
/// the colored-unknot value O^k, the framing change f, the theta value and the
/// 6j-quotient, plus their closed-form maximal degrees.

struct Inadmissible : std::runtime_error {
    Inadmissible() : std::runtime_error("inadmissible color triple") {}
};
struct OddFraming : std::runtime_error {
    OddFraming() : std::runtime_error("framing power is not a +-1-signed Laurent monomial") {}
};

// a+b+c even and triangle inequalities.
bool is_admissible_triple(long long a, long long b, long long c);

// [k] = (v^{2k} - v^{-2k}) / (v^2 - v^{-2})
LaurentPoly qint(long long k);
LaurentPoly qfact(long long k);
LaurentPoly qmultinomial(const std::vector<long long>& parts);
// [n; k] = [n]! / ([k]![n-k]!), zero when k is outside [0, n].
LaurentPoly qbinomial(long long n, long long k);

/// f(a)^w as a signed monomial; requires a*w = 0 mod 2 (real sign) and the
/// v-exponent -w*a*(a+2)/2 integral.
LaurentPoly framing_power(long long a, long long w);
inline LaurentPoly framing_f(long long a) { return framing_power(a, 1); }

// O^k = (-1)^k [k+1]
LaurentPoly unknot_value(long long k);

LaurentPoly theta(long long a, long long b, long long c);

/// The quotient of the 6j-symbol by theta: alternating z-sum over exactly the
/// integers keeping all four quantum binomials supported. Empty range -> 0.
LaurentPoly delta6j(long long a, long long b, long long c, long long alpha, long long beta,
                    long long gamma);

// Closed-form maximal degrees (Lemma-level identities, checked in tests
// against the actual polynomials). Doubled-value integer forms are provided
// for the hot path of the degree maximization.
long long d2_plus_f(long long a);                              // 2*d+f = -a(a+2)
long long d2_plus_O(long long a);                              // 2*d+O = 4a
long long d2_plus_theta(long long a, long long b, long long c);
long long d2_plus_delta(long long a, long long b, long long c, long long alpha, long long beta,
                        long long gamma);

inline Rational d_plus_f(long long a) { return Rational(d2_plus_f(a), 2); }
inline Rational d_plus_O(long long a) { return Rational(d2_plus_O(a), 2); }
inline Rational d_plus_theta(long long a, long long b, long long c) {
    return Rational(d2_plus_theta(a, b, c), 2);
}
inline Rational d_plus_delta(long long a, long long b, long long c, long long alpha,
                             long long beta, long long gamma) {
    return Rational(d2_plus_delta(a, b, c, alpha, beta, gamma), 2);
}

}  // namespace mont
