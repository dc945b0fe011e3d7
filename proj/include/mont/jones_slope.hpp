#pragma once

#include "mont/colored_jones.hpp"
#include "mont/montesinos.hpp"

namespace mont {

/// d+J_K as a quasi-quadratic: evaluate(N) = a*N^2 + 2b*N + c[N mod period].
struct QuasiQuadratic {
    long long period = 1;
    Rational a, b;
    std::vector<Rational> c;

    Rational evaluate(long long N) const {
        return a * N * N + 2 * b * N + c[static_cast<size_t>(N % period)];
    }
};

/// Degree of one state-sum term (the Phi of the quadratic integer program),
/// assembled from the closed-form maximal degrees of the factors.
Rational phi(const MontesinosKnot& k, const ColorAssignment& asg);

struct MaxResult {
    Rational max;
    std::vector<ColorAssignment> argmax;
};

/// Exact maximum of Phi over all of D_n, with every maximizer retained.
MaxResult brute_force_max_phi(const MontesinosKnot& k, long long n,
                              unsigned long long max_assignments = 200'000'000);

/// Maximum of R(b0,c0) = Phi(b0+c0, b0, c0, 2n,...,2n) over the even lattice
/// points of the triangle {b0,c0 >= 0, b0+c0 <= 2n}.
MaxResult reduced_max_R(const MontesinosKnot& k, long long n);

/// Same restricted to the line b0+c0 = 2n (the Q(b0) scan).
MaxResult line_max_Q(const MontesinosKnot& k, long long n);

/// The closed-form quasi-quadratic for d+J_K, selected by the discriminant.
QuasiQuadratic closed_form_degree(const MontesinosKnot& k);

/// Odd integer nearest to x, ties resolved upward.
BigInt nearest_odd(const Rational& x);

/// True iff no two maximizers can cancel: their parity exponents all agree
/// mod 2.
bool cancellation_parity_check(const MontesinosKnot& k, const MaxResult& maxima);

inline bool check_b_nonpositive(const QuasiQuadratic& qq) { return qq.b <= 0; }

}  // namespace mont
