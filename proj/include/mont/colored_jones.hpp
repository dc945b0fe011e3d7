#pragma once

#include <functional>
#include <optional>

#include "mont/laurent.hpp"
#include "mont/montesinos.hpp"

namespace mont {

/// One point of the state-sum domain D_n: even colors on the three tails,
/// with (a0, b0, c0) triangle-admissible.
struct ColorAssignment {
    std::vector<long long> a, b, c;
    long long n = 0;
};

struct BudgetExceeded : std::runtime_error {
    unsigned long long attempted;
    explicit BudgetExceeded(unsigned long long attempted_)
        : std::runtime_error("state-sum budget exceeded"), attempted(attempted_) {}
};

/// Number of points in D_n for the given tail lengths.
unsigned long long domain_size(const MontesinosKnot& k, long long n);

/// Visits D_n in lexicographic order (a-tail, then b, then c, each entry
/// ascending by steps of 2).
void enumerate_domain(const MontesinosKnot& k, long long n,
                      const std::function<void(const ColorAssignment&)>& visit);

struct StateSumOptions {
    unsigned long long max_assignments = 2'000'000;
    // Evaluating in fixed-size blocks and merging must not change the result;
    // exposed so tests can assert partition independence.
    unsigned long long block_size = 0;  // 0 = single block
};

/// Exact J_K(n+1) by the state sum over D_n. Individual summands are
/// rational functions; the sum is brought over a common theta-denominator
/// and cleared with one exact division (the total is always Laurent).
LaurentPoly state_sum(const MontesinosKnot& k, long long n, const StateSumOptions& opts = {});

}  // namespace mont
