#pragma once

#include "mont/laurent.hpp"
#include "mont/montesinos.hpp"

namespace mont {

struct NotAKnot : std::runtime_error {
    explicit NotAKnot(int components)
        : std::runtime_error("diagram has " + std::to_string(components) + " components") {}
};

struct CrossingLimitExceeded : std::runtime_error {
    explicit CrossingLimitExceeded(long long crossings)
        : std::runtime_error("diagram has " + std::to_string(crossings) + " crossings") {}
};

struct BracketResult {
    LaurentPoly jones2;  // unnormalized 2-colored Jones polynomial, v = A^{-1}
    long long diagram_writhe;
    int components;
};

/// Builds the Montesinos diagram from the three twist-box tangles and
/// evaluates the Kauffman bracket by full 2^c state expansion, then applies
/// the writhe normalization and the [2] unknot factor.
BracketResult kauffman_oracle(const MontesinosKnot& k, long long crossing_limit = 16);

/// Component count of the diagram without evaluating the bracket.
int diagram_components(const MontesinosKnot& k);

}  // namespace mont
