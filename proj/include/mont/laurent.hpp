#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "mont/rational.hpp"

namespace mont {

/// Laurent polynomial in one variable v with arbitrary-precision integer
/// coefficients. Canonical form: no zero coefficients are ever stored, so
/// equality is structural.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const BigInt& constant);
    static LaurentPoly monomial(const BigInt& coeff, long long exponent);

    bool is_zero() const { return terms_.empty(); }

    const std::map<long long, BigInt>& terms() const { return terms_; }

    BigInt coeff(long long exponent) const;

    // Largest/smallest exponent with nonzero coefficient; throws on zero.
    long long max_degree() const;
    long long min_degree() const;
    BigInt leading_coefficient() const;

    // Sum of coefficients, i.e. evaluation at v = 1.
    BigInt eval_at_one() const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);

    bool operator==(const LaurentPoly& o) const = default;

    /// Exact division in the Laurent ring; throws NonExactDivision when the
    /// remainder is nonzero (a broken quantum identity upstream).
    LaurentPoly exact_div(const LaurentPoly& divisor) const;

    // "c_k*v^k + ..." in descending exponent order; stable for golden files.
    std::string str() const;

private:
    void insert_term(long long exponent, const BigInt& coeff);

    std::map<long long, BigInt> terms_;
};

struct NonExactDivision : std::runtime_error {
    NonExactDivision() : std::runtime_error("Laurent division left a nonzero remainder") {}
};

struct DegreeOfZero : std::runtime_error {
    DegreeOfZero() : std::runtime_error("degree of the zero polynomial is undefined") {}
};

}  // namespace mont
