#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace mont {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return rat_den(r) == 1; }

inline BigInt as_integer(const Rational& r) {
    if (!is_integer(r)) throw std::logic_error("expected integral rational: " + r.str());
    return rat_num(r);
}

// p/q with the sign moved to the numerator (cpp_rational rejects q < 0).
inline Rational make_rational(long long num, long long den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

// Largest integer <= r.
inline BigInt rfloor(const Rational& r) {
    BigInt n = rat_num(r), d = rat_den(r);
    BigInt q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

// Serialized as "p/q", or just "p" when integral.
inline std::string rat_str(const Rational& r) {
    if (is_integer(r)) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

}  // namespace mont
