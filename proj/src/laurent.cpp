#include "mont/laurent.hpp"

#include <sstream>

namespace mont {

LaurentPoly::LaurentPoly(const BigInt& constant) {
    if (constant != 0) terms_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(const BigInt& coeff, long long exponent) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[exponent] = coeff;
    return p;
}

BigInt LaurentPoly::coeff(long long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
}

long long LaurentPoly::max_degree() const {
    if (terms_.empty()) throw DegreeOfZero();
    return terms_.rbegin()->first;
}

long long LaurentPoly::min_degree() const {
    if (terms_.empty()) throw DegreeOfZero();
    return terms_.begin()->first;
}

BigInt LaurentPoly::leading_coefficient() const {
    if (terms_.empty()) throw DegreeOfZero();
    return terms_.rbegin()->second;
}

BigInt LaurentPoly::eval_at_one() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

void LaurentPoly::insert_term(long long exponent, const BigInt& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) insert_term(e, c);
    return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.insert_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.insert_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (is_zero()) return {};
    // Long division from the top; exponents may go negative freely in the
    // Laurent ring, so only exact coefficient division can fail.
    LaurentPoly rem = *this;
    LaurentPoly quot;
    const long long dd = divisor.max_degree();
    const BigInt dl = divisor.leading_coefficient();
    // Any exact quotient has exponents within these bounds.
    const long long e_low = min_degree() - divisor.min_degree();
    while (!rem.is_zero()) {
        const long long e = rem.max_degree() - dd;
        const BigInt c = rem.leading_coefficient();
        if (e < e_low || c % dl != 0) throw NonExactDivision();
        LaurentPoly m = monomial(c / dl, e);
        quot += m;
        rem = rem - m * divisor;
    }
    return quot;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        BigInt a = abs(c);
        if (e == 0) {
            os << a.str();
        } else {
            if (a != 1) os << a.str() << "*";
            os << "v^" << e;
        }
    }
    return os.str();
}

}  // namespace mont
