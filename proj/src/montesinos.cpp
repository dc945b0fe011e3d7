#include "mont/montesinos.hpp"

#include <sstream>

namespace mont {

Rational eval_continued_fraction(const ContinuedFraction& cf) {
    if (cf.entries.empty()) return 0;
    // Innermost first: x_L, then x_i - 1/prev.
    Rational acc = cf.entries.back();
    for (int i = static_cast<int>(cf.entries.size()) - 2; i >= 0; --i) {
        if (acc == 0)
            throw FamilyError(FamilyErrorCode::ZeroDenominator,
                              "zero partial denominator at truncation depth " + std::to_string(i + 1));
        acc = Rational(cf.entries[i]) - Rational(1) / acc;
    }
    if (acc == 0)
        throw FamilyError(FamilyErrorCode::ZeroDenominator, "tangle fraction undefined (1/0)");
    return Rational(1) / acc;
}

namespace {

void check_tail(const ContinuedFraction& cf, bool head_positive, const char* name) {
    const auto& e = cf.entries;
    if (e.size() < 2)
        throw FamilyError(FamilyErrorCode::TooShort,
                          std::string(name) + ": tail needs at least 2 entries");
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] == 0)
            throw FamilyError(FamilyErrorCode::ZeroEntry,
                              std::string(name) + ": zero entry at index " + std::to_string(i));
    // C(1): last entry odd, all earlier entries even.
    for (size_t i = 0; i + 1 < e.size(); ++i)
        if (e[i] % 2 != 0)
            throw FamilyError(FamilyErrorCode::ParityViolation,
                              std::string(name) + ": entry " + std::to_string(i) + " must be even");
    if (e.back() % 2 == 0)
        throw FamilyError(FamilyErrorCode::ParityViolation,
                          std::string(name) + ": last entry must be odd");
    // C(2): head sign per string, everything else negative.
    if (head_positive ? e[0] <= 0 : e[0] >= 0)
        throw FamilyError(FamilyErrorCode::SignViolation,
                          std::string(name) + ": leading entry has the wrong sign");
    for (size_t i = 1; i < e.size(); ++i)
        if (e[i] >= 0)
            throw FamilyError(FamilyErrorCode::SignViolation,
                              std::string(name) + ": entry " + std::to_string(i) + " must be negative");
    Rational f = eval_continued_fraction(cf);
    if (rat_num(f) % 2 == 0 || rat_den(f) % 2 == 0)
        throw FamilyError(FamilyErrorCode::OddOddViolation,
                          std::string(name) + ": tangle fraction is not odd/odd");
}

long long tail_sum(const ContinuedFraction& cf, int parity) {
    // parity 0: positive even indices; 1: odd indices; -1: all indices >= 1
    long long s = 0;
    for (size_t i = 1; i < cf.entries.size(); ++i)
        if (parity < 0 || static_cast<int>(i % 2) == parity) s += cf.entries[i];
    return s;
}

}  // namespace

long long MontesinosKnot::sum_even_index() const {
    return tail_sum(r, 0) + tail_sum(s, 0) + tail_sum(t, 0);
}
long long MontesinosKnot::sum_odd_index() const {
    return tail_sum(r, 1) + tail_sum(s, 1) + tail_sum(t, 1);
}
long long MontesinosKnot::sum_from_one() const {
    return tail_sum(r, -1) + tail_sum(s, -1) + tail_sum(t, -1);
}

long long MontesinosKnot::total_crossings() const {
    long long c = 0;
    for (const auto* cf : {&r, &s, &t})
        for (long long x : cf->entries) c += x < 0 ? -x : x;
    return c;
}

std::string MontesinosKnot::label() const {
    std::ostringstream os;
    os << "M(";
    for (int which = 0; which < 3; ++which) {
        const auto& e = (which == 0 ? r : which == 1 ? s : t).entries;
        os << "[";
        for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
        os << "]" << (which < 2 ? "," : "");
    }
    os << ")";
    return os.str();
}

MontesinosKnot validate_family(const ContinuedFraction& r, const ContinuedFraction& s,
                               const ContinuedFraction& t) {
    check_tail(r, false, "r");
    check_tail(s, true, "s");
    check_tail(t, true, "t");

    MontesinosKnot k;
    k.r = r;
    k.s = s;
    k.t = t;
    k.fr = eval_continued_fraction(r);
    k.fs = eval_continued_fraction(s);
    k.ft = eval_continued_fraction(t);
    const long long r0 = r.entries[0], s0 = s.entries[0], t0 = t.entries[0];
    k.A = Rational(-(r0 + s0 + 2), 2);
    k.B = Rational(-(r0 + 2));
    k.C = Rational(-(r0 + t0 + 2), 2);
    k.disc = 4 * k.A * k.C - k.B * k.B;
    k.case_tag = k.disc < 0 ? CaseTag::NegDisc : CaseTag::NonNegDisc;
    k.period = k.case_tag == CaseTag::NegDisc ? (s0 + t0) / 2 : 1;
    return k;
}

WritheFraming writhe_and_framing(const MontesinosKnot& k) {
    WritheFraming wf{0, 0, 0};
    long long odd_sum = 0;
    for (const auto* cf : {&k.r, &k.s, &k.t}) {
        for (size_t i = 0; i < cf->entries.size(); ++i) {
            wf.framing += cf->entries[i];
            wf.writhe += (i % 2 == 0 ? -1 : 1) * cf->entries[i];
            if (i % 2 == 1) odd_sum += cf->entries[i];
        }
    }
    wf.correction_exponent = -4 * odd_sum;
    if (wf.correction_exponent != -2 * wf.framing - 2 * wf.writhe)
        throw std::logic_error("framing correction identity violated");
    return wf;
}

ContinuedFraction parse_tail(const std::string& text) {
    ContinuedFraction cf;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.find_first_not_of(" \t") == std::string::npos)
            throw std::invalid_argument("empty entry in tail: '" + text + "'");
        cf.entries.push_back(std::stoll(tok));
    }
    return cf;
}

}  // namespace mont
