#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "mont/montesinos.hpp"

using namespace mont;

namespace {

ContinuedFraction cf(std::initializer_list<long long> xs) { return ContinuedFraction{xs}; }

FamilyErrorCode error_of(const ContinuedFraction& r, const ContinuedFraction& s,
                         const ContinuedFraction& t) {
    try {
        validate_family(r, s, t);
    } catch (const FamilyError& e) {
        return e.code;
    }
    throw std::logic_error("expected a FamilyError");
}

}  // namespace

TEST_CASE("continued fraction evaluation") {
    CHECK(eval_continued_fraction(cf({-2, -1})) == Rational(-1));
    CHECK(eval_continued_fraction(cf({2, -1})) == Rational(1, 3));
    CHECK(eval_continued_fraction(cf({-4, -1})) == Rational(-1, 3));
    CHECK(eval_continued_fraction(cf({-4, -2, -3})) == Rational(-5, 17));
    // positive denominator convention
    CHECK(rat_den(eval_continued_fraction(cf({-2, -1}))) == 1);
}

TEST_CASE("zero denominator reports the truncation depth") {
    // [5,1,1]: the partial 1 - 1/1 vanishes one level below the head.
    try {
        eval_continued_fraction(cf({5, 1, 1}));
        CHECK(false);
    } catch (const FamilyError& e) {
        CHECK(e.code == FamilyErrorCode::ZeroDenominator);
        CHECK(std::string(e.what()).find("depth") != std::string::npos);
    }
    // [1,1]: the full fraction itself is 1/0.
    CHECK_THROWS_AS(eval_continued_fraction(cf({1, 1})), FamilyError);
}

TEST_CASE("family validation populates the case data") {
    MontesinosKnot k = validate_family(cf({-4, -1}), cf({2, -1}), cf({2, -1}));
    CHECK(k.A == Rational(0));
    CHECK(k.B == Rational(2));
    CHECK(k.C == Rational(0));
    CHECK(k.disc == Rational(-4));
    CHECK(k.case_tag == CaseTag::NegDisc);
    CHECK(k.period == 2);
    CHECK(k.label() == "M([-4,-1],[2,-1],[2,-1])");

    MontesinosKnot k2 = validate_family(cf({-2, -1}), cf({2, -1}), cf({2, -1}));
    CHECK(k2.A == Rational(-1));
    CHECK(k2.B == Rational(0));
    CHECK(k2.C == Rational(-1));
    CHECK(k2.disc == Rational(4));
    CHECK(k2.case_tag == CaseTag::NonNegDisc);
    CHECK(k2.period == 1);
}

TEST_CASE("family validation rejections carry specific codes") {
    CHECK(error_of(cf({-3, -1}), cf({2, -1}), cf({2, -1})) == FamilyErrorCode::ParityViolation);
    CHECK(error_of(cf({-4}), cf({2, -1}), cf({2, -1})) == FamilyErrorCode::TooShort);
    CHECK(error_of(cf({-4, -1}), cf({-2, -1}), cf({2, -1})) == FamilyErrorCode::SignViolation);
    CHECK(error_of(cf({-4, -1}), cf({2, 1}), cf({2, -1})) == FamilyErrorCode::SignViolation);
    CHECK(error_of(cf({-4, 0}), cf({2, -1}), cf({2, -1})) == FamilyErrorCode::ZeroEntry);
    CHECK(error_of(cf({-4, -2}), cf({2, -1}), cf({2, -1})) == FamilyErrorCode::ParityViolation);
}

TEST_CASE("writhe and framing") {
    // F and writhe follow the displayed alternating-sign formulas; the
    // combined correction exponent -2F-2w = -4*sum_odd is the quantity
    // consumed downstream.
    MontesinosKnot k = validate_family(cf({-4, -1}), cf({2, -1}), cf({2, -1}));
    WritheFraming wf = writhe_and_framing(k);
    CHECK(wf.framing == -3);
    CHECK(wf.writhe == -3);
    CHECK(wf.correction_exponent == 12);

    MontesinosKnot k2 = validate_family(cf({-2, -1}), cf({2, -1}), cf({2, -1}));
    WritheFraming wf2 = writhe_and_framing(k2);
    CHECK(wf2.framing == -1);
    CHECK(wf2.writhe == -5);
    CHECK(wf2.correction_exponent == 12);
}

TEST_CASE("the two correction expressions agree on a spread of instances") {
    for (auto tails : {std::array<ContinuedFraction, 3>{cf({-4, -1}), cf({2, -1}), cf({2, -1})},
                       {cf({-6, -2, -3}), cf({4, -2, -1}), cf({2, -1})},
                       {cf({-2, -1}), cf({4, -2, -3}), cf({4, -1})}}) {
        MontesinosKnot k = validate_family(tails[0], tails[1], tails[2]);
        WritheFraming wf = writhe_and_framing(k);
        CHECK(wf.correction_exponent == -2 * wf.framing - 2 * wf.writhe);
        CHECK(wf.correction_exponent == -4 * k.sum_odd_index());
    }
}

TEST_CASE("index-parity sums and crossing count") {
    MontesinosKnot k = validate_family(cf({-4, -2, -3}), cf({2, -2, -1}), cf({4, -1}));
    CHECK(k.sum_odd_index() == -2 - 2 - 1);   // indices 1
    CHECK(k.sum_even_index() == -3 - 1);      // indices 2
    CHECK(k.sum_from_one() == k.sum_odd_index() + k.sum_even_index());
    CHECK(k.total_crossings() == 4 + 2 + 3 + 2 + 2 + 1 + 4 + 1);
}

TEST_CASE("tail parsing") {
    ContinuedFraction t = parse_tail("-4,-1");
    REQUIRE(t.entries.size() == 2);
    CHECK(t.entries[0] == -4);
    CHECK(t.entries[1] == -1);
    CHECK(parse_tail(" 2, -3 ").entries == std::vector<long long>{2, -3});
    CHECK_THROWS(parse_tail("2,,3"));
    CHECK_THROWS(parse_tail("abc"));
}
