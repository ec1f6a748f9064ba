#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsym/exprparse.hpp"
#include "qsym/symfunc.hpp"

using namespace qsym;

TEST_CASE("monomial symmetric polynomials enumerate orbits") {
    auto xs = letters(3);
    SymPoly m21 = SymPoly::monomial_sym(Partition{2, 1}, xs);
    CHECK(m21.size() == 6);
    SymPoly m111 = SymPoly::monomial_sym(Partition{1, 1, 1}, xs);
    CHECK(m111.size() == 1);
    CHECK(SymPoly::monomial_sym(Partition{1, 1, 1}, letters(2)).is_zero());
    CHECK(SymPoly::monomial_sym(Partition{}, xs) == SymPoly(RatFunc(1)));
}

TEST_CASE("power sums expand in the monomial basis") {
    auto xs = letters(2);
    SymPoly m1 = SymPoly::monomial_sym(Partition{1}, xs);
    SymPoly sq = m1 * m1;
    auto coeffs = monomial_coeffs(sq, xs);
    REQUIRE(coeffs.size() == 2);
    CHECK(coeffs.at(Partition{2}) == RatFunc(1));
    CHECK(coeffs.at(Partition{1, 1}) == RatFunc(2));
}

TEST_CASE("asymmetric inputs are rejected") {
    auto xs = letters(2);
    SymPoly lop = SymPoly::letter_power(xs[0], 2);
    CHECK_THROWS_AS(monomial_coeffs(lop, xs), std::logic_error);
    SymPoly skew = SymPoly::letter_power(xs[0], 1) +
                   SymPoly::letter_power(xs[1], 1).scale(RatFunc(2));
    CHECK_THROWS_AS(monomial_coeffs(skew, xs), std::logic_error);
    // symbol outside the alphabet
    SymPoly wide = SymPoly::letter_power(letters(3)[2], 1);
    CHECK_THROWS_AS(monomial_coeffs(wide, xs), std::invalid_argument);
}

TEST_CASE("evaluation substitutes every letter") {
    const auto& S = std_syms();
    auto xs = letters(2);
    SymPoly m11 = SymPoly::monomial_sym(Partition{1, 1}, xs);
    RatFunc t = RatFunc::variable(S.t);
    CHECK(eval_at(m11, {t, t * t}) == t.pow(3));
    SymPoly m1 = SymPoly::monomial_sym(Partition{1}, xs);
    CHECK(eval_at(m1, {RatFunc(1), t}) == RatFunc(1) + t);
    CHECK_THROWS_AS(m1.evaluate({}), std::invalid_argument);
}

TEST_CASE("ring operations and scaling") {
    const auto& S = std_syms();
    auto xs = letters(2);
    SymPoly a = SymPoly::monomial_sym(Partition{1}, xs);
    SymPoly b = SymPoly::monomial_sym(Partition{2}, xs);
    CHECK(a * b == b * a);
    CHECK((a + b) - b == a);
    CHECK((a - a).is_zero());
    RatFunc c = RatFunc::variable(S.q) / (RatFunc(1) - RatFunc::variable(S.t));
    CHECK(a.scale(c) + a.scale(RatFunc(0) - c) == SymPoly());
    CHECK(a.mul_letter(xs[0], 2).coeff(ExactPoly::variable(xs[0], 3).leading_mono()) ==
          RatFunc(1));
}

TEST_CASE("series conversion keeps coefficients") {
    auto xs = letters(2);
    SymPoly m2 = SymPoly::monomial_sym(Partition{2}, xs);
    TruncSeries s = m2.to_series(3);
    CHECK(s.coeff(ExactPoly::variable(xs[0], 2).leading_mono()) == RatFunc(1));
    CHECK(s.coeff(ExactPoly::variable(xs[1], 2).leading_mono()) == RatFunc(1));
    CHECK(s.coeff(Mono{}) == RatFunc(0));
    // cutoff below the degree truncates to zero
    CHECK(m2.to_series(1).is_zero());
}

TEST_CASE("expression parser round trips canonical text") {
    const auto& S = std_syms();
    RatFunc q = RatFunc::variable(S.q), t = RatFunc::variable(S.t);
    CHECK(parse_ratfunc("1+q") == RatFunc(1) + q);
    CHECK(parse_ratfunc("(1-q)/(q)") == (RatFunc(1) - q) / q);
    CHECK(parse_ratfunc("q^-2*t^-1+q^-1") == q.pow(-2) * t.pow(-1) + q.pow(-1));
    CHECK(parse_ratfunc("-a*b^2 + 3/2") ==
          RatFunc::fraction(3, 2) - RatFunc::variable(S.a) * RatFunc::variable(S.b).pow(2));
    CHECK(parse_ratfunc("2^10") == RatFunc(1024));
    CHECK_THROWS_AS(parse_ratfunc("1/(q-q)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ratfunc("q+"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ratfunc("q)"), std::invalid_argument);
    // round trip through to_string
    RatFunc r = (RatFunc(1) - q * t.pow(2)) / (q.pow(3) - t);
    CHECK(parse_ratfunc(r.to_string()) == r);
}
