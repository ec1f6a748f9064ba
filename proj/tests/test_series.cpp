#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsym/ratfunc.hpp"
#include "qsym/series.hpp"

using namespace qsym;

namespace {
RatFunc rv(Symbol s) { return RatFunc::variable(s); }
}  // namespace

TEST_CASE("series ring arithmetic respects the cutoff") {
    const auto& S = std_syms();
    int D = 4;
    TruncSeries x = TruncSeries::from_poly(ExactPoly::variable(S.x1), D);
    TruncSeries y = TruncSeries::from_poly(ExactPoly::variable(S.x2), D);
    TruncSeries one = TruncSeries::scalar(RatFunc(1), D);
    CHECK((x + y) * (x - y) == x * x - y * y);
    TruncSeries p = one + x;
    TruncSeries q5 = p * p * p * p * p;
    // binomial coefficients up to the cutoff
    CHECK(q5.coeff(Mono{}) == RatFunc(1));
    CHECK(q5.coeff(ExactPoly::variable(S.x1, 3).leading_mono()) == RatFunc(10));
    CHECK(q5.coeff(ExactPoly::variable(S.x1, 4).leading_mono()) == RatFunc(5));
}

TEST_CASE("geometric inversion round trip") {
    const auto& S = std_syms();
    int D = 6;
    TruncSeries one = TruncSeries::scalar(RatFunc(1), D);
    TruncSeries x = TruncSeries::from_poly(ExactPoly::variable(S.x1), D);
    TruncSeries g = (one - x).invert();
    // 1/(1-x) = sum x^k
    for (int k = 0; k <= D; ++k)
        CHECK(g.coeff(ExactPoly::variable(S.x1, k).leading_mono()) == RatFunc(1));
    CHECK(g * (one - x) == one);
    // inversion needs an invertible constant term
    CHECK_THROWS_AS(x.invert(), std::domain_error);
}

TEST_CASE("rational functions of letters expand correctly") {
    const auto& S = std_syms();
    int D = 5;
    RatFunc x = rv(S.x1), q = rv(S.q);
    RatFunc r = (RatFunc(1) + x) / (RatFunc(1) - q * x);
    TruncSeries s = TruncSeries::from_ratfunc(r, D);
    // coefficient of x^k is q^{k-1}(1+q) for k >= 1
    CHECK(s.coeff(Mono{}) == RatFunc(1));
    for (int k = 1; k <= D; ++k)
        CHECK(s.coeff(ExactPoly::variable(S.x1, k).leading_mono()) ==
              q.pow(k - 1) * (RatFunc(1) + q));
}

TEST_CASE("infinite q-shifted factorial as a series") {
    const auto& S = std_syms();
    RatFunc c = rv(S.c), q = rv(S.q);
    // (c x)_inf = 1 - c/(1-q) x + ... : coefficient of x^k is
    // (-1)^k q^{k(k-1)/2} c^k / (q)_k
    TruncSeries s = qpoch_inf_series(c, S.x1, 4);
    CHECK(s.coeff(Mono{}) == RatFunc(1));
    RatFunc m1 = RatFunc(0) - c / (RatFunc(1) - q);
    CHECK(s.coeff(ExactPoly::variable(S.x1, 1).leading_mono()) == m1);
    RatFunc m2 = q * c.pow(2) / ((RatFunc(1) - q) * (RatFunc(1) - q * q));
    CHECK(s.coeff(ExactPoly::variable(S.x1, 2).leading_mono()) == m2);
    // splitting: (z)_inf = (z)_k (z q^k)_inf with z = c x
    int D = 5, k = 2;
    TruncSeries full = qpoch_inf_series(c, S.x1, D);
    TruncSeries tail = qpoch_inf_series(c * q.pow(k), S.x1, D);
    TruncSeries head = TruncSeries::scalar(RatFunc(1), D);
    TruncSeries one = TruncSeries::scalar(RatFunc(1), D);
    TruncSeries xs = TruncSeries::from_poly(ExactPoly::variable(S.x1), D);
    for (int i = 0; i < k; ++i)
        head = head * (one - xs.scale(c * q.pow(i)));
    CHECK(full == head * tail);
}

TEST_CASE("product helper matches factorwise construction") {
    const auto& S = std_syms();
    int D = 3;
    RatFunc a = rv(S.a), b = rv(S.b);
    TruncSeries prod =
        poch_product_series({b}, {a}, {S.x1, S.x2}, D);
    TruncSeries byhand = TruncSeries::scalar(RatFunc(1), D);
    for (Symbol xi : {S.x1, S.x2})
        byhand = byhand * qpoch_inf_series(b, xi, D) *
                 qpoch_inf_series(a, xi, D).invert();
    CHECK(prod == byhand);
}

TEST_CASE("letter collapse implements principal substitution") {
    const auto& S = std_syms();
    int D = 3;
    RatFunc t = rv(S.t);
    // x1 -> w, x2 -> t w applied to (1+x1)(1+x2)
    TruncSeries one = TruncSeries::scalar(RatFunc(1), D);
    TruncSeries x1 = TruncSeries::from_poly(ExactPoly::variable(S.x1), D);
    TruncSeries x2 = TruncSeries::from_poly(ExactPoly::variable(S.x2), D);
    TruncSeries p = (one + x1) * (one + x2);
    TruncSeries got = p.collapse_letters(
        {{S.x1.id, RatFunc(1)}, {S.x2.id, t}}, S.w);
    TruncSeries w = TruncSeries::from_poly(ExactPoly::variable(S.w), D);
    TruncSeries want = (one + w) * (one + w.scale(t));
    CHECK(got == want);
}

TEST_CASE("difference reporting finds the first mismatch") {
    const auto& S = std_syms();
    int D = 4;
    TruncSeries a = TruncSeries::from_poly(ExactPoly::variable(S.x1), D);
    TruncSeries b = a;
    CHECK(!first_difference(a, b).has_value());
    TruncSeries c = a + TruncSeries::from_poly(ExactPoly::variable(S.x1, 3), D);
    auto diff = first_difference(a, c);
    REQUIRE(diff.has_value());
    CHECK(diff->mono == ExactPoly::variable(S.x1, 3).leading_mono());
    CHECK(diff->lhs == RatFunc(0));
    CHECK(diff->rhs == RatFunc(1));
}
