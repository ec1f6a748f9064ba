#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsym/partition.hpp"
#include "qsym/qfactors.hpp"
#include "qsym/ratfunc.hpp"

using namespace qsym;

TEST_CASE("partition basics and ordering") {
    Partition lam{3, 1};
    CHECK(lam.weight() == 4);
    CHECK(lam.length() == 2);
    CHECK(lam.part(1) == 3);
    CHECK(lam.part(5) == 0);
    CHECK(Partition{}.empty());
    CHECK(Partition::parse("2,1") == Partition{2, 1});
    CHECK(Partition::parse("0") == Partition{});
    CHECK(Partition::parse("") == Partition{});
    CHECK(Partition{2, 1}.to_string() == "2,1");
    CHECK(Partition{}.to_string() == "0");
    CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(std::vector<int>{-1}), std::invalid_argument);
    // order: weight ascending, ties lexicographic ascending on parts
    CHECK(Partition{1, 1, 1} < Partition{2, 1});
    CHECK(Partition{2, 1} < Partition{3});
    CHECK(Partition{1} < Partition{1, 1});
}

TEST_CASE("conjugation is an involution") {
    CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
    CHECK(Partition{}.conjugate() == Partition{});
    for (const auto& lam : partitions_upto(6, 6))
        CHECK(lam.conjugate().conjugate() == lam);
}

TEST_CASE("strip detection") {
    CHECK(horizontal_strip(Partition{3, 1}, Partition{2, 1}));
    CHECK(horizontal_strip(Partition{3, 1}, Partition{1}));
    CHECK(horizontal_strip(Partition{3, 1}, Partition{1, 1}));
    CHECK(!horizontal_strip(Partition{2, 2}, Partition{1, 1}));
    CHECK(!horizontal_strip(Partition{2, 2}, Partition{1}));
    CHECK(horizontal_strip(Partition{2, 2}, Partition{2, 1}));
    CHECK(vertical_strip(Partition{2, 1}, Partition{1, 1}));
    CHECK(!vertical_strip(Partition{3, 1}, Partition{1, 1}));
    // conjugate duality
    for (const auto& lam : partitions_upto(5, 5))
        for (const auto& mu : subdiagrams(lam))
            CHECK(horizontal_strip(lam, mu) ==
                  vertical_strip(lam.conjugate(), mu.conjugate()));
}

TEST_CASE("hook geometry") {
    HookStats h = hook_stats(Partition{2, 1}, 1, 1);
    CHECK(h.arm == 1);
    CHECK(h.coarm == 0);
    CHECK(h.leg == 1);
    CHECK(h.coleg == 0);
    HookStats h2 = hook_stats(Partition{2, 1}, 1, 2);
    CHECK(h2.arm == 0);
    CHECK(h2.leg == 0);
    CHECK(h2.coarm == 1);
    CHECK(h2.coleg == 0);
    CHECK_THROWS_AS(hook_stats(Partition{2, 1}, 2, 2), std::invalid_argument);
    CHECK(n_stat(Partition{2, 1}) == 1);
    CHECK(n_stat(Partition{1, 1, 1}) == 3);
    CHECK(n_stat(Partition{3}) == 0);
}

TEST_CASE("enumeration helpers") {
    auto ps = partitions_upto(2, 2);
    REQUIRE(ps.size() == 4);
    CHECK(ps[0] == Partition{});
    CHECK(ps[1] == Partition{1});
    CHECK(ps[2] == Partition{1, 1});
    CHECK(ps[3] == Partition{2});
    auto subs = subdiagrams(Partition{2, 1});
    REQUIRE(subs.size() == 5);  // 0, 1, 11, 2, 21
    CHECK(subs.front() == Partition{});
    CHECK(subs.back() == Partition{2, 1});
    auto preds = hstrip_predecessors(Partition{2, 1});
    REQUIRE(preds.size() == 4);
    CHECK(preds[0] == Partition{1});
    CHECK(preds[1] == Partition{1, 1});
    CHECK(preds[2] == Partition{2});
    CHECK(preds[3] == Partition{2, 1});
    auto orb = orbit_compositions(Partition{2, 1}, 3);
    CHECK(orb.size() == 6);
    CHECK(orbit_compositions(Partition{1, 1}, 1).empty());
    CHECK(orbit_compositions(Partition{}, 2).size() == 1);
}

TEST_CASE("generalized factorials agree across row and cell forms") {
    const auto& S = std_syms();
    RatFunc b = RatFunc::variable(S.b), q = RatFunc::variable(S.q),
            t = RatFunc::variable(S.t);
    Partition lam{2, 1};
    // rows: (b)_2 (b t^{-1})_1
    RatFunc want = (RatFunc(1) - b) * (RatFunc(1) - b * q) *
                   (RatFunc(1) - b / t);
    CHECK(gen_poch(b, lam) == want);
    for (const auto& p : partitions_upto(6, 4))
        CHECK(gen_poch(b, p) == gen_poch_cells(b, p));
    CHECK(gen_poch(b, Partition{}) == RatFunc(1));
    CHECK(gen_poch_list({b, q}, lam) == gen_poch(b, lam) * gen_poch(q, lam));
}

TEST_CASE("hook products and the arm leg statistics") {
    const auto& S = std_syms();
    RatFunc q = RatFunc::variable(S.q), t = RatFunc::variable(S.t);
    Partition two{2};
    CHECK(c_low(two) == (RatFunc(1) - t) * (RatFunc(1) - q * t));
    CHECK(c_prime(two) == (RatFunc(1) - q) * (RatFunc(1) - q * q));
    Partition one{1};
    CHECK(c_low(one) == RatFunc(1) - t);
    CHECK(c_prime(one) == RatFunc(1) - q);
    CHECK(b_ratio(one) == (RatFunc(1) - t) / (RatFunc(1) - q));
    CHECK(c_low(Partition{}) == RatFunc(1));
    // duality under conjugation with q,t swapped
    for (const auto& lam : partitions_upto(5, 5)) {
        RatFunc lhs = c_low(lam);
        RatFunc rhs = c_prime(lam.conjugate())
                          .substitute({{S.q.id, t}, {S.t.id, q}});
        CHECK(lhs == rhs);
    }
}

TEST_CASE("spectral vector sums") {
    // omega over n slots: sum q^{-lam_i} t^{i-n}
    ExactPoly om = omega(Partition{2, 1}, 2);
    ExactPoly q = ExactPoly::variable(std_syms().q, 1);
    ExactPoly want = ExactPoly::variable(std_syms().q, -2) *
                         ExactPoly::variable(std_syms().t, -1) +
                     ExactPoly::variable(std_syms().q, -1);
    CHECK(om == want);
    ExactPoly om0 = omega(Partition{}, 2);
    CHECK(om0 == ExactPoly::variable(std_syms().t, -1) + ExactPoly(1));
    CHECK_THROWS_AS(omega(Partition{1, 1, 1}, 2), std::invalid_argument);
}

TEST_CASE("skew cell products") {
    const auto& S = std_syms();
    ExactPoly t = ExactPoly::variable(S.t, 1);
    // cells of (1,1)/(1): single cell at row 2 with coarm 0, coleg 1
    ExactPoly got = one_poch_skew(Partition{1, 1}, Partition{1});
    CHECK(got == ExactPoly(1) - ExactPoly::variable(S.t, -1));
    CHECK(one_poch_skew(Partition{2, 1}, Partition{2, 1}).is_one());
    CHECK_THROWS_AS(one_poch_skew(Partition{1}, Partition{2}),
                    std::invalid_argument);
}
