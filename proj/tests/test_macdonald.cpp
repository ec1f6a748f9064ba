#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "qsym/macdonald.hpp"
#include "qsym/qfactors.hpp"

using namespace qsym;

namespace {
RatFunc qv() { return RatFunc::variable(std_syms().q); }
RatFunc tv() { return RatFunc::variable(std_syms().t); }
RatFunc one() { return RatFunc(1); }
}  // namespace

TEST_CASE("row insertion coefficients on small strips") {
    RatFunc q = qv(), t = tv();
    CHECK(psi_coeff(Partition{2}, Partition{1}) ==
          (one() - t) * (one() - q * q) / ((one() - q) * (one() - q * t)));
    CHECK(psi_coeff(Partition{1, 1}, Partition{1}) == one());
    CHECK(psi_coeff(Partition{2, 1}, Partition{1}) == one());
    CHECK(psi_coeff(Partition{2, 1}, Partition{2}) == one());
    CHECK(psi_coeff(Partition{1}, Partition{}) == one());
    CHECK(psi_coeff(Partition{2, 2}, Partition{2}) == one());
    // not a horizontal strip
    CHECK(psi_coeff(Partition{2, 2}, Partition{1}).is_zero());
    CHECK(psi_coeff(Partition{1}, Partition{2}).is_zero());
}

TEST_CASE("column insertion coefficients") {
    RatFunc q = qv(), t = tv();
    CHECK(psi_prime_coeff(Partition{1, 1}, Partition{1}) ==
          (one() - q) * (one() - t * t) / ((one() - t) * (one() - q * t)));
    CHECK(psi_prime_coeff(Partition{2}, Partition{1}) == one());
    CHECK(psi_prime_coeff(Partition{2}, Partition{}).is_zero());
    // conjugate duality on a sweep of vertical strips
    for (const auto& lam : partitions_upto(5, 4))
        for (const auto& mu : subdiagrams(lam)) {
            if (!vertical_strip(lam, mu)) continue;
            RatFunc lhs = psi_prime_coeff(lam, mu);
            RatFunc rhs = psi_coeff(lam.conjugate(), mu.conjugate())
                              .substitute({{std_syms().q.id, tv()},
                                           {std_syms().t.id, qv()}});
            CHECK(lhs == rhs);
        }
}

TEST_CASE("hook weighted coefficients") {
    RatFunc q = qv(), t = tv();
    CHECK(phi_coeff(Partition{1}, Partition{}) == (one() - t) / (one() - q));
    CHECK(phi_coeff(Partition{2}, Partition{1}) ==
          b_ratio(Partition{2}) / b_ratio(Partition{1}) *
              psi_coeff(Partition{2}, Partition{1}));
}

TEST_CASE("small polynomials in the monomial basis") {
    RatFunc q = qv(), t = tv();
    auto xs = letters(2);
    auto p2 = monomial_coeffs(macdonald_P(Partition{2}, 2), xs);
    CHECK(p2.at(Partition{2}) == one());
    CHECK(p2.at(Partition{1, 1}) ==
          (one() + q) * (one() - t) / (one() - q * t));
    CHECK(macdonald_P(Partition{1, 1}, 2) ==
          SymPoly::monomial_sym(Partition{1, 1}, xs));
    CHECK(macdonald_P(Partition{2, 1}, 2) ==
          SymPoly::monomial_sym(Partition{2, 1}, xs));
    CHECK(macdonald_P(Partition{1, 1, 1}, 2).is_zero());
    CHECK(macdonald_P(Partition{}, 2) == SymPoly(one()));
}

TEST_CASE("branching output is symmetric") {
    for (int n = 1; n <= 3; ++n) {
        auto xs = letters(n);
        for (const auto& lam : partitions_upto(4, n)) {
            auto coeffs = monomial_coeffs(macdonald_P(lam, n), xs);
            CHECK(coeffs.count(lam) == 1);
            CHECK(coeffs.at(lam) == one());
        }
    }
}

TEST_CASE("skew polynomials specialize the branching rule") {
    for (const auto& lam : partitions_upto(4, 3)) {
        for (const auto& mu : subdiagrams(lam)) {
            SymPoly s = skew_P(lam, mu, 1);
            if (!horizontal_strip(lam, mu)) {
                CHECK(s.is_zero());
                continue;
            }
            SymPoly want = SymPoly::letter_power(letters(1)[0],
                                                 lam.weight() - mu.weight())
                               .scale(psi_coeff(lam, mu));
            CHECK(s == want);
        }
    }
}

TEST_CASE("schur reduction at t equals q") {
    const auto& S = std_syms();
    for (int n = 1; n <= 3; ++n) {
        auto xs = letters(n);
        for (const auto& lam : partitions_upto(4, n)) {
            auto mac = monomial_coeffs(macdonald_P(lam, n), xs);
            auto sch = monomial_coeffs(schur_poly(lam, n), xs);
            REQUIRE(mac.size() == sch.size());
            for (const auto& [shape, c] : mac)
                CHECK(c.substitute(S.t, qv()) == sch.at(shape));
        }
    }
}

TEST_CASE("principal specialization closed form") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& lam : partitions_upto(4, n))
            CHECK(eval_at(macdonald_P(lam, n), principal_point(n)) ==
                  principal_P(lam, n));
    RatFunc t = tv();
    CHECK(principal_P(Partition{1}, 2) == one() + t);
    CHECK(principal_P(Partition{1, 1, 1}, 2).is_zero());
}

TEST_CASE("P basis expansion inverts products") {
    int n = 3;
    SymPoly prod = macdonald_P(Partition{1}, n) * macdonald_P(Partition{1}, n);
    auto coeffs = to_P_basis(prod, n);
    REQUIRE(coeffs.size() == 2);
    CHECK(coeffs.at(Partition{2}) == one());
    CHECK(coeffs.at(Partition{1, 1}) ==
          (one() - qv()) * (one() + tv()) / (one() - qv() * tv()));
    // reconstruct and compare
    SymPoly back;
    for (const auto& [lam, c] : coeffs) back += macdonald_P(lam, n).scale(c);
    CHECK(back == prod);
    CHECK_THROWS_AS(to_P_basis(SymPoly::letter_power(letters(n)[0], 1), n),
                    std::logic_error);
}

TEST_CASE("structure constants are symmetric and supported on containment") {
    auto f = structure_constants(Partition{1}, Partition{1});
    CHECK(f.at(Partition{2}) == one());
    CHECK(f.at(Partition{1, 1}) ==
          (one() - qv()) * (one() + tv()) / (one() - qv() * tv()));
    auto g = structure_constants(Partition{2}, Partition{1});
    auto h = structure_constants(Partition{1}, Partition{2});
    CHECK(g.size() == h.size());
    for (const auto& [lam, c] : g) {
        CHECK(lam.contains(Partition{2}));
        CHECK(lam.contains(Partition{1}));
        CHECK(h.at(lam) == c);
    }
    CHECK(struct_norm(Partition{1, 1}, Partition{1}, Partition{1}) ==
          (one() + tv()) / tv());
}

TEST_CASE("difference alphabet evaluation of skew Q") {
    const auto& S = std_syms();
    RatFunc a = RatFunc::variable(S.a), b = RatFunc::variable(S.b);
    CHECK(skewQ_diff(Partition{1}, Partition{}, a, b) == a - b);
    CHECK(skewQ_diff(Partition{1, 1}, Partition{1}, a, b) ==
          (a - b) * (one() + tv()) / tv());
    CHECK(skewQ_diff(Partition{2}, Partition{2}, a, b) == one());
    CHECK(skewQ_diff(Partition{1}, Partition{2}, a, b).is_zero());
    // one-parameter shifted factorial: lam over the empty shape at (1, a)
    for (const auto& lam : partitions_upto(4, 4))
        CHECK(skewQ_diff(lam, Partition{}, one(), a) == gen_poch_cells(a, lam));
}

TEST_CASE("generalized binomial coefficients across routes") {
    const auto& S = std_syms();
    RatFunc q = qv(), t = tv();
    CHECK(qbinom(Partition{2}, Partition{1}) == one() + q);
    CHECK(qbinom(Partition{1}, Partition{}) == one());
    CHECK(qbinom(Partition{1, 1}, Partition{1}) == (one() + t) / t);
    CHECK(qbinom_tq(Partition{1, 1}, Partition{1}) == (one() + q) / q);
    for (const auto& lam : partitions_upto(4, 4)) {
        for (const auto& mu : subdiagrams(lam)) {
            RatFunc base = qbinom(lam, mu);
            CHECK(base == qbinom_rec(lam, mu, lam.length()));
            CHECK(base.substitute(S.t, q) == qbinom_tq(lam, mu));
            CHECK(base.substitute(S.t, one()) == qbinom_t1(lam, mu));
        }
    }
}

TEST_CASE("spectral recursion does not depend on the alphabet size") {
    for (const auto& lam : partitions_upto(4, 3)) {
        for (const auto& mu : subdiagrams(lam)) {
            int l = lam.length();
            RatFunc a = qbinom_rec(lam, mu, l);
            CHECK(a == qbinom_rec(lam, mu, l + 1));
            CHECK(a == qbinom_rec(lam, mu, l + 2));
        }
    }
}

TEST_CASE("classical coefficients satisfy the Pascal rule") {
    RatFunc q = qv();
    CHECK(classical_qbinom(4, 2) ==
          (one() + q * q) * (one() + q + q * q));
    CHECK(classical_qbinom(3, 0) == one());
    CHECK(classical_qbinom(2, 3).is_zero());
    CHECK(classical_qbinom(2, -1).is_zero());
    for (int m = 1; m <= 6; ++m)
        for (int k = 0; k <= m; ++k)
            CHECK(classical_qbinom(m, k) ==
                  classical_qbinom(m - 1, k - 1) +
                      q.pow(k) * classical_qbinom(m - 1, k));
}

TEST_CASE("structure cache persists across reloads") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "qsym-cache-test";
    fs::remove_all(dir);
    struct_cache_set_dir(dir.string());
    struct_cache_clear();
    auto before = structure_constants(Partition{2}, Partition{1});
    CHECK(struct_cache_stats().pairs >= 1);
    CHECK(struct_cache_stats().persistent);
    // reload from disk and compare
    struct_cache_set_dir(dir.string());
    CHECK(struct_cache_stats().pairs >= 1);
    auto after = structure_constants(Partition{2}, Partition{1});
    REQUIRE(after.size() == before.size());
    for (const auto& [lam, c] : before) CHECK(after.at(lam) == c);
    struct_cache_clear();
    CHECK(struct_cache_stats().pairs == 0);
    struct_cache_set_dir("");
    fs::remove_all(dir);
}
