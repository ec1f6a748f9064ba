/**
 * @file qfactors.hpp
 * Partition-indexed scalar factors over the (q, t) coefficient ring:
 * generalized shifted factorials, the c / c' hook products, the b ratio,
 * the omega eigenvalue sum, and the coarm/coleg product over a skew shape.
 */
#pragma once

#include "qsym/partition.hpp"
#include "qsym/ratfunc.hpp"

namespace qsym {

/// (b)_lambda = prod_i (b t^{1-i})_{lambda_i}, row by row.
RatFunc gen_poch(const RatFunc& b, const Partition& lam);
/// Same value computed cell by cell: prod_{s in lambda} (1 - b q^{a'(s)} t^{-l'(s)}).
RatFunc gen_poch_cells(const RatFunc& b, const Partition& lam);
/// prod over a list of bases.
RatFunc gen_poch_list(const std::vector<RatFunc>& bases, const Partition& lam);

/// c'_lambda = prod_s (1 - q^{a(s)+1} t^{l(s)}).
RatFunc c_prime(const Partition& lam);
/// c_lambda = prod_s (1 - q^{a(s)} t^{l(s)+1}).
RatFunc c_low(const Partition& lam);
/// b_lambda = c_lambda / c'_lambda.
RatFunc b_ratio(const Partition& lam);

/// omega_lambda = sum_{i=1}^{n} q^{-lambda_i} t^{i-n}; Laurent in q and t.
ExactPoly omega(const Partition& lam, int n);

/// (1)_{lambda/mu} = prod_{s in lambda - mu} (1 - q^{a'(s)} t^{-l'(s)}),
/// coarm/coleg taken in lambda; Laurent in t.
ExactPoly one_poch_skew(const Partition& lam, const Partition& mu);

/// q^{n(lambda')} (degree statistic of the conjugate).
long n_stat_conj(const Partition& lam);

/// Monomial q^e t^f as a rational function; either exponent may be negative.
inline RatFunc qt_pow(long e, long f) {
    const auto& S = std_syms();
    return RatFunc::variable(S.q, static_cast<int32_t>(e)) *
           RatFunc::variable(S.t, static_cast<int32_t>(f));
}

}  // namespace qsym
