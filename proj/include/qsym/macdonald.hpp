#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qsym/partition.hpp"
#include "qsym/qfactors.hpp"
#include "qsym/ratfunc.hpp"
#include "qsym/symfunc.hpp"

namespace qsym {

/// @file
/// Macdonald polynomials P_lam(x; q, t), their skew forms, branching
/// coefficients, product structure constants, and the generalized
/// q-binomial coefficients they induce.

/// Branching coefficient for a horizontal strip lam/mu; zero otherwise.
RatFunc psi_coeff(const Partition& lam, const Partition& mu);
/// Column analogue, nonzero on vertical strips.
RatFunc psi_prime_coeff(const Partition& lam, const Partition& mu);
/// psi rescaled by the hook-ratio weights of the two shapes.
RatFunc phi_coeff(const Partition& lam, const Partition& mu);

/// P_lam in n letters (memoized). Zero when the shape is longer than n.
SymPoly macdonald_P(const Partition& lam, int n);
/// Skew polynomial P_{lam/mu} in n letters (memoized).
SymPoly skew_P(const Partition& lam, const Partition& mu, int n);
/// Schur polynomial via the bialternant determinant quotient.
SymPoly schur_poly(const Partition& lam, int n);

/// The point (t^{n-1}, ..., t, 1).
std::vector<RatFunc> principal_point(int n);
/// The point with coordinates q^{lam_i} t^{n-i}.
std::vector<RatFunc> spectral_point(const Partition& lam, int n);
/// Closed product form for P_lam at the principal point.
RatFunc principal_P(const Partition& lam, int n);

/// Normalization factors: t^{n(lam)-n(mu)} c'_mu / c'_lam and its dual.
RatFunc phat_factor(const Partition& lam, const Partition& mu);
RatFunc qhat_factor(const Partition& lam, const Partition& mu);

/// Expand a symmetric polynomial in the P basis by triangular elimination.
std::map<Partition, RatFunc> to_P_basis(const SymPoly& p, int n);

/// Coefficients of P_mu P_nu = sum_lam f^lam_{mu nu} P_lam (alphabet-size
/// independent; computed in a private sandbox of |mu|+|nu| letters).
std::map<Partition, RatFunc> structure_constants(const Partition& mu,
                                                 const Partition& nu);
/// Normalized variant weighted by hook products and a t power.
RatFunc struct_norm(const Partition& lam, const Partition& mu,
                    const Partition& nu);

/// Skew Q at a two-parameter difference alphabet:
/// sum over nu of prod_{s in nu} (A - B q^{a'(s)} t^{-l'(s)}) times the
/// normalized structure constant for (mu, nu; lam).
RatFunc skewQ_diff(const Partition& lam, const Partition& mu, const RatFunc& A,
                   const RatFunc& B);

/// Generalized q-binomial coefficient, four independent routes.
RatFunc qbinom(const Partition& lam, const Partition& mu);
RatFunc qbinom_rec(const Partition& lam, const Partition& mu, int n);
RatFunc qbinom_tq(const Partition& lam, const Partition& mu);
RatFunc qbinom_t1(const Partition& lam, const Partition& mu);
/// Classical one-row coefficient; zero outside 0 <= k <= m.
RatFunc classical_qbinom(int m, int k);

/// Structure-constant cache control. An empty directory means memory only.
void struct_cache_set_dir(const std::string& dir);
void struct_cache_clear();
struct StructCacheStats {
    std::size_t pairs = 0;
    bool persistent = false;
    std::string dir;
};
StructCacheStats struct_cache_stats();

}  // namespace qsym
