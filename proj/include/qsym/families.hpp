/**
 * @file families.hpp
 * Symmetric families defined by one-letter-at-a-time branching rules:
 * the inhomogeneous interpolation family M(x;a,b), the BC-type Laurent
 * family O(x;a,b), the two-parameter rational family R(x;a,b), and the
 * one-parameter family R(X;b) that the deeper identities are about.
 *
 * Every value is exact: a RatFunc in the standard letters x1..xn and
 * whatever parameters were passed in.  The recursion peels off the last
 * letter, so family_value(fam, lam, n, pr) is a function of x1..xn with
 * the branching variable x_n on the outermost level.  Symmetry in the
 * letters is a theorem about these definitions, not a construction
 * invariant, and is exercised by the test suite.
 */
#pragma once

#include "qsym/macdonald.hpp"
#include "qsym/series.hpp"
#include "qsym/symfunc.hpp"

namespace qsym {

enum class Family { M, O, Rab, Rb };

/// Two evolving parameters.  Rb ignores `a`; O requires b != 0 and
/// Rab requires a != 0 (their branch coefficients divide by them).
struct FamilyParams {
    RatFunc a, b;
};

/// Branching coefficient f_{lam/nu}(z) of the family at parameters pr.
/// Zero when nu is outside the family's support for lam.
RatFunc branch_coeff(Family fam, const Partition& lam, const Partition& nu,
                     const RatFunc& z, const FamilyParams& pr);

/// Parameters seen by the remaining letters after one branching step.
FamilyParams evolve_params(Family fam, const FamilyParams& pr);

/// F_lam(x_1..x_n; pr) via the branching recursion, memoized on
/// (family, shape, letter count, printed parameters).
RatFunc family_value(Family fam, const Partition& lam, int n,
                     const FamilyParams& pr);

/// The value times the product of its cleared denominator factors (below),
/// which is a genuine polynomial in the letters.  The branching recursion
/// runs on this form so that all coefficient arithmetic stays in the small
/// parameter field instead of mixing letters into gcd computations.
/// The reference stays valid until family_cache_clear().
const SymPoly& family_core(Family fam, const Partition& lam, int n,
                           const FamilyParams& pr);

/// Denominator factors cleared into the core: none for M, the letter
/// powers x_i^{|lam|} for O, and the factors 1 - b x_i q^j t^{1-r} over
/// the cells (r, j) of lam for Rab and Rb.  family_value(...) equals
/// family_core(...) divided by the product of this list.
std::vector<RatFunc> family_den_factors(Family fam, const Partition& lam,
                                        int n, const FamilyParams& pr);

/// Evaluate the family at an explicit point for the first n letters
/// without assembling the symbolic value: core and denominator factors
/// are specialized separately, keeping every gcd in the parameter field.
RatFunc family_at(Family fam, const Partition& lam,
                  const std::vector<RatFunc>& point, const FamilyParams& pr);

/// Invariance of the value under every adjacent letter swap, decided on
/// the polynomial core (the cleared denominator is symmetric in the
/// letters by construction).
bool family_letter_symmetric(Family fam, const Partition& lam, int n,
                             const FamilyParams& pr);

/// R_lam(x_1..x_n; b), the one-parameter rational family.
RatFunc R_value(const Partition& lam, int n, const RatFunc& b);

/// R_lam at an explicit point (see family_at).
RatFunc R_at(const Partition& lam, const std::vector<RatFunc>& point,
             const RatFunc& b);

/// Normalized form t^{n(lam)} R_lam(X;b) / c'_lam.
RatFunc R_norm(const Partition& lam, int n, const RatFunc& b);

/// Skew extension of the normalized family, defined by the recursion
///   sR_{lam/mu}(Y + z; b) = sum_nu (bz/t)_nu / (bz)_lam *
///                           Phat_{lam/nu}(z) * sR_{nu/mu}(Y; b)
/// with sR_{lam/mu}(-; b) = delta_{lam,mu}; memoized.
RatFunc skew_R_norm(const Partition& lam, const Partition& mu, int n,
                    const RatFunc& b);

/// Core form of the skew extension: skew_R_norm times prod_i (b x_i)_lam,
/// a polynomial in the letters.  Same caching contract as family_core.
const SymPoly& skew_R_core(const Partition& lam, const Partition& mu, int n,
                           const RatFunc& b);

/// Adjacent-swap symmetry of skew_R_norm, decided on its core.
bool skew_letter_symmetric(const Partition& lam, const Partition& mu, int n,
                           const RatFunc& b);

/// Branching recursion carried out on truncated power series in the
/// letters.  Supported for the families whose branch coefficients are
/// z-regular (M, Rab, Rb); throws std::domain_error for O, which is
/// genuinely Laurent in each letter.
TruncSeries family_series(Family fam, const Partition& lam, int n,
                          const FamilyParams& pr, int cutoff);
TruncSeries R_series(const Partition& lam, int n, const RatFunc& b,
                     int cutoff);

/// Closed form at t = q: det(x_i^{lam_j + n - j} / (b x_i)_{lam_j - j + 1})
/// divided by the Vandermonde determinant of x_1..x_n.
RatFunc R_closed_tq(const Partition& lam, int n, const RatFunc& b);

/// Closed form at t = 1: sum over the orbit of lam padded to n entries of
/// prod_i x_i^{u_i} / (b x_i)_{u_i}.
RatFunc R_closed_t1(const Partition& lam, int n, const RatFunc& b);

/// R_lam(a * (t^{n-1},...,t,1); b) in closed form:
/// a^|lam| t^{n(lam)} (t^n)_lam / (c_lam (a b t^{n-1})_lam).
RatFunc R_principal(const Partition& lam, int n, const RatFunc& a,
                    const RatFunc& b);

/// The point (a q^{mu_1} t^{n-1}, ..., a q^{mu_n}), i.e. the spectral
/// vector of mu scaled by a.
std::vector<RatFunc> scaled_spectral_point(const Partition& mu, int n,
                                           const RatFunc& a);

/// Value of f as s -> infinity: 0 when the denominator dominates, the
/// ratio of the two leading coefficients when the degrees in s agree,
/// and std::domain_error when the numerator dominates.
RatFunc limit_at_infinity(const RatFunc& f, Symbol s);

/// Substitute x_i -> point_i for the first n standard letters.
RatFunc eval_letters(const RatFunc& f, const std::vector<RatFunc>& point);

void family_cache_clear();
std::size_t family_cache_size();

}  // namespace qsym
