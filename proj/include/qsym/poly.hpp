/**
 * @file poly.hpp
 * Sparse exact multivariate polynomials with GMP integer coefficients.
 *
 * Exponent vectors are indexed by symbol id with trailing zeros trimmed, so
 * a monomial's representation does not depend on how many symbols happen to
 * be registered.  q and t (ids 0 and 1) may carry negative exponents; every
 * other symbol is ordinary.  The canonical term order is graded
 * reverse-lexicographic over the registration order, ascending, so the
 * leading term of a nonzero polynomial is the last one.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qsym/symbol.hpp"

namespace qsym {

/// Exponent vector by symbol id, trailing zeros trimmed.
using Mono = std::vector<int32_t>;

int64_t mono_degree(const Mono& m);
Mono mono_mul(const Mono& a, const Mono& b);
/// Componentwise difference a - b (no divisibility check).
Mono mono_div(const Mono& a, const Mono& b);
/// True when a - b is componentwise nonnegative outside the Laurent symbols q, t.
bool mono_divides(const Mono& b, const Mono& a);
std::string mono_to_string(const Mono& m);

/// Graded reverse-lexicographic order: first by total degree, ties broken so
/// that of two monomials of equal degree the one with the larger exponent on
/// the latest differing symbol is smaller.
struct GrevlexLess {
    bool operator()(const Mono& a, const Mono& b) const;
};

class ExactPoly {
  public:
    using TermMap = std::map<Mono, mpz_class, GrevlexLess>;

    ExactPoly() = default;
    ExactPoly(long v);  // NOLINT: implicit integer constants are convenient
    explicit ExactPoly(const mpz_class& v);
    /// x^k for a symbol; negative k only for q and t.
    static ExactPoly variable(Symbol s, int32_t k = 1);
    static ExactPoly monomial(const Mono& m, const mpz_class& coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_integer_constant(long v) const;
    /// Number of terms.
    size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    const Mono& leading_mono() const;
    const mpz_class& leading_coeff() const;

    /// Smallest exponent of symbol s over all terms (0 for the zero poly).
    int32_t min_exponent(Symbol s) const;
    int32_t max_exponent(Symbol s) const;
    bool contains_symbol(Symbol s) const;
    /// Ids of all symbols appearing with nonzero exponent.
    std::vector<uint32_t> symbols() const;
    /// True when every exponent is nonnegative (no Laurent part).
    bool is_polynomial() const;

    mpz_class coeff(const Mono& m) const;
    void add_term(const Mono& m, const mpz_class& c);

    ExactPoly operator-() const;
    ExactPoly& operator+=(const ExactPoly& o);
    ExactPoly& operator-=(const ExactPoly& o);
    friend ExactPoly operator+(ExactPoly a, const ExactPoly& b) { return a += b; }
    friend ExactPoly operator-(ExactPoly a, const ExactPoly& b) { return a -= b; }
    friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);
    ExactPoly& operator*=(const ExactPoly& o) { return *this = *this * o; }
    ExactPoly mul_mono(const Mono& m, const mpz_class& c) const;
    ExactPoly mul_int(const mpz_class& c) const;
    ExactPoly pow(uint32_t k) const;

    friend bool operator==(const ExactPoly& a, const ExactPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ExactPoly& a, const ExactPoly& b) { return !(a == b); }
    /// Total order for use as a map key (term-wise lexicographic).
    friend bool poly_less(const ExactPoly& a, const ExactPoly& b);

    /// Exact quotient; throws std::logic_error when the division leaves a
    /// remainder and std::domain_error when dividing by zero.  Laurent parts
    /// are handled by factoring powers of q and t out of both operands.
    ExactPoly exact_divide(const ExactPoly& divisor) const;
    /// Quotient together with success flag instead of a throw.
    bool try_exact_divide(const ExactPoly& divisor, ExactPoly& quotient) const;

    /// GCD of the integer coefficients, always nonnegative.
    mpz_class int_content() const;
    /// Componentwise minimum exponent vector over all terms.
    Mono mono_content() const;

    /// Canonical text form: terms in ascending canonical order, explicit
    /// signs, `*` between factors, `^` for exponents different from 1.
    std::string to_string() const;

  private:
    TermMap terms_;
};

/// Multivariate gcd via content/primitive-part recursion and a primitive
/// pseudo-remainder sequence in the selected main variable.  Inputs must
/// have nonnegative exponents everywhere; the result includes the integer
/// and monomial content and has a positive leading coefficient.
ExactPoly poly_gcd(const ExactPoly& a, const ExactPoly& b);

}  // namespace qsym
