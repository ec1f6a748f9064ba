/**
 * @file ratfunc.hpp
 * Exact rational functions num/den over ExactPoly.
 *
 * Canonical representative: numerator and denominator are ordinary
 * polynomials (Laurent powers of q and t are cleared into the denominator),
 * they share no polynomial, monomial or integer factor, and the leading
 * coefficient of the denominator is positive.  Equality nevertheless
 * cross-multiplies, so it stays correct independently of reduction.
 */
#pragma once

#include <map>
#include <string>

#include "qsym/poly.hpp"

namespace qsym {

class RatFunc {
  public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long v) : num_(v), den_(1) {}  // NOLINT
    RatFunc(const ExactPoly& p);           // NOLINT: polynomials embed
    RatFunc(const ExactPoly& num, const ExactPoly& den);
    static RatFunc variable(Symbol s, int32_t k = 1);
    /// n/d as integers.
    static RatFunc fraction(long n, long d);
    /// num/den when the caller certifies the parts share no polynomial
    /// factor.  Laurent powers, integer content, monomial content and the
    /// denominator sign are still canonicalized here; the expensive gcd is
    /// skipped.  Arithmetic and equality stay exact even if the caller was
    /// wrong, only the canonical text form would suffer.
    static RatFunc from_coprime(ExactPoly num, ExactPoly den);

    const ExactPoly& num() const { return num_; }
    const ExactPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_poly() const { return den_.is_one(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    RatFunc inverse() const;
    RatFunc pow(int k) const;

    /// Cross-multiplied equality; exact for any representatives.
    friend bool operator==(const RatFunc& a, const RatFunc& b);
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
    /// Total order for map keys.
    friend bool ratfunc_less(const RatFunc& a, const RatFunc& b);

    bool contains_symbol(Symbol s) const;

    /// Simultaneous substitution symbol -> value.  Unbound symbols stay.
    /// Throws std::domain_error when a denominator vanishes or a bound
    /// symbol with negative exponent is assigned zero.
    RatFunc substitute(const std::map<uint32_t, RatFunc>& bindings) const;
    RatFunc substitute(Symbol s, const RatFunc& value) const;

    /// "num" when the denominator is 1, otherwise "(num)/(den)".
    std::string to_string() const;

  private:
    void normalize();
    ExactPoly num_, den_;
};

struct RatFuncLess {
    bool operator()(const RatFunc& a, const RatFunc& b) const { return ratfunc_less(a, b); }
};

/// Finite q-shifted factorial (base)_k = prod_{i=0..k-1} (1 - base q^i).
/// Negative k uses the standard extension (base)_{-k} = 1/(base q^{-k})_k.
RatFunc qpoch_finite(const RatFunc& base, int k);

}  // namespace qsym
