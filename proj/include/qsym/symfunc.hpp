#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsym/partition.hpp"
#include "qsym/poly.hpp"
#include "qsym/ratfunc.hpp"
#include "qsym/series.hpp"

namespace qsym {

/// @file
/// Polynomials in the letter alphabet x1, x2, ... whose coefficients are
/// rational functions of q, t and the parameter symbols. Terms are keyed
/// by letter-only monomials in the canonical order, and coefficients are
/// required to be letter free.

class SymPoly {
public:
    using TermMap = std::map<Mono, RatFunc, GrevlexLess>;

    SymPoly() = default;
    explicit SymPoly(const RatFunc& c);
    explicit SymPoly(long c);

    static SymPoly letter_power(Symbol x, int k);
    static SymPoly monomial(const Mono& m, const RatFunc& c);
    /// Monomial symmetric polynomial m_lam in the given letters; zero when
    /// the partition is longer than the alphabet.
    static SymPoly monomial_sym(const Partition& lam,
                                const std::vector<Symbol>& letters);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    RatFunc coeff(const Mono& m) const;

    SymPoly operator+(const SymPoly& o) const;
    SymPoly operator-(const SymPoly& o) const;
    SymPoly operator*(const SymPoly& o) const;
    SymPoly& operator+=(const SymPoly& o) { return *this = *this + o; }
    SymPoly& operator-=(const SymPoly& o) { return *this = *this - o; }
    SymPoly scale(const RatFunc& c) const;
    SymPoly mul_letter(Symbol x, int k) const;

    bool operator==(const SymPoly& o) const;
    bool operator!=(const SymPoly& o) const { return !(*this == o); }

    /// Substitute every letter that occurs; missing bindings throw.
    RatFunc evaluate(const std::map<uint32_t, RatFunc>& values) const;
    RatFunc to_ratfunc() const;
    TruncSeries to_series(int cutoff) const;
    std::string to_string() const;

private:
    void add_term(const Mono& m, const RatFunc& c);
    TermMap terms_;
};

/// The first n letters x1..xn, registering fresh ones past the standard four.
std::vector<Symbol> letters(int n);

/// Sorted exponent vector of a letter-only monomial; throws when the
/// monomial touches a symbol outside the given alphabet.
Partition mono_shape(const Mono& m, const std::vector<Symbol>& alphabet);

/// Decompose a symmetric polynomial into monomial-basis coefficients.
/// Throws std::logic_error when the input is not symmetric in the alphabet.
std::map<Partition, RatFunc> monomial_coeffs(const SymPoly& p,
                                             const std::vector<Symbol>& alphabet);

/// Evaluate at an explicit point, matching letters(n) positionally.
RatFunc eval_at(const SymPoly& p, const std::vector<RatFunc>& point);

}  // namespace qsym
