/**
 * @file series.hpp
 * Formal power series in the alphabet letters, truncated at a total degree
 * cutoff, with exact RatFunc coefficients (which must be letter-free).
 */
#pragma once

#include <optional>
#include <vector>

#include "qsym/ratfunc.hpp"

namespace qsym {

class TruncSeries {
  public:
    explicit TruncSeries(int cutoff);
    static TruncSeries scalar(const RatFunc& c, int cutoff);
    /// Split a polynomial into letter monomials and scalar coefficients.
    static TruncSeries from_poly(const ExactPoly& p, int cutoff);
    /// Expand num/den; the denominator's letter-free part must be nonzero.
    static TruncSeries from_ratfunc(const RatFunc& r, int cutoff);

    int cutoff() const { return cutoff_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Mono, RatFunc, GrevlexLess>& terms() const { return terms_; }
    RatFunc coeff(const Mono& letter_mono) const;

    TruncSeries operator-() const;
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
    TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }
    TruncSeries scale(const RatFunc& c) const;
    /// Multiplicative inverse; requires a nonzero constant term.
    TruncSeries invert() const;
    TruncSeries truncate(int cutoff) const;

    /// Substitute every letter x_i by scale_i * target (a fresh grading
    /// letter, typically): x^alpha contributes to target^|alpha|.
    TruncSeries collapse_letters(const std::map<uint32_t, RatFunc>& scales, Symbol target) const;

    /// Compare every coefficient up to the smaller cutoff.
    friend bool operator==(const TruncSeries& a, const TruncSeries& b);
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    std::string to_string() const;

    void set(const Mono& m, const RatFunc& c);
    void add(const Mono& m, const RatFunc& c);

  private:
    int cutoff_;
    std::map<Mono, RatFunc, GrevlexLess> terms_;
};

struct SeriesDiff {
    Mono mono;
    RatFunc lhs, rhs;
};
/// First coefficient (canonical order) where the two series disagree.
std::optional<SeriesDiff> first_difference(const TruncSeries& a, const TruncSeries& b);

/// (c x)_inf = prod_{i>=0} (1 - c x q^i) truncated at the cutoff, computed
/// through Euler's expansion sum_k (-1)^k q^{k(k-1)/2} (c x)^k / (q)_k.
TruncSeries qpoch_inf_series(const RatFunc& scalar, Symbol letter, int cutoff);

/// prod_{x in letters} prod_i (n_i x)_inf / prod_j (d_j x)_inf.
TruncSeries poch_product_series(const std::vector<RatFunc>& num_scalars,
                                const std::vector<RatFunc>& den_scalars,
                                const std::vector<Symbol>& letters, int cutoff);

}  // namespace qsym
