#include "qsym/ratfunc.hpp"

#include <stdexcept>

namespace qsym {

namespace {
Symbol sym_q() { return SymbolTable::instance().q(); }
Symbol sym_t() { return SymbolTable::instance().t(); }

/// Multiply both parts by q^i t^j so that all exponents become nonnegative.
void clear_laurent(ExactPoly& num, ExactPoly& den) {
    int32_t mq = std::min({0, num.min_exponent(sym_q()), den.min_exponent(sym_q())});
    int32_t mt = std::min({0, num.min_exponent(sym_t()), den.min_exponent(sym_t())});
    if (mq == 0 && mt == 0) return;
    Mono shift{-mq, -mt};
    num = num.mul_mono(shift, 1);
    den = den.mul_mono(shift, 1);
}
}  // namespace

RatFunc::RatFunc(const ExactPoly& p) : num_(p), den_(1) {
    if (!num_.is_polynomial()) normalize();
}

RatFunc::RatFunc(const ExactPoly& num, const ExactPoly& den) : num_(num), den_(den) {
    normalize();
}

RatFunc RatFunc::variable(Symbol s, int32_t k) { return RatFunc(ExactPoly::variable(s, k)); }

RatFunc RatFunc::fraction(long n, long d) { return RatFunc(ExactPoly(n), ExactPoly(d)); }

RatFunc RatFunc::from_coprime(ExactPoly num, ExactPoly den) {
    RatFunc r;
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        r.num_ = ExactPoly(0);
        r.den_ = ExactPoly(1);
        return r;
    }
    clear_laurent(num, den);
    // shared monomial content (componentwise minimum over both parts)
    Mono cn = num.mono_content();
    Mono cd = den.mono_content();
    Mono common(std::min(cn.size(), cd.size()), 0);
    bool any = false;
    for (size_t i = 0; i < common.size(); ++i) {
        common[i] = std::min(i < cn.size() ? cn[i] : 0, i < cd.size() ? cd[i] : 0);
        if (common[i] != 0) any = true;
    }
    if (any) {
        Mono shift(common.size(), 0);
        for (size_t i = 0; i < common.size(); ++i) shift[i] = -common[i];
        num = num.mul_mono(shift, 1);
        den = den.mul_mono(shift, 1);
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.int_content().get_mpz_t(), den.int_content().get_mpz_t());
    if (g > 1) {
        ExactPoly gp{g};
        num = num.exact_divide(gp);
        den = den.exact_divide(gp);
    }
    if (den.leading_coeff() < 0) {
        num = -num;
        den = -den;
    }
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

void RatFunc::normalize() {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = ExactPoly(1);
        return;
    }
    clear_laurent(num_, den_);
    ExactPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.exact_divide(g);
        den_ = den_.exact_divide(g);
    }
    if (den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    RatFunc r;
    if (a.den_.is_one() && b.den_.is_one()) {
        r.num_ = a.num_ + b.num_;
        r.den_ = ExactPoly(1);
        return r;
    }
    // Henrici: only the common denominator part can share a factor with the
    // new numerator, so one gcd against g suffices.
    ExactPoly g = a.den_.is_one() || b.den_.is_one()
                      ? ExactPoly(1)
                      : poly_gcd(a.den_, b.den_);
    ExactPoly b1 = g.is_one() ? a.den_ : a.den_.exact_divide(g);
    ExactPoly d1 = g.is_one() ? b.den_ : b.den_.exact_divide(g);
    ExactPoly num = a.num_ * d1 + b.num_ * b1;
    if (num.is_zero()) return RatFunc();
    ExactPoly h = g.is_one() ? ExactPoly(1) : poly_gcd(num, g);
    r.num_ = h.is_one() ? num : num.exact_divide(h);
    ExactPoly gh = h.is_one() ? g : g.exact_divide(h);
    r.den_ = gh * b1 * d1;
    if (r.den_.leading_coeff() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    RatFunc r;
    ExactPoly g1 = a.num_.is_one() || b.den_.is_one()
                       ? ExactPoly(1)
                       : poly_gcd(a.num_, b.den_);
    ExactPoly g2 = b.num_.is_one() || a.den_.is_one()
                       ? ExactPoly(1)
                       : poly_gcd(b.num_, a.den_);
    const ExactPoly an = g1.is_one() ? a.num_ : a.num_.exact_divide(g1);
    const ExactPoly bd = g1.is_one() ? b.den_ : b.den_.exact_divide(g1);
    const ExactPoly bn = g2.is_one() ? b.num_ : b.num_.exact_divide(g2);
    const ExactPoly ad = g2.is_one() ? a.den_ : a.den_.exact_divide(g2);
    r.num_ = an * bn;
    r.den_ = ad * bd;
    if (r.den_.leading_coeff() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    RatFunc r;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.leading_coeff() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return a * b.inverse();
}

RatFunc RatFunc::pow(int k) const {
    if (k == 0) return RatFunc(1);
    RatFunc base = k > 0 ? *this : inverse();
    uint32_t e = k > 0 ? k : -k;
    RatFunc r;
    r.num_ = base.num_.pow(e);
    r.den_ = base.den_.pow(e);
    return r;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

bool ratfunc_less(const RatFunc& a, const RatFunc& b) {
    if (poly_less(a.num_, b.num_)) return true;
    if (poly_less(b.num_, a.num_)) return false;
    return poly_less(a.den_, b.den_);
}

bool RatFunc::contains_symbol(Symbol s) const {
    return num_.contains_symbol(s) || den_.contains_symbol(s);
}

namespace {
RatFunc eval_poly(const ExactPoly& p, const std::map<uint32_t, RatFunc>& bindings) {
    RatFunc acc;
    std::map<std::pair<uint32_t, int32_t>, RatFunc> powers;
    for (const auto& [m, c] : p.terms()) {
        RatFunc term{ExactPoly(c)};
        Mono untouched_mono;
        for (uint32_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            auto bit = bindings.find(i);
            if (bit == bindings.end()) {
                if (untouched_mono.size() < i + 1) untouched_mono.resize(i + 1, 0);
                untouched_mono[i] = m[i];
                continue;
            }
            auto key = std::make_pair(i, m[i]);
            auto pit = powers.find(key);
            if (pit == powers.end()) {
                if (bit->second.is_zero() && m[i] < 0)
                    throw std::domain_error("substitute: zero raised to negative power");
                pit = powers.emplace(key, bit->second.pow(m[i])).first;
            }
            term *= pit->second;
        }
        if (!untouched_mono.empty()) term *= RatFunc(ExactPoly::monomial(untouched_mono, 1));
        acc += term;
    }
    return acc;
}
}  // namespace

RatFunc RatFunc::substitute(const std::map<uint32_t, RatFunc>& bindings) const {
    if (bindings.empty()) return *this;
    RatFunc n = eval_poly(num_, bindings);
    RatFunc d = eval_poly(den_, bindings);
    if (d.is_zero()) throw std::domain_error("substitute: denominator vanished");
    return n / d;
}

RatFunc RatFunc::substitute(Symbol s, const RatFunc& value) const {
    return substitute(std::map<uint32_t, RatFunc>{{s.id, value}});
}

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc qpoch_finite(const RatFunc& base, int k) {
    if (k == 0) return RatFunc(1);
    RatFunc q = RatFunc::variable(SymbolTable::instance().q());
    RatFunc r(1);
    if (k > 0) {
        RatFunc b = base;
        for (int i = 0; i < k; ++i) {
            r *= (RatFunc(1) - b);
            b *= q;
        }
    } else {
        // (a)_{-k} = 1 / (a q^{-k})_k
        RatFunc b = base * q.pow(k);
        for (int i = 0; i < -k; ++i) {
            r *= (RatFunc(1) - b);
            b *= q;
        }
        r = r.inverse();
    }
    return r;
}

}  // namespace qsym
