#include "qsym/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qsym {

namespace {
void trim(Mono& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}
int32_t at(const Mono& m, size_t i) { return i < m.size() ? m[i] : 0; }
}  // namespace

int64_t mono_degree(const Mono& m) {
    int64_t d = 0;
    for (int32_t e : m) d += e;
    return d;
}

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = at(a, i) + at(b, i);
    trim(r);
    return r;
}

Mono mono_div(const Mono& a, const Mono& b) {
    Mono r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = at(a, i) - at(b, i);
    trim(r);
    return r;
}

bool mono_divides(const Mono& b, const Mono& a) {
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 2; i < n; ++i)
        if (at(a, i) < at(b, i)) return false;
    return true;
}

std::string mono_to_string(const Mono& m) {
    auto& tb = SymbolTable::instance();
    std::ostringstream os;
    bool first = true;
    for (uint32_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!first) os << "*";
        os << tb.name(Symbol{i});
        if (m[i] != 1) os << "^" << m[i];
        first = false;
    }
    return os.str();
}

bool GrevlexLess::operator()(const Mono& a, const Mono& b) const {
    int64_t da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    size_t n = std::max(a.size(), b.size());
    for (size_t i = n; i-- > 0;) {
        int32_t d = at(a, i) - at(b, i);
        if (d != 0) return d > 0;
    }
    return false;
}

ExactPoly::ExactPoly(long v) {
    if (v != 0) terms_.emplace(Mono{}, mpz_class(v));
}

ExactPoly::ExactPoly(const mpz_class& v) {
    if (v != 0) terms_.emplace(Mono{}, v);
}

ExactPoly ExactPoly::variable(Symbol s, int32_t k) {
    if (k == 0) return ExactPoly(1);
    if (k < 0 && !SymbolTable::instance().laurent(s))
        throw std::invalid_argument("negative exponent on non-Laurent symbol " +
                                    SymbolTable::instance().name(s));
    Mono m(s.id + 1, 0);
    m[s.id] = k;
    ExactPoly p;
    p.terms_.emplace(std::move(m), mpz_class(1));
    return p;
}

ExactPoly ExactPoly::monomial(const Mono& m, const mpz_class& coeff) {
    ExactPoly p;
    if (coeff != 0) {
        Mono mm = m;
        trim(mm);
        p.terms_.emplace(std::move(mm), coeff);
    }
    return p;
}

bool ExactPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

bool ExactPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

bool ExactPoly::is_integer_constant(long v) const {
    if (v == 0) return terms_.empty();
    return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == v;
}

const Mono& ExactPoly::leading_mono() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.rbegin()->first;
}

const mpz_class& ExactPoly::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.rbegin()->second;
}

int32_t ExactPoly::min_exponent(Symbol s) const {
    int32_t mn = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        int32_t e = at(m, s.id);
        if (first || e < mn) mn = e;
        first = false;
    }
    return terms_.empty() ? 0 : mn;
}

int32_t ExactPoly::max_exponent(Symbol s) const {
    int32_t mx = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        int32_t e = at(m, s.id);
        if (first || e > mx) mx = e;
        first = false;
    }
    return terms_.empty() ? 0 : mx;
}

bool ExactPoly::contains_symbol(Symbol s) const {
    for (const auto& [m, c] : terms_)
        if (at(m, s.id) != 0) return true;
    return false;
}

std::vector<uint32_t> ExactPoly::symbols() const {
    std::vector<uint32_t> ids;
    size_t width = 0;
    for (const auto& [m, c] : terms_) width = std::max(width, m.size());
    for (uint32_t i = 0; i < width; ++i) {
        for (const auto& [m, c] : terms_) {
            if (at(m, i) != 0) {
                ids.push_back(i);
                break;
            }
        }
    }
    return ids;
}

bool ExactPoly::is_polynomial() const {
    for (const auto& [m, c] : terms_)
        for (int32_t e : m)
            if (e < 0) return false;
    return true;
}

mpz_class ExactPoly::coeff(const Mono& m) const {
    Mono mm = m;
    trim(mm);
    auto it = terms_.find(mm);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void ExactPoly::add_term(const Mono& m, const mpz_class& c) {
    if (c == 0) return;
    Mono mm = m;
    trim(mm);
    auto [it, inserted] = terms_.emplace(std::move(mm), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ExactPoly ExactPoly::operator-() const {
    ExactPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
    ExactPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    const ExactPoly& small = a.size() <= b.size() ? a : b;
    const ExactPoly& large = a.size() <= b.size() ? b : a;
    for (const auto& [ms, cs] : small.terms_) {
        for (const auto& [ml, cl] : large.terms_) {
            Mono m = mono_mul(ms, ml);
            mpz_class c = cs * cl;
            auto [it, inserted] = r.terms_.emplace(std::move(m), c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

ExactPoly ExactPoly::mul_mono(const Mono& m, const mpz_class& c) const {
    ExactPoly r;
    if (c == 0) return r;
    for (const auto& [mm, cc] : terms_) r.terms_.emplace(mono_mul(mm, m), cc * c);
    return r;
}

ExactPoly ExactPoly::mul_int(const mpz_class& c) const {
    ExactPoly r;
    if (c == 0) return r;
    for (const auto& [mm, cc] : terms_) r.terms_.emplace(mm, cc * c);
    return r;
}

ExactPoly ExactPoly::pow(uint32_t k) const {
    ExactPoly r(1);
    ExactPoly base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

bool poly_less(const ExactPoly& a, const ExactPoly& b) {
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    GrevlexLess lt;
    for (; ia != ea && ib != eb; ++ia, ++ib) {
        if (lt(ia->first, ib->first)) return true;
        if (lt(ib->first, ia->first)) return false;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == ea && ib != eb;
}

namespace {
/// Division loop on polynomials with nonnegative exponents.
bool divide_nonneg(const ExactPoly& a, const ExactPoly& b, ExactPoly& q) {
    q = ExactPoly();
    ExactPoly r = a;
    const Mono& lb = b.leading_mono();
    const mpz_class& cb = b.leading_coeff();
    while (!r.is_zero()) {
        const Mono& lr = r.leading_mono();
        size_t n = std::max(lr.size(), lb.size());
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i)
            if (at(lr, i) < at(lb, i)) ok = false;
        if (!ok) return false;
        mpz_class cq, rem;
        mpz_tdiv_qr(cq.get_mpz_t(), rem.get_mpz_t(), r.leading_coeff().get_mpz_t(),
                    cb.get_mpz_t());
        if (rem != 0) return false;
        Mono mq = mono_div(lr, lb);
        q.add_term(mq, cq);
        r -= b.mul_mono(mq, cq);
    }
    return true;
}
}  // namespace

bool ExactPoly::try_exact_divide(const ExactPoly& divisor, ExactPoly& quotient) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) {
        quotient = ExactPoly();
        return true;
    }
    // Shift Laurent parts of q and t out of both operands first.
    auto& tb = SymbolTable::instance();
    Symbol sq = tb.q(), st = tb.t();
    int32_t aq = std::min(min_exponent(sq), 0), at_ = std::min(min_exponent(st), 0);
    int32_t bq = std::min(divisor.min_exponent(sq), 0), bt = std::min(divisor.min_exponent(st), 0);
    ExactPoly A = *this, B = divisor;
    Mono shiftA(2, 0), shiftB(2, 0), shiftQ(2, 0);
    shiftA[0] = -aq;
    shiftA[1] = -at_;
    shiftB[0] = -bq;
    shiftB[1] = -bt;
    if (aq || at_) A = A.mul_mono(shiftA, 1);
    if (bq || bt) B = B.mul_mono(shiftB, 1);
    ExactPoly Q;
    if (!divide_nonneg(A, B, Q)) return false;
    shiftQ[0] = aq - bq;
    shiftQ[1] = at_ - bt;
    quotient = (shiftQ[0] || shiftQ[1]) ? Q.mul_mono(shiftQ, 1) : Q;
    return true;
}

ExactPoly ExactPoly::exact_divide(const ExactPoly& divisor) const {
    ExactPoly q;
    if (!try_exact_divide(divisor, q))
        throw std::logic_error("exact_divide: nonzero remainder");
    return q;
}

mpz_class ExactPoly::int_content() const {
    mpz_class g = 0;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Mono ExactPoly::mono_content() const {
    if (terms_.empty()) return {};
    Mono mn = terms_.begin()->first;
    size_t width = 0;
    for (const auto& [m, c] : terms_) width = std::max(width, m.size());
    mn.resize(width, 0);
    for (const auto& [m, c] : terms_) {
        for (size_t i = 0; i < width; ++i) mn[i] = std::min(mn[i], at(m, i));
        // a zero entry can only stay or shrink, so stop early when all-zero
        bool all0 = true;
        for (int32_t e : mn)
            if (e != 0) all0 = false;
        if (all0) break;
    }
    trim(mn);
    return mn;
}

std::string ExactPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        mpz_class mag = abs(c);
        if (c < 0)
            os << "-";
        else if (!first)
            os << "+";
        std::string ms = mono_to_string(m);
        if (mag != 1 || ms.empty()) {
            os << mag.get_str();
            if (!ms.empty()) os << "*";
        }
        os << ms;
        first = false;
    }
    return os.str();
}

}  // namespace qsym
