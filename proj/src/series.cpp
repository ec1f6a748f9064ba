#include "qsym/series.hpp"

#include <sstream>
#include <stdexcept>

namespace qsym {

namespace {
int32_t at(const Mono& m, size_t i) { return i < m.size() ? m[i] : 0; }

bool letters_only(const Mono& m) {
    auto& tb = SymbolTable::instance();
    for (uint32_t i = 0; i < m.size(); ++i)
        if (m[i] != 0 && !tb.is_letter(Symbol{i})) return false;
    return true;
}
}  // namespace

TruncSeries::TruncSeries(int cutoff) : cutoff_(cutoff) {
    if (cutoff < 0) throw std::invalid_argument("negative series cutoff");
}

TruncSeries TruncSeries::scalar(const RatFunc& c, int cutoff) {
    TruncSeries s(cutoff);
    s.set({}, c);
    return s;
}

void TruncSeries::set(const Mono& m, const RatFunc& c) {
    if (mono_degree(m) > cutoff_) return;
    if (!letters_only(m)) throw std::invalid_argument("series key contains non-letter symbols");
    if (c.is_zero())
        terms_.erase(m);
    else
        terms_[m] = c;
}

void TruncSeries::add(const Mono& m, const RatFunc& c) {
    if (c.is_zero() || mono_degree(m) > cutoff_) return;
    if (!letters_only(m)) throw std::invalid_argument("series key contains non-letter symbols");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TruncSeries TruncSeries::from_poly(const ExactPoly& p, int cutoff) {
    auto& tb = SymbolTable::instance();
    TruncSeries s(cutoff);
    for (const auto& [m, c] : p.terms()) {
        Mono letter_part(m.size(), 0), rest(m.size(), 0);
        for (uint32_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (tb.is_letter(Symbol{i}))
                letter_part[i] = m[i];
            else
                rest[i] = m[i];
        }
        while (!letter_part.empty() && letter_part.back() == 0) letter_part.pop_back();
        while (!rest.empty() && rest.back() == 0) rest.pop_back();
        s.add(letter_part, RatFunc(ExactPoly::monomial(rest, c)));
    }
    return s;
}

TruncSeries TruncSeries::from_ratfunc(const RatFunc& r, int cutoff) {
    TruncSeries num = from_poly(r.num(), cutoff);
    if (r.is_poly()) return num;
    TruncSeries den = from_poly(r.den(), cutoff);
    return num * den.invert();
}

RatFunc TruncSeries::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RatFunc() : it->second;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries s(cutoff_);
    for (const auto& [m, c] : terms_) s.terms_.emplace(m, -c);
    return s;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries s(std::min(a.cutoff_, b.cutoff_));
    for (const auto& [m, c] : a.terms_)
        if (mono_degree(m) <= s.cutoff_) s.terms_.emplace(m, c);
    for (const auto& [m, c] : b.terms_) s.add(m, c);
    return s;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries s(std::min(a.cutoff_, b.cutoff_));
    for (const auto& [ma, ca] : a.terms_) {
        int64_t da = mono_degree(ma);
        if (da > s.cutoff_) continue;
        for (const auto& [mb, cb] : b.terms_) {
            if (da + mono_degree(mb) > s.cutoff_) continue;
            s.add(mono_mul(ma, mb), ca * cb);
        }
    }
    return s;
}

TruncSeries TruncSeries::scale(const RatFunc& c) const {
    TruncSeries s(cutoff_);
    if (c.is_zero()) return s;
    for (const auto& [m, cc] : terms_) s.terms_.emplace(m, cc * c);
    return s;
}

TruncSeries TruncSeries::invert() const {
    RatFunc c0 = coeff({});
    if (c0.is_zero()) throw std::domain_error("series inverse: zero constant term");
    // Newton iteration doubles the valid degree each round.
    TruncSeries r = scalar(c0.inverse(), cutoff_);
    TruncSeries two = scalar(RatFunc(2), cutoff_);
    for (int valid = 0; valid < cutoff_; valid = 2 * valid + 1) r = r * (two - *this * r);
    return r;
}

TruncSeries TruncSeries::truncate(int cutoff) const {
    TruncSeries s(std::min(cutoff, cutoff_));
    for (const auto& [m, c] : terms_)
        if (mono_degree(m) <= s.cutoff_) s.terms_.emplace(m, c);
    return s;
}

TruncSeries TruncSeries::collapse_letters(const std::map<uint32_t, RatFunc>& scales,
                                          Symbol target) const {
    TruncSeries s(cutoff_);
    for (const auto& [m, c] : terms_) {
        RatFunc factor = c;
        int64_t total = 0;
        for (uint32_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            auto it = scales.find(i);
            if (it == scales.end())
                throw std::invalid_argument("collapse_letters: letter without scale");
            factor *= it->second.pow(m[i]);
            total += m[i];
        }
        Mono key(target.id + 1, 0);
        key[target.id] = static_cast<int32_t>(total);
        while (!key.empty() && key.back() == 0) key.pop_back();
        s.add(key, factor);
    }
    return s;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
    int cut = std::min(a.cutoff_, b.cutoff_);
    return !first_difference(a.truncate(cut), b.truncate(cut)).has_value();
}

std::optional<SeriesDiff> first_difference(const TruncSeries& a, const TruncSeries& b) {
    int cut = std::min(a.cutoff(), b.cutoff());
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    GrevlexLess lt;
    while (ia != ea || ib != eb) {
        while (ia != ea && mono_degree(ia->first) > cut) ++ia;
        while (ib != eb && mono_degree(ib->first) > cut) ++ib;
        if (ia == ea && ib == eb) break;
        if (ib == eb || (ia != ea && lt(ia->first, ib->first))) {
            return SeriesDiff{ia->first, ia->second, RatFunc()};
        }
        if (ia == ea || lt(ib->first, ia->first)) {
            return SeriesDiff{ib->first, RatFunc(), ib->second};
        }
        if (ia->second != ib->second) return SeriesDiff{ia->first, ia->second, ib->second};
        ++ia;
        ++ib;
    }
    return std::nullopt;
}

std::string TruncSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        std::string ms = mono_to_string(m);
        os << "[" << (ms.empty() ? "1" : ms) << "] " << c.to_string();
        first = false;
    }
    os << " (+O(deg " << cutoff_ + 1 << "))";
    return os.str();
}

TruncSeries qpoch_inf_series(const RatFunc& scalar, Symbol letter, int cutoff) {
    if (!SymbolTable::instance().is_letter(letter))
        throw std::invalid_argument("qpoch_inf_series: base must contain an alphabet letter");
    auto& tb = SymbolTable::instance();
    for (uint32_t id : scalar.num().symbols())
        if (tb.is_letter(Symbol{id}))
            throw std::invalid_argument("qpoch_inf_series: scalar part contains a letter");
    for (uint32_t id : scalar.den().symbols())
        if (tb.is_letter(Symbol{id}))
            throw std::invalid_argument("qpoch_inf_series: scalar part contains a letter");
    RatFunc q = RatFunc::variable(tb.q());
    TruncSeries s(cutoff);
    RatFunc qpk(1);  // (q)_k
    RatFunc ck(1);   // scalar^k
    for (int k = 0; k <= cutoff; ++k) {
        if (k > 0) {
            qpk *= RatFunc(1) - q.pow(k);
            ck *= scalar;
        }
        RatFunc coeff = ck * q.pow(k * (k - 1) / 2) / qpk;
        if (k % 2 == 1) coeff = -coeff;
        Mono m(letter.id + 1, 0);
        m[letter.id] = k;
        while (!m.empty() && m.back() == 0) m.pop_back();
        s.add(m, coeff);
    }
    return s;
}

TruncSeries poch_product_series(const std::vector<RatFunc>& num_scalars,
                                const std::vector<RatFunc>& den_scalars,
                                const std::vector<Symbol>& letters, int cutoff) {
    TruncSeries s = TruncSeries::scalar(RatFunc(1), cutoff);
    for (Symbol x : letters) {
        for (const RatFunc& c : num_scalars) s *= qpoch_inf_series(c, x, cutoff);
        for (const RatFunc& c : den_scalars) s *= qpoch_inf_series(c, x, cutoff).invert();
    }
    return s;
}

}  // namespace qsym
