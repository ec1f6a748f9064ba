#include "qsym/symfunc.hpp"

#include <algorithm>
#include <stdexcept>

#include "qsym/symbol.hpp"

namespace qsym {

SymPoly::SymPoly(const RatFunc& c) {
    if (!c.is_zero()) terms_.emplace(Mono{}, c);
}

SymPoly::SymPoly(long c) : SymPoly(RatFunc(c)) {}

SymPoly SymPoly::letter_power(Symbol x, int k) {
    if (!SymbolTable::instance().is_letter(x))
        throw std::invalid_argument("letter_power: not a letter symbol");
    if (k < 0) throw std::invalid_argument("letter_power: negative exponent");
    SymPoly p;
    Mono m;
    if (k > 0) {
        m.resize(x.id + 1, 0);
        m[x.id] = k;
    }
    p.terms_.emplace(std::move(m), RatFunc(1));
    return p;
}

SymPoly SymPoly::monomial(const Mono& m, const RatFunc& c) {
    SymPoly p;
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

SymPoly SymPoly::monomial_sym(const Partition& lam,
                              const std::vector<Symbol>& letters) {
    SymPoly p;
    for (const auto& comp : orbit_compositions(lam, static_cast<int>(letters.size()))) {
        Mono m;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            if (comp[i] == 0) continue;
            uint32_t id = letters[i].id;
            if (m.size() < id + 1) m.resize(id + 1, 0);
            m[id] = comp[i];
        }
        p.terms_.emplace(std::move(m), RatFunc(1));
    }
    return p;
}

RatFunc SymPoly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RatFunc(0) : it->second;
}

void SymPoly::add_term(const Mono& m, const RatFunc& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
    SymPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

SymPoly SymPoly::operator-(const SymPoly& o) const {
    SymPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, RatFunc(0) - c);
    return r;
}

SymPoly SymPoly::operator*(const SymPoly& o) const {
    SymPoly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

SymPoly SymPoly::scale(const RatFunc& c) const {
    SymPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

SymPoly SymPoly::mul_letter(Symbol x, int k) const {
    if (k == 0) return *this;
    Mono shift;
    shift.resize(x.id + 1, 0);
    shift[x.id] = k;
    SymPoly r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(mono_mul(m, shift), v);
    return r;
}

bool SymPoly::operator==(const SymPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end(); ++a, ++b) {
        if (a->first != b->first) return false;
        if (!(a->second == b->second)) return false;
    }
    return true;
}

RatFunc SymPoly::evaluate(const std::map<uint32_t, RatFunc>& values) const {
    RatFunc acc(0);
    std::map<std::pair<uint32_t, int32_t>, RatFunc> powers;
    for (const auto& [m, c] : terms_) {
        RatFunc term = c;
        for (uint32_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            auto key = std::make_pair(i, m[i]);
            auto pit = powers.find(key);
            if (pit == powers.end()) {
                auto it = values.find(i);
                if (it == values.end())
                    throw std::invalid_argument(
                        "evaluate: unbound letter " +
                        SymbolTable::instance().name(Symbol{i}));
                pit = powers.emplace(key, it->second.pow(m[i])).first;
            }
            term *= pit->second;
        }
        acc += term;
    }
    return acc;
}

RatFunc SymPoly::to_ratfunc() const {
    if (terms_.empty()) return RatFunc(0);
    // The coefficient denominators are letter free, so the combined
    // denominator is their lcm and every gcd below stays in the small
    // parameter field; accumulating with RatFunc sums instead would run
    // gcds against letter-bearing numerators.
    ExactPoly lcm(1);
    for (const auto& [m, c] : terms_) {
        if (c.den().is_one()) continue;
        ExactPoly g = poly_gcd(lcm, c.den());
        lcm = lcm * (g.is_one() ? c.den() : c.den().exact_divide(g));
    }
    std::vector<ExactPoly> parts;
    parts.reserve(terms_.size());
    ExactPoly content;
    for (const auto& [m, c] : terms_) {
        ExactPoly p = c.den().is_one() && lcm.is_one()
                          ? c.num()
                          : c.num() * lcm.exact_divide(c.den());
        if (!content.is_one())
            content = content.is_zero() ? p : poly_gcd(content, p);
        parts.push_back(std::move(p));
    }
    ExactPoly den = lcm;
    if (!content.is_one()) {
        ExactPoly g = poly_gcd(content, den);
        if (!g.is_one()) {
            den = den.exact_divide(g);
            for (ExactPoly& p : parts) p = p.exact_divide(g);
        }
    }
    ExactPoly num;
    std::size_t i = 0;
    for (const auto& term : terms_) num += parts[i++].mul_mono(term.first, 1);
    return RatFunc::from_coprime(std::move(num), std::move(den));
}

TruncSeries SymPoly::to_series(int cutoff) const {
    TruncSeries s(cutoff);
    for (const auto& [m, c] : terms_) s.add(m, c);
    return s;
}

std::string SymPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        std::string cs = c.to_string();
        if (m.empty()) {
            out += cs;
            continue;
        }
        if (cs == "1")
            out += mono_to_string(m);
        else if (c.is_poly() && c.num().size() == 1)
            out += cs + "*" + mono_to_string(m);
        else
            out += "(" + cs + ")*" + mono_to_string(m);
    }
    return out;
}

std::vector<Symbol> letters(int n) {
    if (n < 0) throw std::invalid_argument("letters: negative count");
    const auto& S = std_syms();
    std::vector<Symbol> out;
    Symbol base[4] = {S.x1, S.x2, S.x3, S.x4};
    for (int i = 1; i <= n; ++i) {
        if (i <= 4)
            out.push_back(base[i - 1]);
        else
            out.push_back(SymbolTable::instance().letter("x" + std::to_string(i)));
    }
    return out;
}

Partition mono_shape(const Mono& m, const std::vector<Symbol>& alphabet) {
    std::vector<int> expo;
    Mono seen = m;
    for (Symbol s : alphabet) {
        int e = s.id < m.size() ? m[s.id] : 0;
        if (e < 0) throw std::invalid_argument("mono_shape: negative exponent");
        if (e > 0) expo.push_back(e);
        if (s.id < seen.size()) seen[s.id] = 0;
    }
    for (int32_t v : seen)
        if (v != 0) throw std::invalid_argument("mono_shape: symbol outside alphabet");
    std::sort(expo.begin(), expo.end(), std::greater<int>());
    return Partition(expo);
}

std::map<Partition, RatFunc> monomial_coeffs(const SymPoly& p,
                                             const std::vector<Symbol>& alphabet) {
    std::map<Partition, RatFunc> out;
    std::map<Partition, std::size_t> counts;
    for (const auto& [m, c] : p.terms()) {
        Partition shape = mono_shape(m, alphabet);
        auto it = out.find(shape);
        if (it == out.end()) {
            out.emplace(shape, c);
            counts[shape] = 1;
        } else {
            if (!(it->second == c))
                throw std::logic_error("monomial_coeffs: not symmetric (coefficient mismatch)");
            ++counts[shape];
        }
    }
    for (const auto& [shape, cnt] : counts) {
        std::size_t orbit =
            orbit_compositions(shape, static_cast<int>(alphabet.size())).size();
        if (cnt != orbit)
            throw std::logic_error("monomial_coeffs: not symmetric (orbit incomplete)");
    }
    return out;
}

RatFunc eval_at(const SymPoly& p, const std::vector<RatFunc>& point) {
    auto xs = letters(static_cast<int>(point.size()));
    std::map<uint32_t, RatFunc> values;
    for (std::size_t i = 0; i < xs.size(); ++i) values.emplace(xs[i].id, point[i]);
    return p.evaluate(values);
}

}  // namespace qsym
