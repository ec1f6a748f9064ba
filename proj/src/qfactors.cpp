#include "qsym/qfactors.hpp"

#include <stdexcept>

namespace qsym {

namespace {
RatFunc qvar() { return RatFunc::variable(SymbolTable::instance().q()); }
RatFunc tvar() { return RatFunc::variable(SymbolTable::instance().t()); }
}  // namespace

RatFunc gen_poch(const RatFunc& b, const Partition& lam) {
    RatFunc r(1);
    RatFunc t = tvar();
    for (int i = 1; i <= lam.length(); ++i) r *= qpoch_finite(b * t.pow(1 - i), lam.part(i));
    return r;
}

RatFunc gen_poch_cells(const RatFunc& b, const Partition& lam) {
    RatFunc r(1);
    RatFunc q = qvar(), t = tvar();
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = 1; j <= lam.part(i); ++j) {
            HookStats h = hook_stats(lam, i, j);
            r *= RatFunc(1) - b * q.pow(h.coarm) * t.pow(-h.coleg);
        }
    return r;
}

RatFunc gen_poch_list(const std::vector<RatFunc>& bases, const Partition& lam) {
    RatFunc r(1);
    for (const RatFunc& b : bases) r *= gen_poch(b, lam);
    return r;
}

RatFunc c_prime(const Partition& lam) {
    RatFunc r(1);
    RatFunc q = qvar(), t = tvar();
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = 1; j <= lam.part(i); ++j) {
            HookStats h = hook_stats(lam, i, j);
            r *= RatFunc(1) - q.pow(h.arm + 1) * t.pow(h.leg);
        }
    return r;
}

RatFunc c_low(const Partition& lam) {
    RatFunc r(1);
    RatFunc q = qvar(), t = tvar();
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = 1; j <= lam.part(i); ++j) {
            HookStats h = hook_stats(lam, i, j);
            r *= RatFunc(1) - q.pow(h.arm) * t.pow(h.leg + 1);
        }
    return r;
}

RatFunc b_ratio(const Partition& lam) { return c_low(lam) / c_prime(lam); }

ExactPoly omega(const Partition& lam, int n) {
    if (n < lam.length()) throw std::invalid_argument("omega: n below the partition length");
    ExactPoly r;
    for (int i = 1; i <= n; ++i) {
        Mono m{-lam.part(i), i - n};
        while (!m.empty() && m.back() == 0) m.pop_back();
        r.add_term(m, 1);
    }
    return r;
}

ExactPoly one_poch_skew(const Partition& lam, const Partition& mu) {
    if (!lam.contains(mu)) throw std::invalid_argument("one_poch_skew: mu not inside lambda");
    ExactPoly r(1);
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = mu.part(i) + 1; j <= lam.part(i); ++j) {
            HookStats h = hook_stats(lam, i, j);
            Mono m{h.coarm, -h.coleg};
            while (!m.empty() && m.back() == 0) m.pop_back();
            ExactPoly factor(1);
            factor -= ExactPoly::monomial(m, 1);
            r *= factor;
        }
    return r;
}

long n_stat_conj(const Partition& lam) { return n_stat(lam.conjugate()); }

}  // namespace qsym
