/**
 * @file families.cpp
 * Branching-rule families, their series forms, closed specializations
 * and limits.
 *
 * The recursion is carried out on the cleared polynomial core (the value
 * times its known denominator factors).  In that form every coefficient
 * is a rational function of q, t and the parameters only, so the
 * arithmetic never runs gcds over polynomials mixing letters and
 * parameters, which is what made the direct rational recursion blow up.
 * The rational value is reassembled at the boundary: known factors are
 * cancelled by exact division probes and the remaining parts are
 * combined with RatFunc::from_coprime.
 */
#include "qsym/families.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

#include "qsym/qfactors.hpp"
#include "qsym/symfunc.hpp"

namespace qsym {

namespace {

std::mutex& fam_mutex() {
    static std::mutex m;
    return m;
}

std::map<std::string, SymPoly>& core_memo() {
    static std::map<std::string, SymPoly> memo;
    return memo;
}

std::map<std::string, RatFunc>& value_memo() {
    static std::map<std::string, RatFunc> memo;
    return memo;
}

std::string family_key(Family fam, const Partition& lam, int n,
                       const FamilyParams& pr) {
    std::ostringstream os;
    os << static_cast<int>(fam) << '|' << lam.to_string() << '|' << n << '|'
       << pr.a.to_string() << ';' << pr.b.to_string();
    return os.str();
}

std::string skew_key(const Partition& lam, const Partition& mu, int n,
                     const RatFunc& b) {
    std::ostringstream os;
    os << "skew|" << lam.to_string() << '|' << mu.to_string() << '|' << n
       << '|' << b.to_string();
    return os.str();
}

const RatFunc& t_inv() {
    static const RatFunc v = qt_pow(0, -1);
    return v;
}

/// One-row lambda-ring evaluation P_{lam/nu} at the difference argument
/// (1 - b)/(1 - t), expressed through the normalized expansion.
RatFunc skewP_difference(const Partition& lam, const Partition& nu,
                         const RatFunc& b) {
    return qt_pow(0, n_stat(lam) - n_stat(nu)) * (c_low(nu) / c_low(lam)) *
           skewQ_diff(lam, nu, RatFunc(1), b);
}

/// prod over the cells (i, j) of lam/nu of (z - a q^j t^{1-i}), the
/// cleared form of z^{|lam/nu|} (a/z)_lam / (a/z)_nu.
SymPoly strip_roots(Symbol z, const Partition& lam, const Partition& nu,
                    const RatFunc& a) {
    SymPoly out{RatFunc(1)};
    const SymPoly zp = SymPoly::letter_power(z, 1);
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = nu.part(i); j < lam.part(i); ++j)
            out = out * (zp - SymPoly(a * qt_pow(j, 1 - i)));
    return out;
}

/// prod over the cells (i, j) of lam/nu of (1 - c z q^j t^{1-i}), i.e.
/// the ratio (cz)_lam / (cz)_nu.
SymPoly strip_poch(Symbol z, const Partition& lam, const Partition& nu,
                   const RatFunc& c) {
    SymPoly out{RatFunc(1)};
    if (c.is_zero()) return out;
    const SymPoly one{RatFunc(1)};
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = nu.part(i); j < lam.part(i); ++j)
            out = out * (one - SymPoly::letter_power(z, 1)
                                   .scale(c * qt_pow(j, 1 - i)));
    return out;
}

/// (cz)_nu as a polynomial in the letter z.
SymPoly poch_poly(Symbol z, const Partition& nu, const RatFunc& c) {
    return strip_poch(z, nu, Partition{}, c);
}

SymPoly compute_core(Family fam, const Partition& lam, int n,
                     const FamilyParams& pr);

const SymPoly& family_core_locked(Family fam, const Partition& lam, int n,
                                  const FamilyParams& pr) {
    const std::string key = family_key(fam, lam, n, pr);
    {
        std::lock_guard<std::mutex> g(fam_mutex());
        auto it = core_memo().find(key);
        if (it != core_memo().end()) return it->second;
    }
    SymPoly out = compute_core(fam, lam, n, pr);
    std::lock_guard<std::mutex> g(fam_mutex());
    return core_memo().emplace(key, std::move(out)).first->second;
}

SymPoly compute_core(Family fam, const Partition& lam, int n,
                     const FamilyParams& pr) {
    if (n == 0) return lam.empty() ? SymPoly{RatFunc(1)} : SymPoly();
    // strip-supported chains shorten by at most one row per letter
    if (fam != Family::M && lam.length() > n) return SymPoly();
    if (fam == Family::O && pr.b.is_zero())
        throw std::domain_error("family O requires b != 0");
    if (fam == Family::Rab && pr.a.is_zero())
        throw std::domain_error("family R(a,b) requires a != 0");
    const std::vector<Symbol> xs = letters(n);
    const Symbol z = xs[n - 1];
    const FamilyParams inner = evolve_params(fam, pr);
    const std::vector<Partition> preds =
        fam == Family::M ? subdiagrams(lam) : hstrip_predecessors(lam);
    SymPoly out;
    for (const Partition& nu : preds) {
        const SymPoly& rest = family_core_locked(fam, nu, n - 1, inner);
        if (rest.is_zero()) continue;
        const int w = lam.weight() - nu.weight();
        SymPoly step;
        switch (fam) {
            case Family::M:
                step = strip_roots(z, lam, nu, pr.a)
                           .scale(skewP_difference(lam, nu, pr.b));
                break;
            case Family::O:
                step = SymPoly::letter_power(z, nu.weight()) *
                       strip_roots(z, lam, nu, pr.a) *
                       strip_poch(z, lam, nu, pr.b);
                step = step.scale(psi_coeff(lam, nu) *
                                  pr.b.inverse().pow(w));
                break;
            case Family::Rab:
                step = strip_poch(z, lam, nu, pr.a.inverse()) *
                       poch_poly(z, nu, pr.b * t_inv());
                step = step.scale(psi_coeff(lam, nu) * pr.a.pow(w));
                break;
            case Family::Rb:
                step = SymPoly::letter_power(z, w) *
                       poch_poly(z, nu, pr.b * t_inv());
                step = step.scale(psi_coeff(lam, nu));
                break;
        }
        if (step.is_zero()) continue;
        step = step * rest;
        // the cleared denominator of the inner value is taken at nu; lift
        // it to lam across the remaining letters
        for (int m = 1; m < n; ++m) {
            switch (fam) {
                case Family::M:
                    break;
                case Family::O:
                    step = step.mul_letter(xs[m - 1], w);
                    break;
                case Family::Rab:
                case Family::Rb:
                    step = step * strip_poch(xs[m - 1], lam, nu, pr.b);
                    break;
            }
        }
        out += step;
    }
    return out;
}

SymPoly compute_skew_core(const Partition& lam, const Partition& mu, int n,
                          const RatFunc& b);

const SymPoly& skew_core_locked(const Partition& lam, const Partition& mu,
                                int n, const RatFunc& b) {
    const std::string key = skew_key(lam, mu, n, b);
    {
        std::lock_guard<std::mutex> g(fam_mutex());
        auto it = core_memo().find(key);
        if (it != core_memo().end()) return it->second;
    }
    SymPoly out = compute_skew_core(lam, mu, n, b);
    std::lock_guard<std::mutex> g(fam_mutex());
    return core_memo().emplace(key, std::move(out)).first->second;
}

SymPoly compute_skew_core(const Partition& lam, const Partition& mu, int n,
                          const RatFunc& b) {
    if (n == 0) return lam == mu ? SymPoly{RatFunc(1)} : SymPoly();
    const std::vector<Symbol> xs = letters(n);
    const Symbol z = xs[n - 1];
    SymPoly out;
    for (const Partition& nu : hstrip_predecessors(lam)) {
        if (!nu.contains(mu)) continue;
        const SymPoly& rest = skew_core_locked(nu, mu, n - 1, b);
        if (rest.is_zero()) continue;
        const int w = lam.weight() - nu.weight();
        SymPoly step = SymPoly::letter_power(z, w) *
                       poch_poly(z, nu, b * t_inv());
        step = step.scale(phat_factor(lam, nu) * psi_coeff(lam, nu));
        step = step * rest;
        for (int m = 1; m < n; ++m)
            step = step * strip_poch(xs[m - 1], lam, nu, b);
        out += step;
    }
    return out;
}

/// Divide the core by the cleared factors: probe each factor's numerator
/// for exact division, keep the rest in the denominator, and fold the
/// factors' own letter-free denominators back into the numerator.
RatFunc assemble(const SymPoly& core, const std::vector<RatFunc>& factors) {
    if (core.is_zero()) return RatFunc(0);
    RatFunc base = core.to_ratfunc();
    ExactPoly num = base.num();
    ExactPoly den = base.den();
    ExactPoly units(1);
    for (const RatFunc& f : factors) {
        ExactPoly quot;
        if (num.try_exact_divide(f.num(), quot))
            num = quot;
        else
            den = den * f.num();
        if (!f.den().is_one()) units = units * f.den();
    }
    if (!units.is_one()) num = num * units;
    return RatFunc::from_coprime(num, den);
}

Mono swap_entries(const Mono& m, uint32_t i, uint32_t j) {
    Mono out = m;
    const size_t need = std::max(i, j) + 1;
    if (out.size() < need) out.resize(need, 0);
    std::swap(out[i], out[j]);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

bool core_symmetric(const SymPoly& core, int n) {
    const std::vector<Symbol> xs = letters(n);
    for (int i = 0; i + 1 < n; ++i) {
        std::map<Mono, RatFunc, GrevlexLess> swapped;
        for (const auto& [m, c] : core.terms())
            swapped.emplace(swap_entries(m, xs[i].id, xs[i + 1].id), c);
        if (swapped.size() != core.terms().size()) return false;
        auto it = core.terms().begin();
        for (const auto& [m, c] : swapped) {
            if (m != it->first) return false;
            if (!(c == it->second)) return false;
            ++it;
        }
    }
    return true;
}

}  // namespace

RatFunc branch_coeff(Family fam, const Partition& lam, const Partition& nu,
                     const RatFunc& z, const FamilyParams& pr) {
    if (!lam.contains(nu)) return RatFunc(0);
    const int w = lam.weight() - nu.weight();
    switch (fam) {
        case Family::M: {
            RatFunc az = pr.a / z;
            return z.pow(w) * (gen_poch(az, lam) / gen_poch(az, nu)) *
                   skewP_difference(lam, nu, pr.b);
        }
        case Family::O: {
            if (!horizontal_strip(lam, nu)) return RatFunc(0);
            if (pr.b.is_zero())
                throw std::domain_error("family O requires b != 0");
            std::vector<RatFunc> bases = {pr.a / z, pr.b * z};
            return (gen_poch_list(bases, lam) / gen_poch_list(bases, nu)) *
                   psi_coeff(lam, nu) * pr.b.inverse().pow(w);
        }
        case Family::Rab: {
            if (!horizontal_strip(lam, nu)) return RatFunc(0);
            if (pr.a.is_zero())
                throw std::domain_error("family R(a,b) requires a != 0");
            RatFunc za = z / pr.a;
            return (gen_poch(za, lam) / gen_poch(za, nu)) *
                   (gen_poch(pr.b * z * t_inv(), nu) /
                    gen_poch(pr.b * z, lam)) *
                   psi_coeff(lam, nu) * pr.a.pow(w);
        }
        case Family::Rb: {
            if (!horizontal_strip(lam, nu)) return RatFunc(0);
            return (gen_poch(pr.b * z * t_inv(), nu) /
                    gen_poch(pr.b * z, lam)) *
                   psi_coeff(lam, nu) * z.pow(w);
        }
    }
    throw std::logic_error("branch_coeff: unknown family");
}

FamilyParams evolve_params(Family fam, const FamilyParams& pr) {
    switch (fam) {
        case Family::M:
            return {pr.a / pr.b, pr.b};
        case Family::O:
            return {pr.a * t_inv(), pr.b * t_inv()};
        case Family::Rab:
            return {pr.a * qt_pow(0, 1), pr.b};
        case Family::Rb:
            return pr;
    }
    throw std::logic_error("evolve_params: unknown family");
}

const SymPoly& family_core(Family fam, const Partition& lam, int n,
                           const FamilyParams& pr) {
    if (n < 0) throw std::invalid_argument("family_core: negative letter count");
    return family_core_locked(fam, lam, n, pr);
}

std::vector<RatFunc> family_den_factors(Family fam, const Partition& lam,
                                        int n, const FamilyParams& pr) {
    std::vector<RatFunc> out;
    if (fam == Family::M || lam.empty()) return out;
    const std::vector<Symbol> xs = letters(n);
    for (int m = 1; m <= n; ++m) {
        if (fam == Family::O) {
            out.push_back(RatFunc::variable(xs[m - 1], lam.weight()));
            continue;
        }
        if (pr.b.is_zero()) break;
        const RatFunc x = RatFunc::variable(xs[m - 1]);
        for (int i = 1; i <= lam.length(); ++i)
            for (int j = 0; j < lam.part(i); ++j)
                out.push_back(RatFunc(1) - pr.b * x * qt_pow(j, 1 - i));
    }
    return out;
}

RatFunc family_value(Family fam, const Partition& lam, int n,
                     const FamilyParams& pr) {
    if (n < 0) throw std::invalid_argument("family_value: negative letter count");
    const std::string key = family_key(fam, lam, n, pr);
    {
        std::lock_guard<std::mutex> g(fam_mutex());
        auto it = value_memo().find(key);
        if (it != value_memo().end()) return it->second;
    }
    RatFunc out = assemble(family_core_locked(fam, lam, n, pr),
                           family_den_factors(fam, lam, n, pr));
    std::lock_guard<std::mutex> g(fam_mutex());
    return value_memo().emplace(key, std::move(out)).first->second;
}

RatFunc family_at(Family fam, const Partition& lam,
                  const std::vector<RatFunc>& point, const FamilyParams& pr) {
    const int n = static_cast<int>(point.size());
    const SymPoly& core = family_core(fam, lam, n, pr);
    if (core.is_zero()) return RatFunc(0);
    RatFunc num = eval_at(core, point);
    if (num.is_zero()) return RatFunc(0);
    const std::vector<Symbol> xs = letters(n);
    std::map<uint32_t, RatFunc> bind;
    for (std::size_t i = 0; i < point.size(); ++i) bind[xs[i].id] = point[i];
    RatFunc den(1);
    for (const RatFunc& f : family_den_factors(fam, lam, n, pr))
        den *= f.substitute(bind);
    return num / den;
}

bool family_letter_symmetric(Family fam, const Partition& lam, int n,
                             const FamilyParams& pr) {
    return core_symmetric(family_core(fam, lam, n, pr), n);
}

RatFunc R_value(const Partition& lam, int n, const RatFunc& b) {
    return family_value(Family::Rb, lam, n, FamilyParams{RatFunc(0), b});
}

RatFunc R_at(const Partition& lam, const std::vector<RatFunc>& point,
             const RatFunc& b) {
    return family_at(Family::Rb, lam, point, FamilyParams{RatFunc(0), b});
}

RatFunc R_norm(const Partition& lam, int n, const RatFunc& b) {
    return qt_pow(0, n_stat(lam)) * R_value(lam, n, b) / c_prime(lam);
}

const SymPoly& skew_R_core(const Partition& lam, const Partition& mu, int n,
                           const RatFunc& b) {
    if (n < 0) throw std::invalid_argument("skew_R_core: negative letter count");
    if (!lam.contains(mu)) {
        static const SymPoly zero;
        return zero;
    }
    return skew_core_locked(lam, mu, n, b);
}

bool skew_letter_symmetric(const Partition& lam, const Partition& mu, int n,
                           const RatFunc& b) {
    return core_symmetric(skew_R_core(lam, mu, n, b), n);
}

RatFunc skew_R_norm(const Partition& lam, const Partition& mu, int n,
                    const RatFunc& b) {
    if (!lam.contains(mu)) return RatFunc(0);
    if (n < 0) throw std::invalid_argument("skew_R_norm: negative letter count");
    const std::string key = "val|" + skew_key(lam, mu, n, b);
    {
        std::lock_guard<std::mutex> g(fam_mutex());
        auto it = value_memo().find(key);
        if (it != value_memo().end()) return it->second;
    }
    RatFunc out = assemble(
        skew_core_locked(lam, mu, n, b),
        family_den_factors(Family::Rb, lam, n, FamilyParams{RatFunc(0), b}));
    std::lock_guard<std::mutex> g(fam_mutex());
    return value_memo().emplace(key, std::move(out)).first->second;
}

TruncSeries family_series(Family fam, const Partition& lam, int n,
                          const FamilyParams& pr, int cutoff) {
    if (fam == Family::O)
        throw std::domain_error(
            "family_series: the Laurent family has no power-series form");
    if (n < 0) throw std::invalid_argument("family_series: negative letter count");
    if (n == 0)
        return TruncSeries::scalar(lam.empty() ? RatFunc(1) : RatFunc(0),
                                   cutoff);
    const RatFunc z = RatFunc::variable(letters(n)[n - 1]);
    const FamilyParams inner = evolve_params(fam, pr);
    const std::vector<Partition> preds =
        fam == Family::M ? subdiagrams(lam) : hstrip_predecessors(lam);
    TruncSeries out(cutoff);
    for (const Partition& nu : preds) {
        RatFunc f = branch_coeff(fam, lam, nu, z, pr);
        if (f.is_zero()) continue;
        TruncSeries fs = TruncSeries::from_ratfunc(f, cutoff);
        out += fs * family_series(fam, nu, n - 1, inner, cutoff);
    }
    return out;
}

TruncSeries R_series(const Partition& lam, int n, const RatFunc& b,
                     int cutoff) {
    return family_series(Family::Rb, lam, n, FamilyParams{RatFunc(0), b},
                         cutoff);
}

RatFunc R_closed_tq(const Partition& lam, int n, const RatFunc& b) {
    if (lam.length() > n) return RatFunc(0);
    const std::vector<Symbol> xs = letters(n);
    // Leibniz expansion of det(x_i^{lam_j + n - j} / (b x_i)_{lam_j - j + 1}).
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    RatFunc det;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        RatFunc term = (inversions % 2 == 0) ? RatFunc(1) : RatFunc(-1);
        for (int j = 1; j <= n; ++j) {
            const RatFunc xi = RatFunc::variable(xs[perm[j - 1]]);
            term *= RatFunc::variable(xs[perm[j - 1]], lam.part(j) + n - j) /
                    qpoch_finite(b * xi, lam.part(j) - j + 1);
        }
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    RatFunc vandermonde(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            vandermonde *= RatFunc::variable(xs[i]) - RatFunc::variable(xs[j]);
    return det / vandermonde;
}

RatFunc R_closed_t1(const Partition& lam, int n, const RatFunc& b) {
    const std::vector<Symbol> xs = letters(n);
    RatFunc out;
    for (const std::vector<int>& u : orbit_compositions(lam, n)) {
        RatFunc term(1);
        for (int i = 0; i < n; ++i) {
            const RatFunc xi = RatFunc::variable(xs[i]);
            term *= RatFunc::variable(xs[i], u[i]) / qpoch_finite(b * xi, u[i]);
        }
        out += term;
    }
    return out;
}

RatFunc R_principal(const Partition& lam, int n, const RatFunc& a,
                    const RatFunc& b) {
    if (lam.length() > n) return RatFunc(0);
    const RatFunc tn = qt_pow(0, n);
    const RatFunc abt = a * b * qt_pow(0, n - 1);
    return a.pow(lam.weight()) * qt_pow(0, n_stat(lam)) *
           gen_poch(tn, lam) / (c_low(lam) * gen_poch(abt, lam));
}

std::vector<RatFunc> scaled_spectral_point(const Partition& mu, int n,
                                           const RatFunc& a) {
    std::vector<RatFunc> out = spectral_point(mu, n);
    for (RatFunc& v : out) v *= a;
    return out;
}

RatFunc limit_at_infinity(const RatFunc& f, Symbol s) {
    if (f.is_zero()) return RatFunc(0);
    const int32_t dn = f.num().max_exponent(s);
    const int32_t dd = f.den().max_exponent(s);
    if (dn < dd) return RatFunc(0);
    if (dn > dd)
        throw std::domain_error("limit_at_infinity: numerator dominates");
    auto leading = [&](const ExactPoly& p, int32_t d) {
        ExactPoly out;
        for (const auto& [m, c] : p.terms()) {
            int32_t e = s.id < m.size() ? m[s.id] : 0;
            if (e != d) continue;
            Mono stripped = m;
            if (s.id < stripped.size()) stripped[s.id] = 0;
            while (!stripped.empty() && stripped.back() == 0)
                stripped.pop_back();
            out.add_term(stripped, c);
        }
        return out;
    };
    return RatFunc(leading(f.num(), dn), leading(f.den(), dd));
}

RatFunc eval_letters(const RatFunc& f, const std::vector<RatFunc>& point) {
    const std::vector<Symbol> xs = letters(static_cast<int>(point.size()));
    std::map<uint32_t, RatFunc> bind;
    for (std::size_t i = 0; i < point.size(); ++i) bind[xs[i].id] = point[i];
    return f.substitute(bind);
}

void family_cache_clear() {
    std::lock_guard<std::mutex> g(fam_mutex());
    core_memo().clear();
    value_memo().clear();
}

std::size_t family_cache_size() {
    std::lock_guard<std::mutex> g(fam_mutex());
    return core_memo().size() + value_memo().size();
}

}  // namespace qsym
