/**
 * @file identities.cpp
 * The identity catalog.  Finite identities compare exact rational
 * functions over sweeps of small shapes; series identities compare
 * truncated power series in the alphabet letters, where a sum over all
 * partitions may be cut at |lam| <= D because every lam-term starts at
 * letter degree |lam| (or |lam - mu| for the skew forms).
 */
#include "qsym/identities.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "qsym/macdonald.hpp"
#include "qsym/operators.hpp"
#include "qsym/qfactors.hpp"

namespace qsym {

namespace {

RatFunc qv() { return RatFunc::variable(std_syms().q); }
RatFunc tv() { return RatFunc::variable(std_syms().t); }
RatFunc one() { return RatFunc(1); }

struct Ctx {
    const CheckConfig& cfg;
    Witness* witness;
    int n() const { return cfg.n; }
    int D() const { return cfg.D; }
    int W() const { return cfg.max_weight; }
    bool mutate() const { return cfg.mutate; }
};

/// Named parameter: the binding if present, the registered symbol else.
RatFunc param(const Ctx& ctx, const std::string& name) {
    auto it = ctx.cfg.bindings.find(name);
    if (it != ctx.cfg.bindings.end()) return it->second;
    return RatFunc::variable(SymbolTable::instance().parameter(name));
}

std::string squeeze(std::string s) {
    if (s.size() > 160) {
        s.resize(157);
        s += "...";
    }
    return s;
}

std::string mono_str(const Mono& m) {
    auto& tb = SymbolTable::instance();
    std::string out;
    for (uint32_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += ' ';
        out += tb.name(Symbol{i});
        if (m[i] != 1) out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

bool series_match(const Ctx& ctx, const std::string& where,
                  const TruncSeries& lhs, const TruncSeries& rhs) {
    std::optional<SeriesDiff> diff = first_difference(lhs, rhs);
    if (!diff) return true;
    if (ctx.witness)
        *ctx.witness = {where + " at " + mono_str(diff->mono),
                        squeeze(diff->lhs.to_string()),
                        squeeze(diff->rhs.to_string())};
    return false;
}

bool values_match(const Ctx& ctx, const std::string& where, const RatFunc& lhs,
                  const RatFunc& rhs) {
    if (lhs == rhs) return true;
    if (ctx.witness)
        *ctx.witness = {where, squeeze(lhs.to_string()),
                        squeeze(rhs.to_string())};
    return false;
}

RatFunc rf_pow(const RatFunc& v, int e) {
    return e >= 0 ? v.pow(e) : v.inverse().pow(-e);
}

/// Hook normalization turning the plain family value into the form the
/// summation identities are stated for: t^{n(lam)} / c'_lam.
RatFunc hook_norm(const Partition& lam) {
    return qt_pow(0, n_stat(lam)) / c_prime(lam);
}

TruncSeries Rn_series(const Partition& lam, int n, const RatFunc& b, int D) {
    return R_series(lam, n, b, D).scale(hook_norm(lam));
}

TruncSeries skew_Rn_series(const Partition& lam, const Partition& mu, int n,
                           const RatFunc& b, int D) {
    return TruncSeries::from_ratfunc(skew_R_norm(lam, mu, n, b), D);
}

/// Hook-normalized skew Macdonald polynomial as a truncated series.
TruncSeries nP_series(const Partition& lam, const Partition& mu, int n,
                      int D) {
    return skew_P(lam, mu, n).to_series(D).scale(phat_factor(lam, mu));
}

/// Non-normalized skew P at the two-term difference alphabet; divides the
/// hook ratio back out of the normalized evaluation.
RatFunc plainP_diff(const Partition& lam, const Partition& mu,
                    const RatFunc& A, const RatFunc& B) {
    return skewQ_diff(lam, mu, A, B) / qhat_factor(lam, mu);
}

/// All lam containing mu with |lam| <= maxw and at most maxlen rows.
std::vector<Partition> over_shapes(const Partition& mu, int maxw, int maxlen) {
    std::vector<Partition> out;
    for (const Partition& lam : partitions_upto(maxw, maxlen))
        if (lam.contains(mu)) out.push_back(lam);
    return out;
}

std::vector<Partition> shape_sweep(const Ctx& ctx, int maxlen) {
    return partitions_upto(ctx.W(), maxlen);
}

std::string fam_name(Family f) {
    switch (f) {
        case Family::M: return "M";
        case Family::O: return "O";
        case Family::Rab: return "Rab";
        default: return "Rb";
    }
}

// --- catalog entries ------------------------------------------------------

/// Commuting the order of two branching steps: for every nu inside lam,
/// summing f_{lam/mu}(z) f_{mu/nu}(y) over the middle shape is symmetric
/// in y and z once the inner step uses the evolved parameters.  This is
/// the sufficient condition for the recursion to produce symmetric
/// functions, checked for the three two-parameter rules.
bool run_suf_symmetry(const Ctx& ctx) {
    RatFunc zp = param(ctx, "z");
    RatFunc yp = param(ctx, "y");
    FamilyParams pr{param(ctx, "a"), param(ctx, "b")};
    for (Family fam : {Family::M, Family::O, Family::Rab}) {
        FamilyParams ev = evolve_params(fam, pr);
        // canary: forget to evolve the parameters of the inner step
        FamilyParams inner = ctx.mutate() ? pr : ev;
        for (const Partition& lam : shape_sweep(ctx, 3)) {
            for (const Partition& nu : subdiagrams(lam)) {
                RatFunc lhs(0), rhs(0);
                for (const Partition& mu : subdiagrams(lam)) {
                    if (!mu.contains(nu)) continue;
                    lhs += branch_coeff(fam, lam, mu, zp, pr) *
                           branch_coeff(fam, mu, nu, yp, inner);
                    rhs += branch_coeff(fam, lam, mu, yp, pr) *
                           branch_coeff(fam, mu, nu, zp, ev);
                }
                if (!values_match(ctx,
                                  fam_name(fam) + " lambda=(" +
                                      lam.to_string() + ") nu=(" +
                                      nu.to_string() + ")",
                                  lhs, rhs))
                    return false;
            }
        }
    }
    return true;
}

/// Skew Cauchy identity for the hook-normalized Macdonald polynomials:
/// the lam-sum against Q_{lam/nu} at the (a - c)-difference alphabet
/// equals the reversed sum times prod (c x)_inf / (a x)_inf.  Includes
/// the binomial-theorem case sum (a)_lam P^_lam = prod (a x)_inf/(x)_inf.
bool run_skew_cauchy_macdonald(const Ctx& ctx) {
    const int n = ctx.n(), D = ctx.D();
    RatFunc a = param(ctx, "a"), c = param(ctx, "c");
    std::vector<Symbol> letts = letters(n);
    {
        TruncSeries lhs(D);
        for (const Partition& lam : partitions_upto(D, n))
            lhs += nP_series(lam, {}, n, D).scale(gen_poch(a, lam));
        TruncSeries rhs = poch_product_series({a}, {one()}, letts, D);
        if (!series_match(ctx, "binomial theorem", lhs, rhs)) return false;
    }
    // canary: swap the two infinite-product parameters
    TruncSeries prod =
        ctx.mutate() ? poch_product_series({a}, {c}, letts, D)
                     : poch_product_series({c}, {a}, letts, D);
    for (const Partition& mu : shape_sweep(ctx, 2)) {
        for (const Partition& nu : shape_sweep(ctx, 2)) {
            TruncSeries lhs(D);
            for (const Partition& lam :
                 over_shapes(mu, mu.weight() + D, mu.length() + n)) {
                RatFunc coef = skewQ_diff(lam, nu, a, c);
                if (coef.is_zero()) continue;
                lhs += nP_series(lam, mu, n, D).scale(coef);
            }
            TruncSeries rhs(D);
            for (const Partition& lam : subdiagrams(nu)) {
                if (!mu.contains(lam)) continue;
                RatFunc coef = skewQ_diff(mu, lam, a, c);
                if (coef.is_zero()) continue;
                rhs += nP_series(nu, lam, n, D).scale(coef);
            }
            rhs = prod * rhs;
            if (!series_match(ctx,
                              "mu=(" + mu.to_string() + ") nu=(" +
                                  nu.to_string() + ")",
                              lhs, rhs))
                return false;
        }
    }
    return true;
}

/// Pieri-type expansion: P^_mu(X) prod (b x)_inf / (a x)_inf expands in
/// the P^ basis with Q_{lam/mu} at the (a - b)-difference alphabet as
/// coefficients.
bool run_pieri_macdonald(const Ctx& ctx) {
    const int n = ctx.n(), D = ctx.D();
    RatFunc a = param(ctx, "a"), b = param(ctx, "b");
    std::vector<Symbol> letts = letters(n);
    TruncSeries prod = poch_product_series({b}, {a}, letts, D);
    for (const Partition& mu : shape_sweep(ctx, n)) {
        TruncSeries lhs = nP_series(mu, {}, n, D) * prod;
        TruncSeries rhs(D);
        for (const Partition& lam : over_shapes(mu, D, n)) {
            // canary: reverse the difference alphabet
            RatFunc coef = ctx.mutate() ? skewQ_diff(lam, mu, b, a)
                                        : skewQ_diff(lam, mu, a, b);
            if (coef.is_zero()) continue;
            rhs += nP_series(lam, {}, n, D).scale(coef);
        }
        if (!series_match(ctx, "mu=(" + mu.to_string() + ")", lhs, rhs))
            return false;
    }
    return true;
}

/// Skew Cauchy identity for the one-parameter family, under the balance
/// d = ab/c: the sum of (b/c)-weighted skew family values against
/// Q_{lam/nu} equals the reversed sum at parameter d times
/// prod (c x, d x)_inf / (a x, b x)_inf.
bool run_skew_cauchy_R(const Ctx& ctx) {
    const int n = ctx.n(), D = ctx.D();
    RatFunc a = param(ctx, "a"), b = param(ctx, "b"), c = param(ctx, "c");
    RatFunc d = a * b / c;
    std::vector<Symbol> letts = letters(n);
    // canary: misstate the balancing parameter inside the product
    TruncSeries prod =
        ctx.mutate() ? poch_product_series({c, d}, {a, d}, letts, D)
                     : poch_product_series({c, d}, {a, b}, letts, D);
    for (const Partition& mu : shape_sweep(ctx, 2)) {
        for (const Partition& nu : shape_sweep(ctx, 2)) {
            TruncSeries lhs(D);
            for (const Partition& lam :
                 over_shapes(mu, mu.weight() + D, mu.length() + n)) {
                RatFunc coef = skewQ_diff(lam, nu, a, c);
                if (coef.is_zero()) continue;
                coef *= gen_poch(b / c, lam) / gen_poch(b / c, nu);
                lhs += skew_Rn_series(lam, mu, n, b, D).scale(coef);
            }
            TruncSeries rhs(D);
            for (const Partition& lam : subdiagrams(nu)) {
                if (!mu.contains(lam)) continue;
                RatFunc coef = skewQ_diff(mu, lam, a, c);
                if (coef.is_zero()) continue;
                coef *= gen_poch(b / c, mu) / gen_poch(b / c, lam);
                rhs += skew_Rn_series(nu, lam, n, d, D).scale(coef);
            }
            rhs = prod * rhs;
            if (!series_match(ctx,
                              "mu=(" + mu.to_string() + ") nu=(" +
                                  nu.to_string() + ")",
                              lhs, rhs))
                return false;
        }
    }
    return true;
}

/// Pieri formula for the one-parameter family (d = ab/c):
/// R^_mu(X; d) prod (c x, d x)_inf / (a x, b x)_inf expands over R^_lam(X; b)
/// with (b/c)-ratio times Q_{lam/mu} coefficients.
bool run_pieri_R(const Ctx& ctx) {
    const int n = ctx.n(), D = ctx.D();
    RatFunc a = param(ctx, "a"), b = param(ctx, "b"), c = param(ctx, "c");
    RatFunc d = a * b / c;
    std::vector<Symbol> letts = letters(n);
    TruncSeries prod = poch_product_series({c, d}, {a, b}, letts, D);
    for (const Partition& mu : shape_sweep(ctx, n)) {
        TruncSeries lhs =
            TruncSeries::from_ratfunc(R_norm(mu, n, d), D) * prod;
        TruncSeries rhs(D);
        for (const Partition& lam : over_shapes(mu, D, n)) {
            RatFunc coef = skewQ_diff(lam, mu, a, c);
            if (coef.is_zero()) continue;
            // canary: drop the shifted-factorial ratio
            if (!ctx.mutate())
                coef *= gen_poch(b / c, lam) / gen_poch(b / c, mu);
            rhs += Rn_series(lam, n, b, D).scale(coef);
        }
        if (!series_match(ctx, "mu=(" + mu.to_string() + ")", lhs, rhs))
            return false;
    }
    return true;
}

/// q-binomial formula: sum over lam of (b)_lam/(b)_mu qbin(lam, mu)
/// P^_lam(X) equals R^_mu(X; b) prod (b x)_inf / (x)_inf, together with
/// its b = 0 degeneration (the pure q-binomial expansion of
/// P^_mu(X) / prod (x)_inf).
bool run_q_binomial_R(const Ctx& ctx) {
    const int n = ctx.n(), D = ctx.D();
    std::vector<Symbol> letts = letters(n);
    std::vector<std::pair<std::string, RatFunc>> slots = {
        {"", param(ctx, "b")}, {" [b=0]", RatFunc(0)}};
    for (const auto& [tag, b] : slots) {
        TruncSeries prod = poch_product_series({b}, {one()}, letts, D);
        for (const Partition& mu : shape_sweep(ctx, n)) {
            TruncSeries lhs(D);
            for (const Partition& lam : over_shapes(mu, D, n)) {
                RatFunc coef = qbinom(lam, mu);
                if (coef.is_zero()) continue;
                coef *= ctx.mutate() ? gen_poch(b, lam)  // canary: no ratio
                                     : gen_poch(b, lam) / gen_poch(b, mu);
                lhs += nP_series(lam, {}, n, D).scale(coef);
            }
            TruncSeries rhs =
                TruncSeries::from_ratfunc(R_norm(mu, n, b), D) * prod;
            if (!series_match(ctx, "mu=(" + mu.to_string() + ")" + tag, lhs,
                              rhs))
                return false;
        }
        if (ctx.cfg.bindings.count("b")) break;  // caller pinned b already
    }
    return true;
}

/// Summation with a single free numerator parameter: the c-powered sum of
/// (b/c)-ratio times Q_{lam/mu}[(0-1)/(1-t)] times R^_lam(X; b) collapses
/// to P^_mu(X) prod (c x)_inf / (b x)_inf.
bool run_one_phi_one(const Ctx& ctx) {
    const int n = ctx.n(), D = ctx.D();
    RatFunc b = param(ctx, "b"), c = param(ctx, "c");
    std::vector<Symbol> letts = letters(n);
    TruncSeries prod = poch_product_series({c}, {b}, letts, D);
    for (const Partition& mu : shape_sweep(ctx, n)) {
        TruncSeries lhs(D);
        for (const Partition& lam : over_shapes(mu, D, n)) {
            RatFunc coef = skewQ_diff(lam, mu, RatFunc(0), one());
            if (coef.is_zero()) continue;
            // canary: wrong power of c (total instead of skew weight)
            int e = ctx.mutate() ? lam.weight() : lam.weight() - mu.weight();
            coef *= c.pow(e) * gen_poch(b / c, lam) / gen_poch(b / c, mu);
            lhs += Rn_series(lam, n, b, D).scale(coef);
        }
        TruncSeries rhs = nP_series(mu, {}, n, D) * prod;
        if (!series_match(ctx, "mu=(" + mu.to_string() + ")", lhs, rhs))
            return false;
    }
    return true;
}

/// q-Gauss summation for the one-parameter family: in skew form
///   sum (c/ab)^{|lam - mu|} (a,b)_lam/(a,b)_mu R^_{lam/mu}(X; c)
///     = prod (c x/a, c x/b)_inf / (c x, c x/ab)_inf,
/// plus two reductions: the one-letter collapse to the classical sum and
/// the principal specialization x_i = w t^{1-i} graded by the letter w.
bool run_q_gauss(const Ctx& ctx) {
    const int n = ctx.n(), D = ctx.D();
    RatFunc a = param(ctx, "a"), b = param(ctx, "b"), c = param(ctx, "c");
    RatFunc z = c / (a * b);
    std::vector<Symbol> letts = letters(n);
    TruncSeries prod =
        poch_product_series({c / a, c / b}, {c, z}, letts, D);
    // canary: repeat a numerator parameter
    std::vector<RatFunc> uppers =
        ctx.mutate() ? std::vector<RatFunc>{a, a} : std::vector<RatFunc>{a, b};
    for (const Partition& mu : shape_sweep(ctx, 2)) {
        TruncSeries lhs(D);
        for (const Partition& lam :
             over_shapes(mu, mu.weight() + D, mu.length() + n)) {
            RatFunc coef = z.pow(lam.weight() - mu.weight()) *
                           gen_poch_list(uppers, lam) /
                           gen_poch_list(uppers, mu);
            lhs += skew_Rn_series(lam, mu, n, c, D).scale(coef);
        }
        if (!series_match(ctx, "mu=(" + mu.to_string() + ")", lhs, prod))
            return false;
    }
    // one-letter reduction: single rows survive, giving the classical
    // series with the (q)_k hook normalization and the (c x)_k tail
    {
        Symbol x = letters(1)[0];
        RatFunc xv = RatFunc::variable(x);
        TruncSeries classic(D);
        for (int k = 0; k <= D; ++k) {
            RatFunc coef = qpoch_finite(a, k) * qpoch_finite(b, k) /
                           qpoch_finite(qv(), k) * z.pow(k);
            classic += TruncSeries::from_ratfunc(
                coef * RatFunc::variable(x, k) / qpoch_finite(c * xv, k), D);
        }
        TruncSeries hyper = hyperseries({a, b}, {c}, z, 1, D);
        if (!series_match(ctx, "one-letter hypergeometric reduction", hyper,
                          classic))
            return false;
        TruncSeries prod1 =
            poch_product_series({c / a, c / b}, {c, z}, letters(1), D);
        if (!series_match(ctx, "classical q-gauss", classic, prod1))
            return false;
    }
    // principal specialization: evaluate at x_i = w t^{1-i} and compare
    // against the product over the geometric parameter ladder, using the
    // scaling letter w to keep the grading by |lam|
    {
        Symbol w = std_syms().w;
        RatFunc wv = RatFunc::variable(w);
        std::vector<RatFunc> point, nums, dens;
        for (int i = 1; i <= n; ++i) {
            RatFunc step = qt_pow(0, 1 - i);
            point.push_back(wv * step);
            nums.push_back(c * step / a);
            nums.push_back(c * step / b);
            dens.push_back(c * step);
            dens.push_back(c * step / (a * b));
        }
        TruncSeries lhs(D);
        for (const Partition& lam : partitions_upto(D, n)) {
            RatFunc term = z.pow(lam.weight()) * gen_poch_list({a, b}, lam) *
                           hook_norm(lam) * R_at(lam, point, c);
            lhs += TruncSeries::from_ratfunc(term, D);
        }
        TruncSeries rhs = poch_product_series(nums, dens, {w}, D);
        if (!series_match(ctx, "principal specialization", lhs, rhs))
            return false;
    }
    return true;
}

/// Taylor expansion of R^_mu(X; b) in b: the coefficient of b^r collects
/// (1)_{lam/mu} qbin(lam, mu) P^_lam(X) over lam covering mu with r boxes.
bool run_b_taylor(const Ctx& ctx) {
    const int n = ctx.n(), D = ctx.D();
    RatFunc b = param(ctx, "b");
    for (const Partition& mu : shape_sweep(ctx, n)) {
        TruncSeries lhs = TruncSeries::from_ratfunc(R_norm(mu, n, b), D);
        TruncSeries rhs(D);
        for (const Partition& lam : over_shapes(mu, D, n)) {
            RatFunc coef = qbinom(lam, mu);
            if (coef.is_zero()) continue;
            coef *= b.pow(lam.weight() - mu.weight());
            // canary: drop the limiting shifted-factorial ratio
            if (!ctx.mutate()) coef *= RatFunc(one_poch_skew(lam, mu));
            rhs += nP_series(lam, {}, n, D).scale(coef);
        }
        if (!series_match(ctx, "mu=(" + mu.to_string() + ")", lhs, rhs))
            return false;
    }
    return true;
}

/// Generalized q-Pfaff-Saalschutz summation: the middle-shape sum of
/// (a)_mu/(c)_mu times the two difference-alphabet Q factors telescopes
/// to a single Q_{lam/nu} with explicit shifted-factorial prefactors.
/// Exact in the three symbolic parameters; no truncation anywhere.
bool run_saalschutz(const Ctx& ctx) {
    RatFunc a = param(ctx, "a"), b = param(ctx, "b"), c = param(ctx, "c");
    for (const Partition& lam : shape_sweep(ctx, 3)) {
        for (const Partition& nu : subdiagrams(lam)) {
            RatFunc lhs(0);
            for (const Partition& mu : subdiagrams(lam)) {
                if (!mu.contains(nu)) continue;
                RatFunc inner = skewQ_diff(lam, mu, a, b) *
                                skewQ_diff(mu, nu, b, c);
                if (inner.is_zero()) continue;
                // canary: divide by the wrong lower parameter
                lhs += inner * gen_poch(a, mu) /
                       gen_poch(ctx.mutate() ? b : c, mu);
            }
            RatFunc rhs = gen_poch(a, nu) * gen_poch(b, lam) /
                          (gen_poch(b, nu) * gen_poch(c, lam)) *
                          skewQ_diff(lam, nu, a, c);
            if (!values_match(ctx,
                              "lambda=(" + lam.to_string() + ") nu=(" +
                                  nu.to_string() + ")",
                              lhs, rhs))
                return false;
        }
    }
    return true;
}

/// Sears-type transformation for skew Macdonald polynomials at difference
/// alphabets: the middle-shape sum is invariant under exchanging the
/// parameter pairs (b, c) and (d, e).  Exact in all five parameters.
bool run_sears(const Ctx& ctx) {
    RatFunc a = param(ctx, "a"), b = param(ctx, "b"), c = param(ctx, "c"),
            d = param(ctx, "d"), e = param(ctx, "e");
    RatFunc aq = a * qv();
    RatFunc tail = aq * aq / (b * c * d * e);
    auto side = [&](const Partition& lam, const Partition& nu,
                    const RatFunc& u1, const RatFunc& u2, const RatFunc& v1,
                    const RatFunc& v2) {
        RatFunc acc(0);
        RatFunc vmid = aq / (v1 * v2);
        for (const Partition& mu : subdiagrams(lam)) {
            if (!mu.contains(nu)) continue;
            RatFunc term = plainP_diff(lam, mu, one(), vmid) *
                           plainP_diff(mu, nu, vmid, tail);
            if (term.is_zero()) continue;
            term *= gen_poch_list({aq / u1, aq / u2}, lam) /
                    gen_poch_list({aq / u1, aq / u2}, mu);
            term *= gen_poch_list({v1, v2}, mu) /
                    gen_poch_list({v1, v2}, nu);
            acc += term;
        }
        return acc;
    };
    for (const Partition& lam : shape_sweep(ctx, 2)) {
        for (const Partition& nu : subdiagrams(lam)) {
            RatFunc lhs = side(lam, nu, b, c, d, e);
            // canary: collapse the exchanged pair to a repeated parameter
            RatFunc rhs = ctx.mutate() ? side(lam, nu, d, d, b, c)
                                       : side(lam, nu, d, e, b, c);
            if (!values_match(ctx,
                              "lambda=(" + lam.to_string() + ") nu=(" +
                                  nu.to_string() + ")",
                              lhs, rhs))
                return false;
        }
    }
    return true;
}

/// Skew summation behind the Cauchy identity: both sides are power series
/// in the auxiliary letter w standing for the ratio c/(ab) of the third
/// parameter (so c = a b w throughout), multiplied out by the infinite
/// products so that every coefficient is reachable at a finite cutoff.
bool run_propskew(const Ctx& ctx) {
    const int D = ctx.D();
    RatFunc a = param(ctx, "a"), b = param(ctx, "b");
    Symbol w = std_syms().w;
    RatFunc wv = RatFunc::variable(w);
    TruncSeries lhs_prod = poch_product_series({a * b, one()}, {}, {w}, D);
    TruncSeries rhs_prod = poch_product_series({b, a}, {}, {w}, D);
    for (const Partition& mu : shape_sweep(ctx, 2)) {
        for (const Partition& nu : shape_sweep(ctx, 2)) {
            TruncSeries lhs(D);
            for (const Partition& lam :
                 over_shapes(mu, mu.weight() + D, mu.length() + 1)) {
                if (!horizontal_strip(lam, mu)) continue;
                RatFunc psi = psi_coeff(lam, mu);
                RatFunc qpart = skewQ_diff(lam, nu, one(), b);
                if (psi.is_zero() || qpart.is_zero()) continue;
                RatFunc term = gen_poch(a, lam) / gen_poch(a * b * wv, lam) *
                               phat_factor(lam, mu) * psi *
                               wv.pow(lam.weight() - mu.weight()) * qpart;
                lhs += TruncSeries::from_ratfunc(term, D);
            }
            lhs *= lhs_prod;
            TruncSeries rhs = rhs_prod;
            rhs *= TruncSeries::from_ratfunc(
                gen_poch(a, mu) / gen_poch(a * b * wv / tv(), mu) *
                    gen_poch(a, nu) / gen_poch(a * wv, nu),
                D);
            TruncSeries sum(D);
            for (const Partition& lam : subdiagrams(nu)) {
                if (!horizontal_strip(nu, lam) || !mu.contains(lam)) continue;
                RatFunc psi = psi_coeff(nu, lam);
                RatFunc qpart = skewQ_diff(mu, lam, one(), b);
                if (psi.is_zero() || qpart.is_zero()) continue;
                // canary: drop the /t shift in the lower parameter
                RatFunc low = ctx.mutate() ? a * wv : a * wv / tv();
                RatFunc term = gen_poch(low, lam) / gen_poch(a, lam) *
                               phat_factor(nu, lam) * psi *
                               wv.pow(nu.weight() - lam.weight()) * qpart;
                sum += TruncSeries::from_ratfunc(term, D);
            }
            rhs *= sum;
            if (!series_match(ctx,
                              "mu=(" + mu.to_string() + ") nu=(" +
                                  nu.to_string() + ")",
                              lhs, rhs))
                return false;
        }
    }
    return true;
}

/// Cauchy-type transformation with a terminating numerator parameter
/// q^{-N}: the skew double product over P at a single letter and Q at the
/// (1 - d)-difference alphabet transforms across the diagram, with the
/// terminating sum evaluated in closed form by the classical
/// Saalschutz summation.  Balance: e f = a d q^{1-N}.
bool run_rains_terminating(const Ctx& ctx) {
    const int N = 2;
    RatFunc a = param(ctx, "a"), d = param(ctx, "d"), e = param(ctx, "e");
    RatFunc qN = qt_pow(-N, 0);
    RatFunc f = a * d * qt_pow(1 - N, 0) / e;
    RatFunc balance = qpoch_finite(e / a, N) * qpoch_finite(e / d, N) /
                      (qpoch_finite(e, N) * qpoch_finite(e / (a * d), N));
    for (const Partition& mu : shape_sweep(ctx, 2)) {
        if (mu.part(1) > N) continue;  // keep the terminating ratios finite
        for (const Partition& nu : shape_sweep(ctx, 2)) {
            if (nu.part(1) > N) continue;
            RatFunc lhs(0);
            for (const Partition& lam :
                 over_shapes(mu, N * (mu.length() + 1), mu.length() + 1)) {
                if (lam.part(1) > N || !horizontal_strip(lam, mu)) continue;
                RatFunc psi = psi_coeff(lam, mu);
                RatFunc qpart = skewQ_diff(lam, nu, one(), d);
                if (psi.is_zero() || qpart.is_zero()) continue;
                lhs += rf_pow(qv(), lam.weight()) *
                       gen_poch_list({a, qN}, lam) /
                       gen_poch_list({e, f}, lam) * phat_factor(lam, mu) *
                       psi * qpart;
            }
            RatFunc rhs(0);
            for (const Partition& lam : subdiagrams(nu)) {
                if (!horizontal_strip(nu, lam) || !mu.contains(lam)) continue;
                RatFunc psi = psi_coeff(nu, lam);
                RatFunc qpart = skewQ_diff(mu, lam, one(), d);
                if (psi.is_zero() || qpart.is_zero()) continue;
                rhs += (d * tv() / qv()).pow(lam.weight()) *
                       gen_poch_list({e / (d * tv()), f / (d * tv())}, lam) /
                       gen_poch_list({a, qN}, lam) * phat_factor(nu, lam) *
                       psi * qpart;
            }
            // canary: forget the q/t power balancing the mu prefactor
            RatFunc pre = ctx.mutate()
                              ? one()
                              : (qv() / tv()).pow(mu.weight());
            rhs *= pre * gen_poch_list({a, qN}, mu) /
                   gen_poch_list({e / tv(), f / tv()}, mu) *
                   (qv() / d).pow(nu.weight()) *
                   gen_poch_list({a, qN}, nu) /
                   gen_poch_list({e / d, f / d}, nu) * balance;
            if (!values_match(ctx,
                              "mu=(" + mu.to_string() + ") nu=(" +
                                  nu.to_string() + ")",
                              lhs, rhs))
                return false;
        }
    }
    return true;
}

/// Kummer-Thomae-Whipple-type transformation (f = de/bc): the series with
/// numerator pair (a, b) and family parameter e transforms into the series
/// with numerator pair (a, d/c) and family parameter f, with the skew
/// shape mu carried through by difference-alphabet Q factors.  The mu = 0
/// corollary is checked in hypergeometric-series notation, including its
/// d = c collapse to the q-Gauss product.
bool run_ktw(const Ctx& ctx) {
    const int n = ctx.n(), D = ctx.D();
    RatFunc a = param(ctx, "a"), b = param(ctx, "b"), c = param(ctx, "c"),
            d = param(ctx, "d"), e = param(ctx, "e");
    // canary: break the balancing relation for the new parameter
    RatFunc f = ctx.mutate() ? d * e / b : d * e / (b * c);
    std::vector<Symbol> letts = letters(n);
    TruncSeries prod = poch_product_series({f, e / a}, {e, f / a}, letts, D);
    for (const Partition& mu : shape_sweep(ctx, n)) {
        TruncSeries lhs(D);
        TruncSeries sum(D);
        for (const Partition& lam : over_shapes(mu, D, n)) {
            RatFunc ql = skewQ_diff(lam, mu, f / a, c * f / a);
            if (!ql.is_zero())
                lhs += Rn_series(lam, n, e, D)
                           .scale(ql * gen_poch_list({a, b}, lam) /
                                  gen_poch(d, lam));
            RatFunc qr = skewQ_diff(lam, mu, e / a, c * f / a);
            if (!qr.is_zero())
                sum += Rn_series(lam, n, f, D)
                           .scale(qr * gen_poch_list({a, d / c}, lam) /
                                  gen_poch(d, lam));
        }
        TruncSeries rhs =
            (prod * sum).scale(gen_poch(b, mu) / gen_poch(d / c, mu));
        if (!series_match(ctx, "mu=(" + mu.to_string() + ")", lhs, rhs))
            return false;
    }
    {
        TruncSeries l3 = hyperseries({a, b, c}, {d, e}, f / a, n, D);
        TruncSeries r3 =
            prod * hyperseries({a, d / b, d / c}, {d, f}, e / a, n, D);
        if (!series_match(ctx, "hypergeometric corollary", l3, r3))
            return false;
    }
    {
        // d = c: the transformed series collapses and the identity becomes
        // the q-Gauss summation with parameter e
        TruncSeries lred =
            hyperseries({a, b, c}, {c, e}, e / (a * b), n, D);
        TruncSeries gauss = poch_product_series({e / a, e / b},
                                                {e, e / (a * b)}, letts, D);
        if (!series_match(ctx, "collapse at d=c", lred, gauss)) return false;
    }
    return true;
}

/// Heine-type transformation of the 2-1 hypergeometric series: pulling
/// the product prod (c x/a, a z x)_inf / (c x, z x)_inf across swaps
/// (b, z) for (a b z/c, c/a) around the base point a z.
bool run_heine(const Ctx& ctx) {
    const int n = ctx.n(), D = ctx.D();
    RatFunc a = param(ctx, "a"), b = param(ctx, "b"), c = param(ctx, "c"),
            z = param(ctx, "z");
    std::vector<Symbol> letts = letters(n);
    TruncSeries lhs = hyperseries({a, b}, {c}, z, n, D);
    // canary: drop b from the transported numerator parameter
    RatFunc moved = ctx.mutate() ? a * z / c : a * b * z / c;
    TruncSeries rhs = poch_product_series({c / a, a * z}, {c, z}, letts, D) *
                      hyperseries({a, moved}, {a * z}, c / a, n, D);
    return series_match(ctx, "heine", lhs, rhs);
}

/// Eigen-relation of the two-parameter subset-sum operator on the family:
/// applying it at parameter b multiplies the value at bq by the product
/// prod_i (1 - c q^{lam_i} t^{n-i}).
bool run_dn_bc_eigen(const Ctx& ctx) {
    RatFunc b = param(ctx, "b"), c = param(ctx, "c");
    const int nmax = std::min(ctx.n(), 2);
    for (int n = 1; n <= nmax; ++n) {
        for (const Partition& lam :
             partitions_upto(std::min(ctx.W(), 2), n)) {
            RatFunc r = R_value(lam, n, b);
            RatFunc lhs = apply_op(op_two_param(n, b, c), r);
            RatFunc eig = eigenvalue_product(lam, n,
                                             ctx.mutate() ? c * qv() : c);
            RatFunc rhs = R_value(lam, n, b * qv()) * eig;
            if (!values_match(ctx,
                              "lambda=(" + lam.to_string() + ") n=" +
                                  std::to_string(n),
                              lhs, rhs))
                return false;
        }
    }
    return true;
}

/// Eigen-relation of the inverted first-order operator on the family:
/// the eigenvalue is the inverted spectral sum of the shape.
bool run_calD_eigen(const Ctx& ctx) {
    RatFunc b = param(ctx, "b");
    const int nmax = std::min(ctx.n(), 2);
    for (int n = 1; n <= nmax; ++n) {
        for (const Partition& lam :
             partitions_upto(std::min(ctx.W(), 2), n)) {
            RatFunc r = R_value(lam, n, b);
            RatFunc lhs = apply_op(op_inverse_first_order(n, b), r);
            RatFunc eig = ctx.mutate() ? eigenvalue_sum(lam, n)
                                       : eigenvalue_sum_inverted(lam, n);
            if (!values_match(ctx,
                              "lambda=(" + lam.to_string() + ") n=" +
                                  std::to_string(n),
                              lhs, eig * r))
                return false;
        }
    }
    return true;
}

/// Action of the two-parameter operator on a Macdonald polynomial:
/// vertical-strip expansion with column branching coefficients and the
/// row-split eigen factors.
bool run_dn_bc_on_P(const Ctx& ctx) {
    RatFunc b = param(ctx, "b"), c = param(ctx, "c");
    const int nmax = std::min(ctx.n(), 2);
    for (int n = 1; n <= nmax; ++n) {
        for (const Partition& mu :
             partitions_upto(std::min(ctx.W(), 2), n)) {
            RatFunc lhs = apply_op(op_two_param(n, b, c),
                                   macdonald_P(mu, n).to_ratfunc());
            RatFunc rhs(0);
            for (const Partition& lam : partitions_upto(mu.weight() + n, n)) {
                if (!lam.contains(mu) || !vertical_strip(lam, mu)) continue;
                RatFunc term = psi_prime_coeff(lam, mu);
                if (term.is_zero()) continue;
                if (ctx.mutate()) term = one();  // canary: drop the branch weight
                term *= (-b).pow(lam.weight() - mu.weight());
                for (int i = 1; i <= n; ++i) {
                    long li = lam.part(i), mi = mu.part(i);
                    term *= li == mi ? one() - c * qt_pow(li, n - i)
                                     : one() - qt_pow(mi, 1 - i);
                }
                rhs += term * macdonald_P(lam, n).to_ratfunc();
            }
            if (!values_match(ctx,
                              "mu=(" + mu.to_string() + ") n=" +
                                  std::to_string(n),
                              lhs, rhs))
                return false;
        }
    }
    return true;
}

struct Entry {
    const char* id;
    bool (*run)(const Ctx&);
};

constexpr Entry kCatalog[] = {
    {"suf-symmetry", run_suf_symmetry},
    {"skew-cauchy-macdonald", run_skew_cauchy_macdonald},
    {"pieri-macdonald", run_pieri_macdonald},
    {"skew-cauchy-R", run_skew_cauchy_R},
    {"pieri-R", run_pieri_R},
    {"q-binomial-R", run_q_binomial_R},
    {"one-phi-one", run_one_phi_one},
    {"q-gauss", run_q_gauss},
    {"b-taylor", run_b_taylor},
    {"saalschutz", run_saalschutz},
    {"sears", run_sears},
    {"propskew", run_propskew},
    {"rains-cauchy-terminating", run_rains_terminating},
    {"ktw", run_ktw},
    {"heine", run_heine},
    {"dn-bc-eigen", run_dn_bc_eigen},
    {"calD-eigen", run_calD_eigen},
    {"dn-bc-on-P", run_dn_bc_on_P},
};

std::string json_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

}  // namespace

const std::vector<std::string>& identity_catalog() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const Entry& e : kCatalog) v.push_back(e.id);
        return v;
    }();
    return ids;
}

IdentityCheck check_identity(const std::string& id,
                             const CheckConfig& config) {
    if (config.n < 1 || config.n > 3)
        throw std::invalid_argument("check_identity: n out of range 1..3");
    if (config.D < 0 || config.D > 5)
        throw std::invalid_argument("check_identity: D out of range 0..5");
    if (config.max_weight < 0 || config.max_weight > 6)
        throw std::invalid_argument(
            "check_identity: max_weight out of range 0..6");
    const Entry* entry = nullptr;
    for (const Entry& e : kCatalog)
        if (id == e.id) entry = &e;
    if (!entry)
        throw std::invalid_argument("check_identity: unknown identity '" +
                                    id + "'");
    IdentityCheck out;
    out.id = id;
    out.config = config;
    Witness w;
    Ctx ctx{config, &w};
    auto start = std::chrono::steady_clock::now();
    out.pass = entry->run(ctx);
    auto stop = std::chrono::steady_clock::now();
    out.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     stop - start)
                     .count();
    if (!out.pass) out.witness = w;
    return out;
}

std::string to_json(const IdentityCheck& check) {
    std::ostringstream os;
    os << "{\"id\":\"" << json_escape(check.id) << "\",\"config\":{"
       << "\"n\":" << check.config.n << ",\"D\":" << check.config.D
       << ",\"max_weight\":" << check.config.max_weight << ",\"mutate\":"
       << (check.config.mutate ? "true" : "false") << ",\"bindings\":{";
    bool first = true;
    for (const auto& [name, value] : check.config.bindings) {
        if (!first) os << ',';
        first = false;
        os << '"' << json_escape(name) << "\":\""
           << json_escape(value.to_string()) << '"';
    }
    os << "}},\"pass\":" << (check.pass ? "true" : "false");
    if (check.witness)
        os << ",\"witness\":{\"where\":\"" << json_escape(check.witness->where)
           << "\",\"lhs\":\"" << json_escape(check.witness->lhs)
           << "\",\"rhs\":\"" << json_escape(check.witness->rhs) << "\"}";
    os << ",\"millis\":" << check.millis << '}';
    return os.str();
}

TruncSeries hyperseries(const std::vector<RatFunc>& uppers,
                        const std::vector<RatFunc>& lowers, const RatFunc& z,
                        int n, int D) {
    if (lowers.empty())
        throw std::invalid_argument(
            "hyperseries: at least one lower parameter is required");
    const int r = static_cast<int>(uppers.size());
    const int s = static_cast<int>(lowers.size());
    std::vector<RatFunc> head(lowers.begin(), lowers.end() - 1);
    const RatFunc& slot = lowers.back();
    TruncSeries out(D);
    for (const Partition& lam : partitions_upto(D, n)) {
        RatFunc coef = gen_poch_list(uppers, lam) /
                       gen_poch_list(head, lam) * z.pow(lam.weight());
        RatFunc sign((lam.weight() % 2) ? -1 : 1);
        coef *= rf_pow(sign * qt_pow(n_stat_conj(lam), -n_stat(lam)),
                       s - r + 1);
        out += Rn_series(lam, n, slot, D).scale(coef);
    }
    return out;
}

}  // namespace qsym
