/**
 * @file polygcd.cpp
 * Multivariate gcd: integer and monomial content first, variables present
 * on one side only are split off through a grouped content, and the
 * remaining problem goes to the heuristic evaluation gcd (evaluate one
 * variable at a large integer, recurse, reconstruct the candidate from
 * balanced base-xi digits, certify by exact division).  A primitive
 * pseudo-remainder sequence stays as the fallback when the heuristic runs
 * out of evaluation points.
 */
#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qsym/poly.hpp"

namespace qsym {

namespace {

/// Dense coefficient vector of p in variable v; index = exponent of v.
std::vector<ExactPoly> to_dense(const ExactPoly& p, uint32_t v) {
    std::vector<ExactPoly> coeffs;
    for (const auto& [m, c] : p.terms()) {
        int32_t e = v < m.size() ? m[v] : 0;
        if (e < 0) throw std::logic_error("poly_gcd: negative exponent");
        if (static_cast<size_t>(e) >= coeffs.size()) coeffs.resize(e + 1);
        Mono rest = m;
        if (v < rest.size()) rest[v] = 0;
        while (!rest.empty() && rest.back() == 0) rest.pop_back();
        coeffs[e].add_term(rest, c);
    }
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    return coeffs;
}

ExactPoly from_dense(const std::vector<ExactPoly>& coeffs, uint32_t v) {
    ExactPoly r;
    for (size_t e = 0; e < coeffs.size(); ++e) {
        if (coeffs[e].is_zero()) continue;
        Mono m(v + 1, 0);
        m[v] = static_cast<int32_t>(e);
        r += coeffs[e].mul_mono(m, 1);
    }
    return r;
}

void trim_dense(std::vector<ExactPoly>& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

ExactPoly dense_content(const std::vector<ExactPoly>& f) {
    ExactPoly g;
    for (const auto& c : f) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : poly_gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

void dense_divide(std::vector<ExactPoly>& f, const ExactPoly& d) {
    if (d.is_one()) return;
    for (auto& c : f)
        if (!c.is_zero()) c = c.exact_divide(d);
}

/// Pseudo-remainder of F by G in the dense representation; exact only up to
/// content, which the caller strips anyway.
std::vector<ExactPoly> prem_dense(std::vector<ExactPoly> R, const std::vector<ExactPoly>& G) {
    const ExactPoly& lcG = G.back();
    size_t degG = G.size() - 1;
    while (R.size() >= G.size()) {
        size_t degR = R.size() - 1;
        ExactPoly lcR = R.back();
        size_t shift = degR - degG;
        std::vector<ExactPoly> next(degR);
        for (size_t i = 0; i < degR; ++i) {
            ExactPoly term = lcG * R[i];
            if (i >= shift) term -= lcR * G[i - shift];
            next[i] = std::move(term);
        }
        R = std::move(next);
        trim_dense(R);
    }
    return R;
}

ExactPoly positive_lc(ExactPoly p) {
    if (!p.is_zero() && p.leading_coeff() < 0) return -p;
    return p;
}

mpz_class max_abs_coeff(const ExactPoly& p) {
    mpz_class m = 0;
    for (const auto& [mono, c] : p.terms()) {
        mpz_class a = abs(c);
        if (a > m) m = a;
    }
    return m;
}

/// p with variable v evaluated at the integer xi.
ExactPoly eval_at_int(const ExactPoly& p, uint32_t v, const mpz_class& xi) {
    std::vector<mpz_class> powers = {1};
    ExactPoly out;
    for (const auto& [m, c] : p.terms()) {
        int32_t e = v < m.size() ? m[v] : 0;
        while (static_cast<size_t>(e) >= powers.size())
            powers.push_back(powers.back() * xi);
        Mono rest = m;
        if (v < rest.size()) rest[v] = 0;
        while (!rest.empty() && rest.back() == 0) rest.pop_back();
        out.add_term(rest, c * powers[e]);
    }
    return out;
}

/// Reconstruct a polynomial in v from balanced base-xi digits of g; fails
/// when more than max_deg + 1 digits appear, which marks an unlucky point.
std::optional<ExactPoly> digits_to_poly(const ExactPoly& g, uint32_t v,
                                        const mpz_class& xi, int32_t max_deg) {
    ExactPoly out;
    ExactPoly cur = g;
    const mpz_class half = xi / 2;
    for (int32_t e = 0; !cur.is_zero(); ++e) {
        if (e > max_deg) return std::nullopt;
        ExactPoly next;
        Mono vm(v + 1, 0);
        vm[v] = e;
        for (const auto& [m, c] : cur.terms()) {
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
            if (r > half) r -= xi;
            if (r != 0) out.add_term(mono_mul(m, vm), r);
            mpz_class q = c - r;
            mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), xi.get_mpz_t());
            if (q != 0) next.add_term(m, q);
        }
        cur = std::move(next);
    }
    return out;
}

/// Heuristic gcd of two nonzero polynomials, certified by exact division:
/// a success is always a genuine common divisor.  The integer and monomial
/// contents are split off and recombined at every level, because evaluated
/// images carry meaningful content: it encodes the digits of the gcd in the
/// evaluation points of the outer variables, and the gcd of two polynomials
/// factors through the gcd of their contents.
std::optional<ExactPoly> heuristic_gcd(const ExactPoly& a, const ExactPoly& b,
                                       int depth) {
    if (a.is_constant() && b.is_constant()) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.leading_coeff().get_mpz_t(),
                b.leading_coeff().get_mpz_t());
        return ExactPoly(g);
    }
    if (depth > 16) return std::nullopt;

    mpz_class ica = a.int_content(), icb = b.int_content();
    mpz_class ic;
    mpz_gcd(ic.get_mpz_t(), ica.get_mpz_t(), icb.get_mpz_t());
    Mono ma = a.mono_content(), mb = b.mono_content();
    Mono mg(std::max(ma.size(), mb.size()), 0);
    for (size_t i = 0; i < mg.size(); ++i)
        mg[i] = std::min(i < ma.size() ? ma[i] : 0, i < mb.size() ? mb[i] : 0);
    while (!mg.empty() && mg.back() == 0) mg.pop_back();
    const ExactPoly unit = ExactPoly::monomial(mg, ic);
    const ExactPoly pa = a.exact_divide(ExactPoly::monomial(ma, ica));
    const ExactPoly pb = b.exact_divide(ExactPoly::monomial(mb, icb));
    if (pa.is_constant() || pb.is_constant()) return unit;

    // variable with the smallest combined degree among those present
    std::vector<uint32_t> sa = pa.symbols(), sb = pb.symbols();
    std::vector<uint32_t> all;
    std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(),
                   std::back_inserter(all));
    uint32_t v = all.front();
    int64_t best = -1;
    for (uint32_t s : all) {
        int64_t score = static_cast<int64_t>(pa.max_exponent(Symbol{s})) +
                        pb.max_exponent(Symbol{s});
        if (best < 0 || score < best) {
            best = score;
            v = s;
        }
    }
    const int32_t max_deg =
        std::max(pa.max_exponent(Symbol{v}), pb.max_exponent(Symbol{v}));
    mpz_class xi = 2 * std::min(max_abs_coeff(pa), max_abs_coeff(pb)) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        ExactPoly av = eval_at_int(pa, v, xi);
        ExactPoly bv = eval_at_int(pb, v, xi);
        if (!av.is_zero() && !bv.is_zero()) {
            std::optional<ExactPoly> g = heuristic_gcd(av, bv, depth + 1);
            if (g && !g->is_zero()) {
                std::optional<ExactPoly> cand =
                    digits_to_poly(*g, v, xi, max_deg);
                if (cand && !cand->is_zero()) {
                    // the primitive inputs have a content-free gcd, so any
                    // content picked up by the digit reconstruction is
                    // spurious and safe to strip before certifying
                    ExactPoly cunit = ExactPoly::monomial(
                        cand->mono_content(), cand->int_content());
                    ExactPoly prim = cand->exact_divide(cunit);
                    ExactPoly q;
                    if (pa.try_exact_divide(prim, q) &&
                        pb.try_exact_divide(prim, q))
                        return unit * prim;
                }
            }
        }
        // grow the evaluation point at an irrational-looking rate
        xi = xi * 73794 / 27011 + 17;
    }
    return std::nullopt;
}

/// Content of p with respect to the variables NOT in keep: group the terms
/// by their exponents outside keep and fold the gcd of the group parts,
/// which live in the keep variables only.  Any divisor of p that avoids
/// the outside variables divides this content.
ExactPoly content_within(const ExactPoly& p, const std::vector<uint32_t>& keep) {
    std::map<Mono, ExactPoly, GrevlexLess> groups;
    for (const auto& [m, c] : p.terms()) {
        Mono outside(m.size(), 0), inside(m.size(), 0);
        for (uint32_t i = 0; i < m.size(); ++i) {
            if (std::binary_search(keep.begin(), keep.end(), i))
                inside[i] = m[i];
            else
                outside[i] = m[i];
        }
        while (!outside.empty() && outside.back() == 0) outside.pop_back();
        while (!inside.empty() && inside.back() == 0) inside.pop_back();
        groups[outside].add_term(inside, c);
    }
    ExactPoly g;
    for (const auto& [m, part] : groups) {
        g = g.is_zero() ? part : poly_gcd(g, part);
        if (g.is_one()) break;
    }
    return g;
}

}  // namespace

ExactPoly poly_gcd(const ExactPoly& a, const ExactPoly& b) {
    if (a.is_zero()) return positive_lc(b);
    if (b.is_zero()) return positive_lc(a);

    mpz_class ica = a.int_content(), icb = b.int_content();
    mpz_class ic;
    mpz_gcd(ic.get_mpz_t(), ica.get_mpz_t(), icb.get_mpz_t());

    Mono ma = a.mono_content(), mb = b.mono_content();
    Mono mg(std::max(ma.size(), mb.size()), 0);
    for (size_t i = 0; i < mg.size(); ++i) {
        int32_t ea = i < ma.size() ? ma[i] : 0;
        int32_t eb = i < mb.size() ? mb[i] : 0;
        if (ea < 0 || eb < 0) throw std::logic_error("poly_gcd: Laurent input");
        mg[i] = std::min(ea, eb);
    }
    while (!mg.empty() && mg.back() == 0) mg.pop_back();

    ExactPoly A = a.exact_divide(ExactPoly::monomial(ma, ica));
    ExactPoly B = b.exact_divide(ExactPoly::monomial(mb, icb));
    ExactPoly unit_part = ExactPoly::monomial(mg, ic);

    if (A.is_constant() || B.is_constant()) return unit_part;

    // Variables on one side only cannot enter the gcd: replace that side by
    // its content over the shared variables, which is far cheaper than
    // running the remainder sequence across the mixed variable set.
    std::vector<uint32_t> sa = A.symbols(), sb = B.symbols();
    std::vector<uint32_t> shared;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                          std::back_inserter(shared));
    if (shared.size() < sa.size() || shared.size() < sb.size()) {
        ExactPoly ra = shared.size() < sa.size() ? content_within(A, shared) : A;
        ExactPoly rb = shared.size() < sb.size() ? content_within(B, shared) : B;
        return positive_lc(unit_part * poly_gcd(ra, rb));
    }

    if (std::optional<ExactPoly> h = heuristic_gcd(A, B, 0))
        return positive_lc(unit_part * *h);

    uint32_t best = 0;
    int64_t best_score = -1;
    for (uint32_t v : sa) {
        if (std::find(sb.begin(), sb.end(), v) == sb.end()) continue;
        Symbol s{v};
        int64_t score = static_cast<int64_t>(A.max_exponent(s)) + B.max_exponent(s);
        if (best_score < 0 || score < best_score) {
            best_score = score;
            best = v;
        }
    }
    if (best_score < 0) return unit_part;  // disjoint variable sets

    std::vector<ExactPoly> F = to_dense(A, best), G = to_dense(B, best);
    ExactPoly contF = dense_content(F), contG = dense_content(G);
    dense_divide(F, contF);
    dense_divide(G, contG);
    ExactPoly cont = poly_gcd(contF, contG);

    if (F.size() < G.size()) std::swap(F, G);
    while (true) {
        if (G.empty()) break;  // gcd of primitive parts is F
        if (G.size() == 1) {
            F.assign(1, ExactPoly(1));  // coprime primitive parts
            break;
        }
        std::vector<ExactPoly> R = prem_dense(F, G);
        ExactPoly c = dense_content(R);
        if (!c.is_zero()) dense_divide(R, c);
        F = std::move(G);
        G = std::move(R);
    }
    ExactPoly pp = from_dense(F, best);
    return positive_lc(unit_part * cont * pp);
}

}  // namespace qsym
