#include "qsym/macdonald.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "qsym/exprparse.hpp"
#include "qsym/symbol.hpp"

namespace qsym {

namespace {

std::mutex& memo_mutex() {
    static std::mutex m;
    return m;
}

int permutation_sign(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

RatFunc psi_coeff(const Partition& lam, const Partition& mu) {
    if (!horizontal_strip(lam, mu)) return RatFunc(0);
    using Key = std::pair<Partition, Partition>;
    static std::map<Key, RatFunc> memo;
    Key key{lam, mu};
    {
        std::lock_guard<std::mutex> g(memo_mutex());
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    // Telescoped row product: for rows i <= j <= l(mu) with k = lam_i - mu_i,
    //   (q^{mu_i-mu_j} t^{j-i+1})_k (q^{mu_i-lam_{j+1}+1} t^{j-i})_k
    //   -----------------------------------------------------------
    //   (q^{mu_i-mu_j+1} t^{j-i})_k (q^{mu_i-lam_{j+1}} t^{j-i+1})_k
    RatFunc r(1);
    int lm = mu.length();
    for (int i = 1; i <= lm; ++i) {
        int k = lam.part(i) - mu.part(i);
        if (k == 0) continue;
        for (int j = i; j <= lm; ++j) {
            int mm = mu.part(i) - mu.part(j);
            int ml = mu.part(i) - lam.part(j + 1);
            r *= qpoch_finite(qt_pow(mm, j - i + 1), k);
            r *= qpoch_finite(qt_pow(ml + 1, j - i), k);
            r /= qpoch_finite(qt_pow(mm + 1, j - i), k);
            r /= qpoch_finite(qt_pow(ml, j - i + 1), k);
        }
    }
    std::lock_guard<std::mutex> g(memo_mutex());
    return memo.emplace(std::move(key), std::move(r)).first->second;
}

RatFunc psi_prime_coeff(const Partition& lam, const Partition& mu) {
    if (!vertical_strip(lam, mu)) return RatFunc(0);
    using Key = std::pair<Partition, Partition>;
    static std::map<Key, RatFunc> memo;
    Key key{lam, mu};
    {
        std::lock_guard<std::mutex> g(memo_mutex());
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    const auto& S = std_syms();
    RatFunc v = psi_coeff(lam.conjugate(), mu.conjugate());
    v = v.substitute({{S.q.id, RatFunc::variable(S.t)},
                      {S.t.id, RatFunc::variable(S.q)}});
    std::lock_guard<std::mutex> g(memo_mutex());
    return memo.emplace(std::move(key), std::move(v)).first->second;
}

RatFunc phi_coeff(const Partition& lam, const Partition& mu) {
    if (!horizontal_strip(lam, mu)) return RatFunc(0);
    return b_ratio(lam) / b_ratio(mu) * psi_coeff(lam, mu);
}

SymPoly skew_P(const Partition& lam, const Partition& mu, int n) {
    if (!lam.contains(mu)) return SymPoly();
    if (lam == mu) return SymPoly(RatFunc(1));
    if (n <= 0) return SymPoly();
    using Key = std::tuple<Partition, Partition, int>;
    static std::map<Key, SymPoly> memo;
    Key key{lam, mu, n};
    {
        std::lock_guard<std::mutex> g(memo_mutex());
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    Symbol xn = letters(n).back();
    SymPoly acc;
    for (const Partition& nu : hstrip_predecessors(lam)) {
        if (!nu.contains(mu)) continue;
        SymPoly inner = skew_P(nu, mu, n - 1);
        if (inner.is_zero()) continue;
        acc += inner.scale(psi_coeff(lam, nu))
                   .mul_letter(xn, lam.weight() - nu.weight());
    }
    std::lock_guard<std::mutex> g(memo_mutex());
    return memo.emplace(std::move(key), std::move(acc)).first->second;
}

SymPoly macdonald_P(const Partition& lam, int n) {
    return skew_P(lam, Partition{}, n);
}

SymPoly schur_poly(const Partition& lam, int n) {
    if (lam.length() > n) return SymPoly();
    if (n == 0) return SymPoly(RatFunc(1));
    auto xs = letters(n);
    ExactPoly det(0);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Mono m;
        for (int i = 0; i < n; ++i) {
            int e = lam.part(perm[i] + 1) + n - (perm[i] + 1);
            if (e == 0) continue;
            uint32_t id = xs[i].id;
            if (m.size() < id + 1) m.resize(id + 1, 0);
            m[id] = e;
        }
        det = det + ExactPoly::monomial(m, permutation_sign(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    ExactPoly vandermonde(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            vandermonde = vandermonde *
                          (ExactPoly::variable(xs[i]) - ExactPoly::variable(xs[j]));
    ExactPoly quotient = det.exact_divide(vandermonde);
    SymPoly out;
    for (const auto& [m, c] : quotient.terms())
        out += SymPoly::monomial(m, RatFunc(ExactPoly(c)));
    return out;
}

std::vector<RatFunc> principal_point(int n) {
    return spectral_point(Partition{}, n);
}

std::vector<RatFunc> spectral_point(const Partition& lam, int n) {
    if (n < lam.length())
        throw std::invalid_argument("spectral_point: alphabet shorter than shape");
    std::vector<RatFunc> out;
    for (int i = 1; i <= n; ++i) out.push_back(qt_pow(lam.part(i), n - i));
    return out;
}

RatFunc principal_P(const Partition& lam, int n) {
    if (lam.length() > n) return RatFunc(0);
    const auto& S = std_syms();
    RatFunc tn = RatFunc::variable(S.t, n);
    return qt_pow(0, n_stat(lam)) * gen_poch(tn, lam) / c_low(lam);
}

RatFunc phat_factor(const Partition& lam, const Partition& mu) {
    return qt_pow(0, n_stat(lam) - n_stat(mu)) * c_prime(mu) / c_prime(lam);
}

RatFunc qhat_factor(const Partition& lam, const Partition& mu) {
    return qt_pow(0, n_stat(mu) - n_stat(lam)) * c_low(lam) / c_low(mu);
}

std::map<Partition, RatFunc> to_P_basis(const SymPoly& p, int n) {
    auto alphabet = letters(n);
    std::map<Partition, RatFunc> out;
    SymPoly rem = p;
    while (!rem.is_zero()) {
        auto it = std::prev(rem.terms().end());
        const Mono& m = it->first;
        std::vector<int> expo;
        for (Symbol x : alphabet) expo.push_back(x.id < m.size() ? m[x.id] : 0);
        for (std::size_t i = 0; i + 1 < expo.size(); ++i)
            if (expo[i] < expo[i + 1])
                throw std::logic_error(
                    "to_P_basis: leading term not dominant; input is not symmetric");
        Partition shape = mono_shape(m, alphabet);
        RatFunc c = it->second;
        rem -= macdonald_P(shape, n).scale(c);
        auto slot = out.find(shape);
        if (slot == out.end())
            out.emplace(std::move(shape), std::move(c));
        else
            slot->second += c;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

// ---------------------------------------------------------------------------
// Product structure constants with an optional on-disk cache.

namespace {

constexpr const char* kCacheHeader = "qsym-structcache-v1";
constexpr const char* kCacheFile = "structure_constants.qsc";

struct StructCache {
    std::map<std::pair<Partition, Partition>, std::map<Partition, RatFunc>> data;
    std::string dir;
    std::mutex mu;

    std::string path() const {
        return (std::filesystem::path(dir) / kCacheFile).string();
    }

    void load_locked() {
        std::ifstream in(path());
        if (!in.is_open()) return;
        std::string line;
        if (!std::getline(in, line) || line != kCacheHeader)
            throw std::invalid_argument("structure cache: unrecognized format");
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            std::istringstream ls(line);
            std::string mus, nus, lams, vals;
            if (!std::getline(ls, mus, '|') || !std::getline(ls, nus, '|') ||
                !std::getline(ls, lams, '|') || !std::getline(ls, vals))
                throw std::invalid_argument("structure cache: malformed line");
            data[{Partition::parse(mus), Partition::parse(nus)}].emplace(
                Partition::parse(lams), parse_ratfunc(vals));
        }
    }

    void append_locked(const std::pair<Partition, Partition>& key,
                       const std::map<Partition, RatFunc>& value) {
        if (dir.empty()) return;
        bool fresh = !std::filesystem::exists(path());
        std::ofstream out(path(), std::ios::app);
        if (!out.is_open())
            throw std::runtime_error("structure cache: cannot open " + path());
        if (fresh) out << kCacheHeader << "\n";
        for (const auto& [lam, f] : value)
            out << key.first.to_string() << "|" << key.second.to_string() << "|"
                << lam.to_string() << "|" << f.to_string() << "\n";
        out.flush();
    }
};

StructCache& struct_cache() {
    static StructCache c;
    return c;
}

}  // namespace

void struct_cache_set_dir(const std::string& dir) {
    auto& c = struct_cache();
    std::lock_guard<std::mutex> g(c.mu);
    c.dir = dir;
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    c.data.clear();
    c.load_locked();
}

void struct_cache_clear() {
    auto& c = struct_cache();
    std::lock_guard<std::mutex> g(c.mu);
    c.data.clear();
    if (!c.dir.empty()) std::filesystem::remove(c.path());
}

StructCacheStats struct_cache_stats() {
    auto& c = struct_cache();
    std::lock_guard<std::mutex> g(c.mu);
    return StructCacheStats{c.data.size(), !c.dir.empty(), c.dir};
}

std::map<Partition, RatFunc> structure_constants(const Partition& mu,
                                                 const Partition& nu) {
    // product is commutative, so store under the sorted key
    std::pair<Partition, Partition> key =
        nu < mu ? std::make_pair(nu, mu) : std::make_pair(mu, nu);
    auto& c = struct_cache();
    {
        std::lock_guard<std::mutex> g(c.mu);
        auto it = c.data.find(key);
        if (it != c.data.end()) return it->second;
    }
    int n_sandbox = mu.weight() + nu.weight();
    SymPoly prod =
        macdonald_P(key.first, n_sandbox) * macdonald_P(key.second, n_sandbox);
    auto result = to_P_basis(prod, n_sandbox);
    std::lock_guard<std::mutex> g(c.mu);
    auto [it, inserted] = c.data.emplace(key, result);
    if (inserted) c.append_locked(key, result);
    return it->second;
}

RatFunc struct_norm(const Partition& lam, const Partition& mu,
                    const Partition& nu) {
    auto table = structure_constants(mu, nu);
    auto it = table.find(lam);
    if (it == table.end()) return RatFunc(0);
    return qt_pow(0, n_stat(mu) + n_stat(nu) - n_stat(lam)) * c_prime(lam) /
           (c_prime(mu) * c_prime(nu)) * it->second;
}

RatFunc skewQ_diff(const Partition& lam, const Partition& mu, const RatFunc& A,
                   const RatFunc& B) {
    if (!lam.contains(mu)) return RatFunc(0);
    int w = lam.weight() - mu.weight();
    if (w == 0) return RatFunc(1);
    RatFunc acc(0);
    for (const Partition& nu : subdiagrams(lam)) {
        if (nu.weight() != w) continue;
        RatFunc f = struct_norm(lam, mu, nu);
        if (f.is_zero()) continue;
        RatFunc cells(1);
        for (int i = 1; i <= nu.length(); ++i)
            for (int j = 1; j <= nu.part(i); ++j)
                cells *= A - B * qt_pow(j - 1, 1 - i);
        acc += cells * f;
    }
    return acc;
}

RatFunc qbinom(const Partition& lam, const Partition& mu) {
    return skewQ_diff(lam, mu, RatFunc(1), RatFunc(0));
}

RatFunc qbinom_rec(const Partition& lam, const Partition& mu, int n) {
    if (n < lam.length())
        throw std::invalid_argument("qbinom_rec: alphabet shorter than shape");
    if (!lam.contains(mu)) return RatFunc(0);
    if (lam == mu) return RatFunc(1);
    using Key = std::tuple<Partition, Partition, int>;
    static std::map<Key, RatFunc> memo;
    Key key{lam, mu, n};
    {
        std::lock_guard<std::mutex> g(memo_mutex());
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    RatFunc dom = RatFunc(omega(lam, n)) - RatFunc(omega(mu, n));
    RatFunc acc(0);
    for (int i = 1; i <= lam.length(); ++i) {
        auto lami = lam.decrement(i);
        if (!lami) continue;
        // single-box column coefficient in closed form; the (1-q) factor of
        // the spectral recursion has been cancelled against it already
        RatFunc step = c_prime(lam) * psi_prime_coeff(lam, *lami) /
                       (qt_pow(0, i - 1) * c_prime(*lami));
        acc += qt_pow(-lam.part(i), i - n) * step * qbinom_rec(*lami, mu, n);
    }
    RatFunc result = acc / dom;
    std::lock_guard<std::mutex> g(memo_mutex());
    return memo.emplace(std::move(key), std::move(result)).first->second;
}

RatFunc classical_qbinom(int m, int k) {
    if (k < 0 || k > m) return RatFunc(0);
    const auto& S = std_syms();
    return qpoch_finite(RatFunc::variable(S.q, m - k + 1), k) /
           qpoch_finite(RatFunc::variable(S.q), k);
}

namespace {

/// Principal specialization of the Schur polynomial at powers of q.
RatFunc schur_principal_q(const Partition& kap, int n) {
    const auto& S = std_syms();
    RatFunc q = RatFunc::variable(S.q);
    RatFunc cpq = c_prime(kap).substitute(S.t, q);
    RatFunc r = RatFunc::variable(S.q, static_cast<int32_t>(n_stat(kap))) / cpq;
    for (int i = 1; i <= n; ++i)
        r *= qpoch_finite(q, kap.part(i) + n - i) / qpoch_finite(q, n - i);
    return r;
}

}  // namespace

RatFunc qbinom_tq(const Partition& lam, const Partition& mu) {
    if (!lam.contains(mu)) return RatFunc(0);
    int n = lam.length();
    if (n == 0) return RatFunc(1);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    RatFunc det(0);
    do {
        RatFunc term(permutation_sign(perm));
        for (int i = 0; i < n && !term.is_zero(); ++i)
            term *= classical_qbinom(lam.part(i + 1) + n - (i + 1),
                                     mu.part(perm[i] + 1) + n - (perm[i] + 1));
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return schur_principal_q(mu, n) / schur_principal_q(lam, n) * det;
}

RatFunc qbinom_t1(const Partition& lam, const Partition& mu) {
    if (!lam.contains(mu)) return RatFunc(0);
    int n = lam.length();
    if (n == 0) return RatFunc(1);
    RatFunc acc(0);
    for (const auto& u : orbit_compositions(mu, n)) {
        RatFunc p(1);
        for (int i = 0; i < n && !p.is_zero(); ++i)
            p *= classical_qbinom(lam.part(i + 1), u[i]);
        acc += p;
    }
    return acc;
}

}  // namespace qsym
