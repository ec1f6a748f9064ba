#include "qsym/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qsym {

namespace {
void validate(const std::vector<int>& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && p[i] > p[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}
}  // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    validate(parts_);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    validate(parts_);
}

int Partition::weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
}

int Partition::part(int i) const {
    if (i < 1) throw std::invalid_argument("part index is 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> c(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) c[j]++;
    return Partition(std::move(c));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.parts_[i] > parts_[i]) return false;
    return true;
}

std::optional<Partition> Partition::decrement(int i) const {
    if (i < 1 || i > length()) return std::nullopt;
    std::vector<int> p = parts_;
    p[i - 1]--;
    if (i < length() && p[i - 1] < parts_[i]) return std::nullopt;
    while (!p.empty() && p.back() == 0) p.pop_back();
    return Partition(std::move(p));
}

std::optional<Partition> Partition::increment(int i) const {
    if (i < 1 || i > length() + 1) return std::nullopt;
    std::vector<int> p = parts_;
    if (i == length() + 1)
        p.push_back(1);
    else
        p[i - 1]++;
    if (i > 1 && p[i - 1] > p[i - 2]) return std::nullopt;
    return Partition(std::move(p));
}

bool operator<(const Partition& a, const Partition& b) {
    int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    return a.parts_ < b.parts_;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    if (text.empty() || text == "0") return {};
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad partition entry '" + item + "'");
        if (v == 0) continue;
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

bool horizontal_strip(const Partition& lam, const Partition& mu) {
    if (!lam.contains(mu)) return false;
    // lambda_{i+1} <= mu_i <= lambda_i for every row.
    for (int i = 1; i <= lam.length(); ++i)
        if (lam.part(i + 1) > mu.part(i)) return false;
    return true;
}

bool vertical_strip(const Partition& lam, const Partition& mu) {
    return horizontal_strip(lam.conjugate(), mu.conjugate());
}

HookStats hook_stats(const Partition& lam, int i, int j) {
    if (i < 1 || j < 1 || j > lam.part(i))
        throw std::invalid_argument("cell outside the diagram");
    Partition conj = lam.conjugate();
    return HookStats{lam.part(i) - j, j - 1, conj.part(j) - i, i - 1};
}

long n_stat(const Partition& lam) {
    long n = 0;
    for (int i = 1; i <= lam.length(); ++i) n += static_cast<long>(i - 1) * lam.part(i);
    return n;
}

std::vector<Partition> partitions_upto(int max_weight, int max_length) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        out.emplace_back(std::vector<int>(cur));
        if (static_cast<int>(cur.size()) >= max_length) return;
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(max_weight, max_weight);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> subdiagrams(const Partition& lam) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int row) {
        if (row > lam.length()) {
            std::vector<int> p = cur;
            while (!p.empty() && p.back() == 0) p.pop_back();
            out.emplace_back(std::move(p));
            return;
        }
        int hi = std::min(lam.part(row), row == 1 ? lam.part(1) : cur[row - 2]);
        for (int v = hi; v >= 0; --v) {
            cur.push_back(v);
            rec(row + 1);
            cur.pop_back();
            if (v == 0) break;
        }
    };
    rec(1);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Partition> hstrip_predecessors(const Partition& lam) {
    std::vector<Partition> out;
    for (const Partition& mu : subdiagrams(lam))
        if (horizontal_strip(lam, mu)) out.push_back(mu);
    return out;
}

std::vector<std::vector<int>> orbit_compositions(const Partition& mu, int n) {
    if (mu.length() > n) return {};
    std::vector<int> padded(n, 0);
    for (int i = 0; i < mu.length(); ++i) padded[i] = mu.parts()[i];
    std::sort(padded.begin(), padded.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(padded);
    } while (std::next_permutation(padded.begin(), padded.end()));
    return out;
}

Partition box_complement(const Partition& lam, int m, int n) {
    if (lam.length() > n || lam.part(1) > m)
        throw std::invalid_argument("box_complement: shape does not fit the box");
    std::vector<int> parts;
    for (int i = n; i >= 1; --i) parts.push_back(m - lam.part(i));
    return Partition(std::move(parts));
}

}  // namespace qsym
