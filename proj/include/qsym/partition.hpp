/**
 * @file partition.hpp
 * Integer partitions and the diagram-combinatorics used throughout:
 * conjugation, containment, horizontal/vertical strips, arm and leg
 * statistics, and the enumeration helpers for branching sums.
 */
#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace qsym {

class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    /// 1-based part access; 0 beyond the length.
    int part(int i) const;
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    bool contains(const Partition& mu) const;

    /// Row i decreased by one, when still a partition.
    std::optional<Partition> decrement(int i) const;
    /// Row i increased by one, when still a partition (i may be length+1).
    std::optional<Partition> increment(int i) const;

    friend bool operator==(const Partition& a, const Partition& b) = default;
    /// Canonical order: weight first, then lexicographic on the parts, so
    /// that within a weight the order refines dominance upward.
    friend bool operator<(const Partition& a, const Partition& b);

    /// "2,1"; the empty partition prints as "0".
    std::string to_string() const;
    /// Accepts "2,1", "0" and "".
    static Partition parse(const std::string& text);

  private:
    std::vector<int> parts_;  // weakly decreasing, strictly positive
};

/// lambda/mu is a horizontal strip: mu fits interlaced between the rows.
bool horizontal_strip(const Partition& lam, const Partition& mu);
bool vertical_strip(const Partition& lam, const Partition& mu);

/// Arm, coarm, leg, coleg of cell (i, j), 1-based, cell must lie in lambda.
struct HookStats {
    int arm, coarm, leg, coleg;
};
HookStats hook_stats(const Partition& lam, int i, int j);

/// n(lambda) = sum (i-1) lambda_i.
long n_stat(const Partition& lam);

/// All partitions with weight <= max_weight and length <= max_length,
/// sorted in the canonical order.
std::vector<Partition> partitions_upto(int max_weight, int max_length);
/// All mu contained in lambda.
std::vector<Partition> subdiagrams(const Partition& lam);
/// All mu with lambda/mu a horizontal strip.
std::vector<Partition> hstrip_predecessors(const Partition& lam);
/// Distinct compositions obtained by permuting mu padded to n entries.
std::vector<std::vector<int>> orbit_compositions(const Partition& mu, int n);

/// Complement (m - lambda_n, ..., m - lambda_1) inside the m x n box;
/// requires lambda_1 <= m and l(lambda) <= n.
Partition box_complement(const Partition& lam, int m, int n);

}  // namespace qsym
