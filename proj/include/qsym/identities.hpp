/**
 * @file identities.hpp
 * Catalog of summation and transformation identities satisfied by the
 * Macdonald polynomials and the branching families, each verified
 * mechanically: finite identities as exact rational-function equalities
 * and infinite ones as power series truncated at a total degree cutoff
 * in the alphabet letters (or in an auxiliary grading letter).
 *
 * Every catalog entry carries a built-in mutation canary: running the
 * entry with `mutate = true` perturbs one factor of the identity and
 * must produce a failure with a concrete witness, which guards the
 * harness itself against vacuous comparisons.
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsym/families.hpp"

namespace qsym {

/// Execution parameters for a catalog entry.  Entries ignore the fields
/// they do not use; `bindings` substitutes named parameters (for example
/// b -> 0 to degenerate the one-parameter family checks).
struct CheckConfig {
    int n = 2;           ///< alphabet size (1..3)
    int D = 3;           ///< series truncation degree (0..5)
    int max_weight = 2;  ///< partition weight bound for the shape sweeps (0..6)
    std::map<std::string, RatFunc> bindings;
    bool mutate = false;  ///< run the entry's soundness canary instead
};

/// First point of disagreement between the two sides of an identity.
struct Witness {
    std::string where;  ///< monomial or shape description
    std::string lhs, rhs;
};

struct IdentityCheck {
    std::string id;
    CheckConfig config;
    bool pass = false;
    std::optional<Witness> witness;  ///< always present on failure
    long long millis = 0;
};

/// Names of all catalog entries in execution order.
const std::vector<std::string>& identity_catalog();

/// Run one catalog entry.  Throws std::invalid_argument for an unknown
/// id or a config outside the enforced bounds (1 <= n <= 3, 0 <= D <= 5,
/// 0 <= max_weight <= 6).
IdentityCheck check_identity(const std::string& id, const CheckConfig& config);

/// One JSON object per check:
/// {"id":..., "config":{...}, "pass":..., "witness":{...}?, "millis":...}.
std::string to_json(const IdentityCheck& check);

/// Basic hypergeometric series on an alphabet of n letters:
///   sum over |lam| <= D, l(lam) <= n of
///     (uppers)_lam / (lowers[0..s-2])_lam
///     * ((-1)^{|lam|} q^{n(lam')} t^{-n(lam)})^{s-r+1}
///     * z^{|lam|} * Rnorm_lam(X; lowers[s-1]),
/// where r = |uppers|, s = |lowers| and the last lower parameter feeds the
/// family's b slot.  Throws std::invalid_argument when lowers is empty.
TruncSeries hyperseries(const std::vector<RatFunc>& uppers,
                        const std::vector<RatFunc>& lowers, const RatFunc& z,
                        int n, int D);

}  // namespace qsym
