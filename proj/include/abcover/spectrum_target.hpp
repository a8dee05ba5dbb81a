#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace abcover {

/// The forced nonzero twists l_g of a canonical abelian cover of degree d:
/// d - 1 positive integers, sorted descending.
struct SpectrumTarget {
  std::int64_t degree = 0;
  std::vector<std::int64_t> values;

  friend bool operator==(const SpectrumTarget&, const SpectrumTarget&) = default;
};

/// No target exists; `constraint` names the first plurigenus identity that
/// cannot hold.
struct Infeasible {
  std::string constraint;

  friend bool operator==(const Infeasible&, const Infeasible&) = default;
};

using TargetResult = std::variant<SpectrumTarget, Infeasible>;

/// Closed form: {5} + {3}^(d/2-1) + {2}^(d/2-1) for even d, Infeasible for
/// odd d (P_2 = d/2 + 9 would not be an integer). Throws DomainError for d < 2.
TargetResult derive_targets(std::int64_t d);

/// Candidate multiset that the oracle discarded, and why.
struct RejectedCandidate {
  std::vector<std::int64_t> values;
  std::string failed_constraint;
};

struct OracleResult {
  std::vector<SpectrumTarget> accepted;
  /// Candidates satisfying the p_g and h^3 constraints but failing a
  /// plurigenus constraint (kept for auditing the case analysis).
  std::vector<RejectedCandidate> rejected;
  /// Non-empty when the plurigenus constraints are non-integral (odd d).
  std::string infeasible_reason;
};

/// Exhaustive search over all multisets of d - 1 values in [1, 6]:
///   sum h0(O(1 - l)) = 0,       sum h0(O(l - 4)) = 4,
///   sum h0(O(2 - l)) = d/2 - 1, sum h0(O(3 - l)) = 5d/2 - 5.
/// Throws DomainError for d < 2 and EffortExceeded for d > 12.
OracleResult derive_targets_oracle(std::int64_t d);

std::string format_multiset(const std::vector<std::int64_t>& values);

}  // namespace abcover
