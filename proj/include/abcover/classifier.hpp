#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abcover/automorphism.hpp"
#include "abcover/cover.hpp"
#include "abcover/group.hpp"
#include "abcover/linear_system.hpp"
#include "abcover/smoothness.hpp"
#include "abcover/spectrum_target.hpp"

namespace abcover {

/// Upper end of the default sweep: K^3 = d <= 72 chi(omega) = 216 for a
/// canonical spectrum (chi(O_X) = -3).
inline constexpr std::int64_t kDefaultMaxDegree = 216;

struct ClassifyConfig {
  bool dedup = true;
  SolveLimits limits;
  /// Restrict the sweep to this group (only its order is then examined).
  std::optional<FiniteAbelianGroup> group;
  /// 0 = ABCOVER_WORKERS from the environment, else hardware concurrency.
  unsigned workers = 0;
};

enum class DedupMode { Orbit, BestEffort, None };
std::string to_string(DedupMode m);

struct Witness {
  std::size_t assignment_index = 0;
  Assignment assignment;
  Solution solution;
  /// Raw solutions (across all assignments of the group) identified with this one.
  std::uint64_t multiplicity = 0;
  Invariants invariants;
  bool invariants_ok = false;
  smoothness::SmoothnessVerdict smoothness;
};

struct GroupRecord {
  FiniteAbelianGroup group;
  bool aut_supported = false;
  std::uint64_t aut_order = 0;
  DedupMode dedup = DedupMode::None;
  std::uint64_t assignments_total = 0;
  std::uint64_t assignments_tried = 0;
  /// Tried assignments rejected by ProjectionFilter before any search.
  std::uint64_t assignments_pruned = 0;
  std::uint64_t raw_solutions = 0;
  std::uint64_t nodes = 0;
  std::uint64_t verification_failures = 0;
  /// Assignment indices whose search ran out of node budget.
  std::vector<std::size_t> incomplete_cells;
  std::vector<Witness> witnesses;
};

enum class Feasibility { Feasible, Infeasible, Incomplete };
std::string to_string(Feasibility f);

struct ClassificationReport {
  std::int64_t degree = 0;
  TargetResult target;
  std::vector<GroupRecord> groups;
  Feasibility verdict = Feasibility::Infeasible;
  /// Best verdict over all witnesses (Smooth beats SingularUnresolved beats
  /// Unsupported); empty when there are no witnesses.
  std::optional<smoothness::Verdict> best_smoothness;
  std::vector<std::string> flags;
  double wall_seconds = 0.0;

  bool feasible() const noexcept { return verdict == Feasibility::Feasible; }
  std::size_t witness_count() const noexcept;
};

/// Expected (p_g, q, h2, chi_O, K3, P_2, P_3) of a canonical cover of degree d.
Invariants expected_invariants(std::int64_t d);

/// Solves every (group, assignment) cell of degree d, verifies and
/// orbit-deduplicates the solutions, and audits each witness.
ClassificationReport classify_degree(std::int64_t d, const ClassifyConfig& config = {});

std::vector<ClassificationReport> classify_range(std::int64_t d_min, std::int64_t d_max,
                                                 const ClassifyConfig& config = {});

/// Worker count from config, ABCOVER_WORKERS, or the hardware.
unsigned resolve_workers(unsigned requested);

}  // namespace abcover
