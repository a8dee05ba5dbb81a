#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "abcover/automorphism.hpp"
#include "abcover/cover.hpp"
#include "abcover/group.hpp"
#include "abcover/spectrum_target.hpp"

namespace abcover {

/// A placement of the target spectrum on G: l_{g'} = 5, l = 3 on S_1 and
/// l = 2 on S_2, with {0}, {g'}, S_1, S_2 partitioning G. Elements are held
/// as indices into G (see FiniteAbelianGroup::index_of).
struct Assignment {
  std::size_t g_prime = 0;
  std::vector<std::size_t> s1;
  std::vector<std::size_t> s2;

  /// t_g for every element index (t_0 = 0).
  std::vector<std::int64_t> targets(std::size_t order) const;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Inverse of Assignment::targets; throws DomainError unless the values are
/// one 5 with the rest split evenly between 3 and 2 (and 0 at index 0).
Assignment assignment_from_targets(const std::vector<std::int64_t>& targets);

/// Calls fn(index, assignment) for every assignment in enumeration order:
/// g' ascending, then S_1 as lexicographic combinations of the remaining
/// nonzero elements. With dedup on and Aut(G) supported only the
/// lexicographically least member of each Aut-orbit is passed. `index`
/// counts all assignments, kept or not. Stops early if fn returns false.
/// Nothing is produced when |G| is odd or differs from target.degree.
void for_each_assignment(const FiniteAbelianGroup& group, const SpectrumTarget& target, bool dedup,
                         const std::function<bool(std::size_t, const Assignment&)>& fn,
                         const AutomorphismAction* action = nullptr);

std::vector<Assignment> enumerate_assignments(const FiniteAbelianGroup& group, const SpectrumTarget& target,
                                              bool dedup);

/// Number of assignments before dedup: (d - 1) * C(d - 2, d/2 - 1).
std::uint64_t assignment_count(std::int64_t d);

/// Necessary condition on an assignment from its cyclic subgroups. For g of
/// order m, l_{jg} = sum_{r=1}^{m-1} {jr/m} y_r with y_r the total x over
/// labels alpha having m(g.alpha) = r mod m, so (t_g, t_{2g}, ..., t_{(m-1)g})
/// must lie in the image of N^{m-1}. Images are tabulated per order; orders
/// whose table would exceed the enumeration cap are not checked.
class ProjectionFilter {
 public:
  ProjectionFilter(const FiniteAbelianGroup& group, const std::vector<std::int64_t>& values,
                   std::uint64_t enumeration_cap = 20'000'000);

  /// False only if no solution of the system for these targets can exist.
  bool admits(const std::vector<std::int64_t>& targets) const;

  /// Orders whose table was built.
  std::vector<int> checked_orders() const;

  struct Table;

 private:
  std::vector<std::vector<std::size_t>> multiples_;  // per element: indices of g, 2g, ..., (m-1)g
  std::vector<std::shared_ptr<const Table>> tables_;  // per element, null if unchecked
};

enum class RowKind {
  BasisSum,      // sum_alpha alpha_i x_alpha = n_i t_{e_i}
  Spectrum,      // sum_alpha floor(g.alpha) x_alpha = sum_i g_i t_{e_i} - t_g
  Fractional,    // sum_alpha N{g.alpha} x_alpha = N t_g            (implied)
  Ramification,  // sum_alpha N(1 - 1/ord alpha) x_alpha = 2N sum_g t_g / d   (implied;
                 // rhs -1 when the right side is not an integer)
};

/// Coefficient structure of the system for one group; independent of the
/// assignment, so it is built once and shared.
struct SystemLayout {
  FiniteAbelianGroup group;
  std::vector<std::size_t> variables;  // element indices of the nonzero labels alpha
  std::vector<RowKind> kinds;
  std::vector<std::size_t> anchors;               // i for BasisSum, g index otherwise
  std::vector<std::vector<std::int64_t>> coeffs;  // coeffs[row][var]
  /// Branching order: variables by descending row count, ties by label index.
  std::vector<std::size_t> branch_order;

  explicit SystemLayout(FiniteAbelianGroup g);
  std::size_t row_count() const noexcept { return kinds.size(); }
};

/// The integer-linear system attached to an assignment. BasisSum and
/// Spectrum rows are the defining rows; Fractional and Ramification rows are
/// exact linear consequences of them, included to strengthen pruning. All
/// coefficients are nonnegative integers.
struct LinearSystem {
  std::shared_ptr<const SystemLayout> layout;
  std::vector<std::int64_t> targets;  // t_g per element index
  std::vector<std::int64_t> rhs;      // per row
  /// x_alpha <= min over {i : alpha_i != 0} of floor(n_i t_{e_i} / alpha_i).
  std::vector<std::int64_t> upper_bounds;  // per variable

  const FiniteAbelianGroup& group() const { return layout->group; }
  std::size_t variable_count() const { return layout->variables.size(); }
};

LinearSystem build_system(const FiniteAbelianGroup& group, const Assignment& a);
LinearSystem build_system(std::shared_ptr<const SystemLayout> layout, const Assignment& a);

/// x_alpha per variable (same order as SystemLayout::variables).
struct Solution {
  std::vector<std::int64_t> x;

  friend bool operator==(const Solution&, const Solution&) = default;
  friend auto operator<=>(const Solution&, const Solution&) = default;
};

struct SolveLimits {
  std::uint64_t node_budget = 1'000'000'000;
};

struct SolveResult {
  std::vector<Solution> solutions;
  std::uint64_t nodes = 0;
  /// False iff the node budget ran out; `solutions` is then partial.
  bool complete = true;
};

/// All nonnegative integer solutions within the variable bounds, by
/// depth-first search. Variables are branched in descending order of the
/// number of rows they appear in (ties: ascending label index); every row
/// keeps its residual within [0, reach of the unassigned variables].
/// Solutions are returned in lexicographic order of x.
SolveResult solve_system(const LinearSystem& sys, const SolveLimits& limits = {});

/// True iff x satisfies every row of sys exactly and respects the bounds.
bool satisfies(const LinearSystem& sys, const Solution& s);

/// Witness cover: one component of degree x_alpha per nonzero x_alpha.
CoverData solution_cover(const FiniteAbelianGroup& group, const Solution& s);

/// First g whose spectrum value disagrees with the assignment.
struct Mismatch {
  std::size_t element = 0;
  std::int64_t expected = 0;
  std::int64_t actual = 0;
  /// Set when the cover itself is invalid (l_{e_i} non-integral).
  std::string reason;
};

/// Rebuilds the cover from s and checks its spectrum (computed by the cover
/// model, not by the system rows) against the assignment.
std::optional<Mismatch> verify_solution(const FiniteAbelianGroup& group, const Assignment& a, const Solution& s);

}  // namespace abcover
