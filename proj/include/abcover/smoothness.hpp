#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "abcover/cover.hpp"

namespace abcover::smoothness {

/// Local exponents of a 2-elementary cover along a stratum: row i is the
/// equation z_i^2 = prod_c x_c^{M(i,c)}, column c a branch component through
/// the stratum. Entries are 0 or 1.
struct ExponentMatrix {
  std::size_t cols = 0;
  std::vector<std::vector<std::uint8_t>> rows;

  friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) = default;
};

/// Row `row` has a single 1, in column `col`.
struct Pivot {
  std::size_t row = 0;
  std::size_t col = 0;

  friend bool operator==(const Pivot&, const Pivot&) = default;
};

enum class Verdict { Smooth, SingularUnresolved, Unsupported };

std::string to_string(Verdict v);

/// Unit rows available for a reduction step.
std::vector<Pivot> admissible_pivots(const ExponentMatrix& m);

/// Takes z = sqrt(x_col) as a new coordinate: clears column `col` in every
/// other row, then deletes the pivot row and the column.
ExponentMatrix apply_pivot(const ExponentMatrix& m, Pivot p);

/// No entry equal to 1 remains.
bool is_trivial(const ExponentMatrix& m);

/// Replaces the rows by the reduced row echelon form over F_2. Multiplying
/// two equations z_i^2 = x^a, z_j^2 = x^b gives (z_i z_j)^2 = x^(a+b), and
/// even exponents are removed by the normalization, so this keeps the local
/// cover while exposing unit rows hidden in sums.
ExponentMatrix combine_rows(const ExponentMatrix& m);

enum class StepKind { Input, Pivot, Combine };

struct ReductionStep {
  StepKind kind = StepKind::Input;
  Pivot pivot;  // for Pivot steps
  ExponentMatrix result;
};

struct Reduction {
  Verdict verdict = Verdict::Smooth;
  /// Starts with the input matrix.
  std::vector<ReductionStep> steps;
};

/// Repeated unit-row reduction, first admissible pivot each time. When no
/// unit row is left the rows are combined once (combine_rows); if that still
/// exposes no unit row the verdict is SingularUnresolved. Smooth iff the
/// matrix reduces to no nonzero entries, i.e. iff the columns are linearly
/// independent over F_2. Throws DomainError on entries other than 0/1 or
/// ragged rows.
Reduction reduce_exponent_matrix(const ExponentMatrix& m);

std::string format_reduction(const Reduction& r);

std::string format_matrix(const ExponentMatrix& m);

/// One pairwise curve or triple point of the branch locus.
struct StratumResult {
  std::vector<std::size_t> components;  // indices into CoverData::components
  ExponentMatrix matrix;
  Reduction reduction;
};

struct SmoothnessVerdict {
  Verdict overall = Verdict::Smooth;
  std::vector<StratumResult> strata;
  std::string assumption;
  std::string note;
};

/// Builds and reduces the exponent matrix of every pair and every triple of
/// components. Components are assumed smooth and in general position (this
/// is recorded, not verified). Groups that are not 2-elementary yield
/// Unsupported with no strata.
SmoothnessVerdict check_cover_smooth(const CoverData& cover);

}  // namespace abcover::smoothness
