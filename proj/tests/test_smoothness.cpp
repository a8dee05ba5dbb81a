#include <doctest.h>

#include <set>

#include "abcover/errors.hpp"
#include "abcover/fixtures.hpp"
#include "abcover/smoothness.hpp"
#include "oracles.hpp"

using namespace abcover;
using namespace abcover::smoothness;

namespace {

ExponentMatrix mat(std::size_t cols, std::vector<std::vector<std::uint8_t>> rows) { return {cols, std::move(rows)}; }

// Every verdict reachable by some sequence of pivot choices, with the same
// combine rule as reduce_exponent_matrix.
void all_verdicts(const ExponentMatrix& m, bool combined, std::set<Verdict>& out) {
  if (is_trivial(m)) {
    out.insert(Verdict::Smooth);
    return;
  }
  const auto pivots = admissible_pivots(m);
  if (pivots.empty()) {
    if (combined) {
      out.insert(Verdict::SingularUnresolved);
      return;
    }
    all_verdicts(combine_rows(m), true, out);
    return;
  }
  for (const auto& p : pivots) all_verdicts(apply_pivot(m, p), false, out);
}

// Drops zero columns, which carry no branching.
ExponentMatrix without_zero_columns(const ExponentMatrix& m) {
  ExponentMatrix out;
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < m.cols; ++c) {
    for (const auto& r : m.rows) {
      if (r[c]) {
        keep.push_back(c);
        break;
      }
    }
  }
  out.cols = keep.size();
  for (const auto& r : m.rows) {
    std::vector<std::uint8_t> row;
    for (auto c : keep) row.push_back(r[c]);
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace

TEST_CASE("reduction examples") {
  // Pair (t_1, q) of the degree-8 cover.
  const auto r8 = reduce_exponent_matrix(mat(2, {{1, 1}, {0, 1}, {0, 1}}));
  CHECK(r8.verdict == Verdict::Smooth);
  REQUIRE(r8.steps.size() == 3);
  CHECK(r8.steps[1].kind == StepKind::Pivot);
  CHECK(r8.steps[1].pivot == Pivot{1, 1});
  CHECK(r8.steps[1].result == mat(1, {{1}, {0}}));
  // z_1^2 = xyw, z_3^2 = yw, z_4^2 = w.
  CHECK(reduce_exponent_matrix(mat(3, {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}})).verdict == Verdict::Smooth);
  // z^2 = xy.
  CHECK(reduce_exponent_matrix(mat(2, {{1, 1}})).verdict == Verdict::SingularUnresolved);
  // No unit row, but independent columns: needs the row combination.
  const auto r16 = reduce_exponent_matrix(mat(3, {{1, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  CHECK(r16.verdict == Verdict::Smooth);
  CHECK(r16.steps[1].kind == StepKind::Combine);
  CHECK(combine_rows(mat(3, {{1, 1, 1}, {1, 0, 1}, {1, 1, 0}})) == mat(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(format_matrix(mat(2, {{1, 0}, {0, 1}})) == "[(1,0) (0,1)]");
  CHECK_THROWS_AS(reduce_exponent_matrix(mat(2, {{1, 2}})), DomainError);
  CHECK_THROWS_AS(reduce_exponent_matrix(mat(2, {{1}})), DomainError);
}

TEST_CASE("verdicts are independent of pivot order and match F_2 independence") {
  // All 0/1 matrices with k <= 4 rows and s <= 3 columns.
  std::size_t checked = 0;
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::size_t s = 1; s <= 3; ++s) {
      const std::size_t bits = k * s;
      for (std::size_t mask = 0; mask < (std::size_t{1} << bits); ++mask) {
        ExponentMatrix m{s, std::vector<std::vector<std::uint8_t>>(k, std::vector<std::uint8_t>(s))};
        for (std::size_t b = 0; b < bits; ++b) m.rows[b / s][b % s] = static_cast<std::uint8_t>(mask >> b & 1);
        std::set<Verdict> reachable;
        all_verdicts(m, false, reachable);
        CHECK(reachable.size() == 1);
        const auto v = reduce_exponent_matrix(m).verdict;
        CHECK(reachable.count(v) == 1);
        const auto nz = without_zero_columns(m);
        CHECK((v == Verdict::Smooth) == oracle::columns_independent(nz.rows, nz.cols));
        ++checked;
      }
    }
  }
  CHECK(checked > 4000);
}

TEST_CASE("adding a zero row never changes the verdict") {
  for (std::size_t s = 1; s <= 3; ++s) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << (2 * s)); ++mask) {
      ExponentMatrix m{s, std::vector<std::vector<std::uint8_t>>(2, std::vector<std::uint8_t>(s))};
      for (std::size_t b = 0; b < 2 * s; ++b) m.rows[b / s][b % s] = static_cast<std::uint8_t>(mask >> b & 1);
      auto padded = m;
      padded.rows.emplace_back(s, 0);
      CHECK(reduce_exponent_matrix(m).verdict == reduce_exponent_matrix(padded).verdict);
    }
  }
}

TEST_CASE("cover verdicts") {
  for (const auto& f : fixtures()) {
    const auto v = check_cover_smooth(fixture_cover(f));
    CHECK_MESSAGE(v.overall == f.expected_smoothness, f.name);
    CHECK_FALSE(v.assumption.empty());
  }
  const auto d2 = check_cover_smooth(fixture_cover(fixture("deg02")));
  CHECK(d2.strata.empty());
  const auto d6 = check_cover_smooth(fixture_cover(fixture("deg06")));
  CHECK(d6.overall == Verdict::Unsupported);
  CHECK(d6.note.find("terminality not established") != std::string::npos);
  const auto d32 = check_cover_smooth(fixture_cover(fixture("deg32")));
  CHECK(d32.strata.size() == 45 + 120);
  // Two components sharing a label in a Z_2 cover.
  CoverData twice{FiniteAbelianGroup({2}), {{GroupElement{{1}}, 4, "a"}, {GroupElement{{1}}, 6, "b"}}};
  CHECK(check_cover_smooth(twice).overall == Verdict::SingularUnresolved);
  CHECK(to_string(Verdict::SingularUnresolved) == "singular_unresolved");
}
