#include "abcover/smoothness.hpp"

#include <sstream>

#include "abcover/errors.hpp"

namespace abcover::smoothness {
namespace {

constexpr const char* kGenericity =
    "components are smooth hypersurfaces meeting transversally; no three share a curve, no four share a point";

void check_shape(const ExponentMatrix& m) {
  for (const auto& row : m.rows) {
    if (row.size() != m.cols) throw DomainError("exponent matrix rows must all have " + std::to_string(m.cols) + " entries");
    for (auto v : row) {
      if (v > 1) throw DomainError("exponent matrix entries must be 0 or 1");
    }
  }
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Smooth: return "smooth";
    case Verdict::SingularUnresolved: return "singular_unresolved";
    case Verdict::Unsupported: return "unsupported";
  }
  return "?";
}

std::vector<Pivot> admissible_pivots(const ExponentMatrix& m) {
  std::vector<Pivot> out;
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    std::size_t ones = 0, col = 0;
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (m.rows[r][c]) {
        ++ones;
        col = c;
      }
    }
    if (ones == 1) out.push_back({r, col});
  }
  return out;
}

ExponentMatrix apply_pivot(const ExponentMatrix& m, Pivot p) {
  ExponentMatrix out;
  out.cols = m.cols - 1;
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    if (r == p.row) continue;
    std::vector<std::uint8_t> row;
    row.reserve(out.cols);
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (c != p.col) row.push_back(m.rows[r][c]);
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

bool is_trivial(const ExponentMatrix& m) {
  for (const auto& row : m.rows) {
    for (auto v : row) {
      if (v) return false;
    }
  }
  return true;
}

ExponentMatrix combine_rows(const ExponentMatrix& m) {
  ExponentMatrix out = m;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < out.cols && lead < out.rows.size(); ++c) {
    std::size_t r = lead;
    while (r < out.rows.size() && !out.rows[r][c]) ++r;
    if (r == out.rows.size()) continue;
    std::swap(out.rows[lead], out.rows[r]);
    for (std::size_t o = 0; o < out.rows.size(); ++o) {
      if (o != lead && out.rows[o][c]) {
        for (std::size_t cc = 0; cc < out.cols; ++cc) out.rows[o][cc] ^= out.rows[lead][cc];
      }
    }
    ++lead;
  }
  return out;
}

Reduction reduce_exponent_matrix(const ExponentMatrix& m) {
  check_shape(m);
  Reduction red;
  red.steps.push_back({StepKind::Input, {}, m});
  bool combined = false;
  while (!is_trivial(red.steps.back().result)) {
    const auto& cur = red.steps.back().result;
    const auto pivots = admissible_pivots(cur);
    if (!pivots.empty()) {
      auto next = apply_pivot(cur, pivots.front());
      red.steps.push_back({StepKind::Pivot, pivots.front(), std::move(next)});
      combined = false;
      continue;
    }
    if (combined) {
      red.verdict = Verdict::SingularUnresolved;
      return red;
    }
    auto next = combine_rows(cur);
    red.steps.push_back({StepKind::Combine, {}, std::move(next)});
    combined = true;
  }
  red.verdict = Verdict::Smooth;
  return red;
}

std::string format_matrix(const ExponentMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    os << (r ? " " : "") << '(';
    for (std::size_t c = 0; c < m.cols; ++c) os << (c ? "," : "") << int{m.rows[r][c]};
    os << ')';
  }
  os << ']';
  return os.str();
}

std::string format_reduction(const Reduction& r) {
  std::ostringstream os;
  for (const auto& step : r.steps) {
    switch (step.kind) {
      case StepKind::Input: os << format_matrix(step.result); break;
      case StepKind::Pivot:
        os << " -> pivot(row " << step.pivot.row + 1 << ", col " << step.pivot.col + 1 << ") "
           << format_matrix(step.result);
        break;
      case StepKind::Combine: os << " -> combine " << format_matrix(step.result); break;
    }
  }
  os << " => " << to_string(r.verdict);
  return os.str();
}

SmoothnessVerdict check_cover_smooth(const CoverData& cover) {
  SmoothnessVerdict verdict;
  verdict.assumption = kGenericity;
  if (!cover.group.is_two_elementary()) {
    verdict.overall = Verdict::Unsupported;
    verdict.note = "group " + cover.group.display_name() + " is not 2-elementary; terminality not established";
    return verdict;
  }
  const std::size_t k = cover.group.rank();
  const std::size_t n = cover.components.size();
  auto stratum = [&](std::vector<std::size_t> comps) {
    StratumResult s;
    s.components = std::move(comps);
    s.matrix.cols = s.components.size();
    s.matrix.rows.assign(k, std::vector<std::uint8_t>(s.matrix.cols, 0));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t c = 0; c < s.components.size(); ++c) {
        s.matrix.rows[i][c] = static_cast<std::uint8_t>(cover.components[s.components[c]].label.coords[i] % 2);
      }
    }
    s.reduction = reduce_exponent_matrix(s.matrix);
    if (s.reduction.verdict != Verdict::Smooth) verdict.overall = Verdict::SingularUnresolved;
    verdict.strata.push_back(std::move(s));
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) stratum({a, b});
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) stratum({a, b, c});
    }
  }
  return verdict;
}

}  // namespace abcover::smoothness
