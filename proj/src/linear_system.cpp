#include "abcover/linear_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "abcover/errors.hpp"

namespace abcover {

std::vector<std::int64_t> Assignment::targets(std::size_t order) const {
  std::vector<std::int64_t> t(order, 0);
  t.at(g_prime) = 5;
  for (auto g : s1) t.at(g) = 3;
  for (auto g : s2) t.at(g) = 2;
  return t;
}

Assignment assignment_from_targets(const std::vector<std::int64_t>& targets) {
  if (targets.empty() || targets[0] != 0) throw DomainError("target of the zero element must be 0");
  Assignment a;
  bool have_prime = false;
  for (std::size_t g = 1; g < targets.size(); ++g) {
    switch (targets[g]) {
      case 5:
        if (have_prime) throw DomainError("more than one element with target 5");
        a.g_prime = g;
        have_prime = true;
        break;
      case 3: a.s1.push_back(g); break;
      case 2: a.s2.push_back(g); break;
      default: throw DomainError("target value " + std::to_string(targets[g]) + " is not one of 5, 3, 2");
    }
  }
  if (!have_prime) throw DomainError("no element with target 5");
  if (a.s1.size() != a.s2.size()) throw DomainError("S_1 and S_2 must have equal size");
  return a;
}

std::uint64_t assignment_count(std::int64_t d) {
  if (d < 2 || d % 2 != 0) return 0;
  const std::uint64_t m = static_cast<std::uint64_t>(d - 2);
  const std::uint64_t h = static_cast<std::uint64_t>(d / 2 - 1);
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= h; ++i) c = c * (m - h + i) / i;
  return static_cast<std::uint64_t>(d - 1) * c;
}

void for_each_assignment(const FiniteAbelianGroup& group, const SpectrumTarget& target, bool dedup,
                         const std::function<bool(std::size_t, const Assignment&)>& fn,
                         const AutomorphismAction* action) {
  const auto d = static_cast<std::int64_t>(group.order());
  if (d != target.degree || d % 2 != 0) return;
  std::optional<AutomorphismAction> owned;
  if (dedup && action == nullptr) {
    owned.emplace(group);
    action = &*owned;
  }
  const bool reduce = dedup && action->supported();
  const std::size_t h = static_cast<std::size_t>(d / 2 - 1);

  std::size_t index = 0;
  std::vector<std::int64_t> values(static_cast<std::size_t>(d - 1));
  for (std::size_t gp = 1; gp < group.order(); ++gp) {
    std::vector<std::size_t> rest;
    for (std::size_t g = 1; g < group.order(); ++g) {
      if (g != gp) rest.push_back(g);
    }
    std::vector<std::size_t> pick(h);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      Assignment a;
      a.g_prime = gp;
      std::size_t p = 0;
      for (std::size_t r = 0; r < rest.size(); ++r) {
        if (p < h && pick[p] == r) {
          a.s1.push_back(rest[r]);
          ++p;
        } else {
          a.s2.push_back(rest[r]);
        }
      }
      bool keep = true;
      if (reduce) {
        values[gp - 1] = 5;
        for (auto g : a.s1) values[g - 1] = 3;
        for (auto g : a.s2) values[g - 1] = 2;
        keep = is_canonical(*action, values);
      }
      if (keep && !fn(index, a)) return;
      ++index;

      // Next h-combination of rest.size() in lexicographic order.
      std::size_t i = h;
      while (i > 0 && pick[i - 1] == rest.size() - h + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < h; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
}

std::vector<Assignment> enumerate_assignments(const FiniteAbelianGroup& group, const SpectrumTarget& target,
                                              bool dedup) {
  std::vector<Assignment> out;
  for_each_assignment(group, target, dedup, [&](std::size_t, const Assignment& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

struct ProjectionFilter::Table {
  std::set<std::string> images;
};

namespace {

// Every tuple (sum_r (jr mod m) y_r / m)_j with entries in `values`.
std::shared_ptr<const ProjectionFilter::Table> build_projection_table(int m, const std::vector<std::int64_t>& values,
                                                                      std::uint64_t cap);

}  // namespace

ProjectionFilter::ProjectionFilter(const FiniteAbelianGroup& group, const std::vector<std::int64_t>& values,
                                   std::uint64_t enumeration_cap) {
  const std::size_t n = group.order();
  multiples_.resize(n);
  tables_.resize(n);
  std::map<int, std::shared_ptr<const Table>> by_order;
  for (std::size_t gi = 1; gi < n; ++gi) {
    const auto g = group.element_at(gi);
    auto cur = g;
    while (true) {
      const auto ci = group.index_of(cur);
      if (ci == 0) break;
      multiples_[gi].push_back(ci);
      cur = group.add(cur, g);
    }
    const int m = static_cast<int>(multiples_[gi].size()) + 1;
    auto it = by_order.find(m);
    if (it == by_order.end()) it = by_order.emplace(m, build_projection_table(m, values, enumeration_cap)).first;
    tables_[gi] = it->second;
  }
}

bool ProjectionFilter::admits(const std::vector<std::int64_t>& targets) const {
  std::string key;
  for (std::size_t gi = 1; gi < tables_.size(); ++gi) {
    if (!tables_[gi]) continue;
    key.clear();
    for (auto j : multiples_[gi]) key.push_back(static_cast<char>(targets[j]));
    if (!tables_[gi]->images.count(key)) return false;
  }
  return true;
}

std::vector<int> ProjectionFilter::checked_orders() const {
  std::set<int> out;
  for (std::size_t gi = 1; gi < tables_.size(); ++gi) {
    if (tables_[gi]) out.insert(static_cast<int>(multiples_[gi].size()) + 1);
  }
  return {out.begin(), out.end()};
}

namespace {

std::shared_ptr<const ProjectionFilter::Table> build_projection_table(int m, const std::vector<std::int64_t>& values,
                                                                      std::uint64_t cap) {
  auto table = std::make_shared<ProjectionFilter::Table>();
  if (values.empty()) return table;
  const std::int64_t vmax = *std::max_element(values.begin(), values.end());
  std::vector<char> allowed(static_cast<std::size_t>(vmax) + 1, 0);
  for (auto v : values) {
    if (v >= 0) allowed[static_cast<std::size_t>(v)] = 1;
  }
  const std::int64_t limit = vmax * m;  // bound on each numerator
  std::vector<std::int64_t> num(static_cast<std::size_t>(m), 0);  // num[j] for j = 1..m-1
  std::uint64_t visited = 0;
  bool capped = false;
  std::string key(static_cast<std::size_t>(m - 1), '\0');
  // Depth-first over r = 1..m-1, adding copies of r's column.
  auto rec = [&](auto&& self, int r) -> void {
    if (capped) return;
    if (++visited > cap) {
      capped = true;
      return;
    }
    if (r == m) {
      for (int j = 1; j < m; ++j) {
        if (num[j] % m != 0) return;
        const auto v = num[j] / m;
        if (v > vmax || !allowed[static_cast<std::size_t>(v)]) return;
        key[static_cast<std::size_t>(j - 1)] = static_cast<char>(v);
      }
      table->images.insert(key);
      return;
    }
    int added = 0;
    while (true) {
      self(self, r + 1);
      bool over = false;
      for (int j = 1; j < m; ++j) {
        num[j] += (static_cast<std::int64_t>(j) * r) % m;
        over = over || num[j] > limit;
      }
      ++added;
      if (over) break;
    }
    for (int j = 1; j < m; ++j) num[j] -= added * ((static_cast<std::int64_t>(j) * r) % m);
  };
  rec(rec, 1);
  if (capped) return nullptr;
  return table;
}

}  // namespace

SystemLayout::SystemLayout(FiniteAbelianGroup g) : group(std::move(g)) {
  const auto elems = group.elements();
  const auto& n = group.invariant_factors();
  const std::int64_t N = group.exponent();
  for (std::size_t a = 1; a < elems.size(); ++a) variables.push_back(a);
  const std::size_t nv = variables.size();

  // pairing[g][alpha] = N * sum_i g_i alpha_i / n_i (not reduced).
  auto raw_pairing = [&](std::size_t gi, std::size_t ai) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n.size(); ++i) s += std::int64_t{elems[gi].coords[i]} * elems[ai].coords[i] * (N / n[i]);
    return s;
  };

  for (std::size_t i = 0; i < n.size(); ++i) {
    kinds.push_back(RowKind::BasisSum);
    anchors.push_back(i);
    std::vector<std::int64_t> row(nv);
    for (std::size_t v = 0; v < nv; ++v) row[v] = elems[variables[v]].coords[i];
    coeffs.push_back(std::move(row));
  }
  for (std::size_t gi = 1; gi < elems.size(); ++gi) {
    kinds.push_back(RowKind::Spectrum);
    anchors.push_back(gi);
    std::vector<std::int64_t> row(nv);
    for (std::size_t v = 0; v < nv; ++v) row[v] = raw_pairing(gi, variables[v]) / N;
    coeffs.push_back(std::move(row));
  }
  for (std::size_t gi = 1; gi < elems.size(); ++gi) {
    kinds.push_back(RowKind::Fractional);
    anchors.push_back(gi);
    std::vector<std::int64_t> row(nv);
    for (std::size_t v = 0; v < nv; ++v) row[v] = raw_pairing(gi, variables[v]) % N;
    coeffs.push_back(std::move(row));
  }
  kinds.push_back(RowKind::Ramification);
  anchors.push_back(0);
  std::vector<std::int64_t> ram(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    const std::int64_t m = group.element_order(elems[variables[v]]);
    ram[v] = N - N / m;
  }
  coeffs.push_back(std::move(ram));

  std::vector<std::size_t> row_count(nv, 0);
  for (const auto& row : coeffs) {
    for (std::size_t v = 0; v < nv; ++v) row_count[v] += row[v] != 0 ? 1 : 0;
  }
  branch_order.resize(nv);
  std::iota(branch_order.begin(), branch_order.end(), 0);
  std::stable_sort(branch_order.begin(), branch_order.end(),
                   [&](std::size_t a, std::size_t b) { return row_count[a] > row_count[b]; });
}

LinearSystem build_system(const FiniteAbelianGroup& group, const Assignment& a) {
  return build_system(std::make_shared<const SystemLayout>(group), a);
}

LinearSystem build_system(std::shared_ptr<const SystemLayout> layout, const Assignment& a) {
  const auto& G = layout->group;
  const auto& n = G.invariant_factors();
  const std::int64_t N = G.exponent();
  const auto d = static_cast<std::int64_t>(G.order());

  LinearSystem sys;
  sys.targets = a.targets(G.order());
  const auto& t = sys.targets;
  std::vector<std::int64_t> t_basis(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) t_basis[i] = t[G.index_of(G.basis(i))];

  sys.rhs.resize(layout->row_count());
  for (std::size_t r = 0; r < layout->row_count(); ++r) {
    const std::size_t anchor = layout->anchors[r];
    switch (layout->kinds[r]) {
      case RowKind::BasisSum: sys.rhs[r] = n[anchor] * t_basis[anchor]; break;
      case RowKind::Spectrum: {
        const auto g = G.element_at(anchor);
        std::int64_t s = 0;
        for (std::size_t i = 0; i < n.size(); ++i) s += g.coords[i] * t_basis[i];
        sys.rhs[r] = s - t[anchor];
        break;
      }
      case RowKind::Fractional: sys.rhs[r] = N * t[anchor]; break;
      case RowKind::Ramification: {
        const std::int64_t total = 2 * N * std::accumulate(t.begin(), t.end(), std::int64_t{0});
        sys.rhs[r] = total % d == 0 ? total / d : -1;
        break;
      }
    }
  }

  sys.upper_bounds.resize(layout->variables.size());
  for (std::size_t v = 0; v < layout->variables.size(); ++v) {
    const auto alpha = G.element_at(layout->variables[v]);
    std::int64_t ub = INT64_MAX;
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (alpha.coords[i] != 0) ub = std::min(ub, n[i] * t_basis[i] / alpha.coords[i]);
    }
    sys.upper_bounds[v] = ub;
  }
  sys.layout = std::move(layout);
  return sys;
}

namespace {

class Search {
 public:
  Search(const LinearSystem& sys, const SolveLimits& limits) : sys_(sys), limits_(limits) {}

  SolveResult run() {
    const auto& L = *sys_.layout;
    const std::size_t nv = L.variables.size();
    const std::size_t nr = L.row_count();
    result_.nodes = 1;
    for (auto r : sys_.rhs) {
      if (r < 0) return std::move(result_);
    }

    // Tighten bounds: every row is an equality with nonnegative coefficients.
    ub_ = sys_.upper_bounds;
    for (std::size_t r = 0; r < nr; ++r) {
      for (std::size_t v = 0; v < nv; ++v) {
        if (L.coeffs[r][v] > 0) ub_[v] = std::min(ub_[v], sys_.rhs[r] / L.coeffs[r][v]);
      }
    }

    order_ = L.branch_order;
    support_.assign(nv, {});
    for (std::size_t j = 0; j < nv; ++j) {
      for (std::size_t r = 0; r < nr; ++r) {
        if (L.coeffs[r][order_[j]] > 0) support_[j].push_back({r, L.coeffs[r][order_[j]]});
      }
    }
    reach_.assign(nr, std::vector<std::int64_t>(nv + 1, 0));
    for (std::size_t r = 0; r < nr; ++r) {
      for (std::size_t j = nv; j-- > 0;) {
        reach_[r][j] = reach_[r][j + 1] + L.coeffs[r][order_[j]] * ub_[order_[j]];
      }
    }
    residual_ = sys_.rhs;
    for (std::size_t r = 0; r < nr; ++r) {
      if (residual_[r] > reach_[r][0]) return std::move(result_);
    }
    x_.assign(nv, 0);
    dfs(0);
    std::sort(result_.solutions.begin(), result_.solutions.end());
    return std::move(result_);
  }

 private:
  struct Entry {
    std::size_t row;
    std::int64_t coeff;
  };

  // Invariant on entry: 0 <= residual_[r] <= reach_[r][j] for every row.
  bool dfs(std::size_t j) {
    if (j == order_.size()) {
      result_.solutions.push_back(Solution{x_});
      return true;
    }
    const std::size_t v = order_[j];
    std::int64_t lo = 0, hi = ub_[v];
    for (const auto& [r, c] : support_[j]) {
      hi = std::min(hi, residual_[r] / c);
      const std::int64_t need = residual_[r] - reach_[r][j + 1];
      if (need > 0) lo = std::max(lo, (need + c - 1) / c);
    }
    for (std::int64_t val = lo; val <= hi; ++val) {
      if (++result_.nodes > limits_.node_budget) {
        result_.complete = false;
        return false;
      }
      for (const auto& [r, c] : support_[j]) residual_[r] -= c * val;
      x_[v] = val;
      const bool go_on = dfs(j + 1);
      for (const auto& [r, c] : support_[j]) residual_[r] += c * val;
      if (!go_on) return false;
    }
    x_[v] = 0;
    return true;
  }

  const LinearSystem& sys_;
  SolveLimits limits_;
  SolveResult result_;
  std::vector<std::int64_t> ub_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<Entry>> support_;
  std::vector<std::vector<std::int64_t>> reach_;
  std::vector<std::int64_t> residual_;
  std::vector<std::int64_t> x_;
};

}  // namespace

SolveResult solve_system(const LinearSystem& sys, const SolveLimits& limits) { return Search(sys, limits).run(); }

bool satisfies(const LinearSystem& sys, const Solution& s) {
  const auto& L = *sys.layout;
  if (s.x.size() != L.variables.size()) return false;
  for (std::size_t v = 0; v < s.x.size(); ++v) {
    if (s.x[v] < 0 || s.x[v] > sys.upper_bounds[v]) return false;
  }
  for (std::size_t r = 0; r < L.row_count(); ++r) {
    std::int64_t lhs = 0;
    for (std::size_t v = 0; v < s.x.size(); ++v) lhs += L.coeffs[r][v] * s.x[v];
    if (lhs != sys.rhs[r]) return false;
  }
  return true;
}

CoverData solution_cover(const FiniteAbelianGroup& group, const Solution& s) {
  if (s.x.size() + 1 != group.order()) throw DomainError("solution length does not match the group");
  CoverData cover{group, {}};
  for (std::size_t v = 0; v < s.x.size(); ++v) {
    if (s.x[v] == 0) continue;
    const auto label = group.element_at(v + 1);
    cover.components.push_back({label, s.x[v], "p" + format_element(label)});
  }
  return cover;
}

std::optional<Mismatch> verify_solution(const FiniteAbelianGroup& group, const Assignment& a, const Solution& s) {
  const auto cover = solution_cover(group, s);
  const auto t = a.targets(group.order());
  std::optional<Spectrum> spec;
  try {
    spec = cover::compute_spectrum(cover);
  } catch (const InvalidCoverData& e) {
    if (e.kind() != InvalidCoverData::Kind::Divisibility) throw;
    const auto e_i = group.index_of(group.basis(e.index()));
    return Mismatch{e_i, t[e_i], -1, e.what()};
  }
  for (std::size_t g = 1; g < group.order(); ++g) {
    if (spec->values[g] != t[g]) return Mismatch{g, t[g], spec->values[g], {}};
  }
  return std::nullopt;
}

}  // namespace abcover
