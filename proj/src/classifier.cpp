#include "abcover/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <thread>

#include "abcover/errors.hpp"

namespace abcover {
namespace {

constexpr std::size_t kBatchSize = 4096;

struct Cell {
  std::size_t index = 0;
  Assignment assignment;
  SolveResult result;
};

void solve_batch(std::vector<Cell>& batch, const std::shared_ptr<const SystemLayout>& layout,
                 const SolveLimits& limits, unsigned workers) {
  auto work = [&](std::atomic<std::size_t>& next) {
    for (std::size_t i = next++; i < batch.size(); i = next++) {
      batch[i].result = solve_system(build_system(layout, batch[i].assignment), limits);
    }
  };
  std::atomic<std::size_t> next{0};
  if (workers <= 1 || batch.size() < 2) {
    work(next);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, std::ref(next));
  for (auto& t : pool) t.join();
}

// Label-invariant fallback key: the sorted multiset of (t_g, x_g).
std::vector<std::int64_t> best_effort_key(const std::vector<std::int64_t>& t, const Solution& s) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::size_t v = 0; v < s.x.size(); ++v) pairs.emplace_back(t[v + 1], s.x[v]);
  std::sort(pairs.begin(), pairs.end());
  std::vector<std::int64_t> key;
  for (const auto& [a, b] : pairs) {
    key.push_back(a);
    key.push_back(b);
  }
  return key;
}

GroupRecord classify_group(const FiniteAbelianGroup& group, const SpectrumTarget& target,
                           const ClassifyConfig& config, unsigned workers) {
  const AutomorphismAction action(group);
  GroupRecord rec{group, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  rec.aut_supported = action.supported();
  rec.aut_order = action.size();
  rec.dedup = !config.dedup ? DedupMode::None : (action.supported() ? DedupMode::Orbit : DedupMode::BestEffort);
  rec.assignments_total = assignment_count(target.degree);

  const auto layout = std::make_shared<const SystemLayout>(group);
  std::vector<std::int64_t> values(target.values.begin(), target.values.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  const ProjectionFilter filter(group, values);
  std::map<std::vector<std::int64_t>, std::size_t> seen;  // dedup key -> witness position

  auto absorb = [&](std::vector<Cell>& batch) {
    solve_batch(batch, layout, config.limits, workers);
    for (auto& cell : batch) {
      rec.nodes += cell.result.nodes;
      if (!cell.result.complete) rec.incomplete_cells.push_back(cell.index);
      const auto t = cell.assignment.targets(group.order());
      const std::span<const std::int64_t> t_nonzero(t.data() + 1, t.size() - 1);
      for (auto& sol : cell.result.solutions) {
        if (verify_solution(group, cell.assignment, sol)) {
          ++rec.verification_failures;
          continue;
        }
        ++rec.raw_solutions;
        std::vector<std::int64_t> key;
        if (rec.dedup == DedupMode::Orbit) {
          key = canonical_pair(action, t_nonzero, sol.x).values;
        } else if (rec.dedup == DedupMode::BestEffort) {
          key = best_effort_key(t, sol);
        } else {
          key.assign(t.begin(), t.end());
          key.insert(key.end(), sol.x.begin(), sol.x.end());
        }
        auto [it, inserted] = seen.emplace(std::move(key), rec.witnesses.size());
        if (inserted) {
          Witness w;
          w.assignment_index = cell.index;
          w.assignment = cell.assignment;
          w.solution = sol;
          rec.witnesses.push_back(std::move(w));
        }
        ++rec.witnesses[it->second].multiplicity;
      }
    }
    batch.clear();
  };

  std::vector<Cell> batch;
  batch.reserve(kBatchSize);
  for_each_assignment(
      group, target, config.dedup,
      [&](std::size_t index, const Assignment& a) {
        ++rec.assignments_tried;
        if (!filter.admits(a.targets(group.order()))) {
          ++rec.assignments_pruned;
          return true;
        }
        batch.push_back(Cell{index, a, {}});
        if (batch.size() == kBatchSize) absorb(batch);
        return true;
      },
      &action);
  absorb(batch);

  const auto expected = expected_invariants(target.degree);
  for (auto& w : rec.witnesses) {
    const auto cover = solution_cover(group, w.solution);
    w.invariants = cover::invariants(cover);
    w.invariants_ok = w.invariants == expected;
    w.smoothness = smoothness::check_cover_smooth(cover);
  }
  return rec;
}

int smoothness_rank(smoothness::Verdict v) {
  switch (v) {
    case smoothness::Verdict::Smooth: return 2;
    case smoothness::Verdict::SingularUnresolved: return 1;
    case smoothness::Verdict::Unsupported: return 0;
  }
  return 0;
}

}  // namespace

std::string to_string(DedupMode m) {
  switch (m) {
    case DedupMode::Orbit: return "orbit";
    case DedupMode::BestEffort: return "best_effort";
    case DedupMode::None: return "none";
  }
  return "?";
}

std::string to_string(Feasibility f) {
  switch (f) {
    case Feasibility::Feasible: return "feasible";
    case Feasibility::Infeasible: return "infeasible";
    case Feasibility::Incomplete: return "incomplete";
  }
  return "?";
}

std::size_t ClassificationReport::witness_count() const noexcept {
  std::size_t n = 0;
  for (const auto& g : groups) n += g.witnesses.size();
  return n;
}

Invariants expected_invariants(std::int64_t d) {
  Invariants inv;
  inv.p_g = 4;
  inv.q = 0;
  inv.h2 = 0;
  inv.chi_O = -3;
  inv.K3 = d;
  inv.P2 = d / 2 + 9;
  inv.P3 = 5 * d / 2 + 15;
  return inv;
}

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("ABCOVER_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

ClassificationReport classify_degree(std::int64_t d, const ClassifyConfig& config) {
  if (d < 2) throw DomainError("degree must be >= 2, got " + std::to_string(d));
  const auto start = std::chrono::steady_clock::now();
  ClassificationReport report;
  report.degree = d;
  report.target = derive_targets(d);
  if (const auto* target = std::get_if<SpectrumTarget>(&report.target)) {
    const unsigned workers = resolve_workers(config.workers);
    std::vector<FiniteAbelianGroup> groups;
    if (config.group) {
      if (static_cast<std::int64_t>(config.group->order()) == d) groups.push_back(*config.group);
    } else {
      groups = enumerate_groups(d);
    }
    for (const auto& g : groups) report.groups.push_back(classify_group(g, *target, config, workers));
  }

  bool incomplete = false;
  for (const auto& g : report.groups) {
    incomplete = incomplete || !g.incomplete_cells.empty();
    for (const auto& w : g.witnesses) {
      if (!report.best_smoothness || smoothness_rank(w.smoothness.overall) > smoothness_rank(*report.best_smoothness)) {
        report.best_smoothness = w.smoothness.overall;
      }
    }
  }
  if (report.witness_count() > 0) {
    report.verdict = Feasibility::Feasible;
  } else {
    report.verdict = incomplete ? Feasibility::Incomplete : Feasibility::Infeasible;
  }
  if (incomplete) report.flags.push_back("effort exceeded in some cells; results are partial");
  if (report.best_smoothness == smoothness::Verdict::Unsupported) {
    report.flags.push_back("smoothness unsupported / terminality not established");
  } else if (report.best_smoothness == smoothness::Verdict::SingularUnresolved) {
    report.flags.push_back("no witness certified smooth by local reduction");
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<ClassificationReport> classify_range(std::int64_t d_min, std::int64_t d_max,
                                                 const ClassifyConfig& config) {
  if (d_min < 2 || d_max < d_min) {
    throw DomainError("degree range must satisfy 2 <= min <= max, got [" + std::to_string(d_min) + "," +
                      std::to_string(d_max) + "]");
  }
  std::vector<ClassificationReport> out;
  for (std::int64_t d = d_min; d <= d_max; ++d) out.push_back(classify_degree(d, config));
  return out;
}

}  // namespace abcover
