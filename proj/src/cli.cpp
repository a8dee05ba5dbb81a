#include "abcover/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "abcover/bounds.hpp"
#include "abcover/classifier.hpp"
#include "abcover/cover_io.hpp"
#include "abcover/errors.hpp"
#include "abcover/fixtures.hpp"
#include "abcover/linear_system.hpp"
#include "abcover/report.hpp"
#include "abcover/spectrum_target.hpp"

namespace abcover::cli {
namespace {

using report::Json;

// Thrown for bad argument values that CLI11 cannot detect on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path.string());
  f << text;
}

FiniteAbelianGroup parse_group_arg(const std::string& text) {
  try {
    return FiniteAbelianGroup::from_invariant_factors([&] {
      std::vector<int> factors;
      std::size_t start = 0;
      while (start <= text.size()) {
        const auto pos = text.find(',', start);
        const auto piece = text.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
        factors.push_back(std::stoi(piece));
        if (pos == std::string::npos) break;
        start = pos + 1;
      }
      return factors;
    }());
  } catch (const DomainError& e) {
    throw UsageError(std::string("--group: ") + e.what());
  } catch (const std::logic_error&) {
    throw UsageError("--group: expected invariant factors like 2,2,4, got '" + text + "'");
  }
}

std::size_t parse_element_arg(const FiniteAbelianGroup& g, const std::string& text, const char* opt) {
  try {
    auto e = parse_element(text);
    g.check(e);
    return g.index_of(e);
  } catch (const std::exception& ex) {
    throw UsageError(std::string(opt) + ": " + ex.what());
  }
}

Json solution_json(const SystemLayout& layout, const Solution& s) {
  Json arr = Json::array();
  for (std::size_t v = 0; v < s.x.size(); ++v) {
    if (s.x[v] != 0) {
      arr.push_back({{"label", format_element(layout.group.element_at(layout.variables[v]))}, {"x", s.x[v]}});
    }
  }
  return arr;
}

int cmd_spectrum(std::int64_t d, bool oracle, std::ostream& out) {
  const auto target = derive_targets(d);
  if (const auto* t = std::get_if<SpectrumTarget>(&target)) {
    out << format_multiset(t->values) << '\n';
  } else {
    out << "infeasible (" << std::get<Infeasible>(target).constraint << ")\n";
  }
  if (oracle) {
    const auto res = derive_targets_oracle(d);
    out << "oracle: " << res.accepted.size() << " accepted";
    for (const auto& a : res.accepted) out << ' ' << format_multiset(a.values);
    out << ", " << res.rejected.size() << " rejected";
    if (!res.infeasible_reason.empty()) out << " (" << res.infeasible_reason << ")";
    out << '\n';
    for (const auto& r : res.rejected) out << "  rejected " << format_multiset(r.values) << " by " << r.failed_constraint << '\n';
    const bool agree = std::holds_alternative<SpectrumTarget>(target)
                           ? res.accepted.size() == 1 && res.accepted.front() == std::get<SpectrumTarget>(target)
                           : res.accepted.empty();
    if (!agree) {
      out << "oracle disagrees with closed form\n";
      return kExitVerificationFailed;
    }
  }
  return kExitOk;
}

struct ClassifyArgs {
  std::int64_t min = 2;
  std::int64_t max = 20;
  std::string group;
  bool no_dedup = false;
  std::uint64_t node_budget = SolveLimits{}.node_budget;
  unsigned workers = 0;
  std::string out;
  std::string csv;
  bool timing = false;
  bool trace = false;
};

int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
  ClassifyConfig config;
  config.dedup = !a.no_dedup;
  config.limits.node_budget = a.node_budget;
  config.workers = a.workers;
  if (!a.group.empty()) config.group = parse_group_arg(a.group);
  std::vector<ClassificationReport> reports;
  try {
    reports = classify_range(a.min, a.max, config);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  Json cfg;
  cfg["command"] = "classify";
  cfg["min"] = a.min;
  cfg["max"] = a.max;
  cfg["group"] = a.group.empty() ? Json(nullptr) : Json(config.group->notation());
  cfg["dedup"] = config.dedup;
  cfg["node_budget"] = a.node_budget;
  const report::Options opts{a.timing, a.trace};
  const auto doc = report::document(cfg, &reports, nullptr, opts);
  const auto csv = report::csv_summary(reports);
  if (a.out.empty()) {
    out << doc.dump(2) << '\n';
  } else {
    write_file(a.out, doc.dump(2) + "\n");
    std::filesystem::path csv_path = a.csv.empty() ? std::filesystem::path(a.out).replace_extension(".csv")
                                                   : std::filesystem::path(a.csv);
    write_file(csv_path, csv);
    out << csv;
  }
  if (a.out.empty() && !a.csv.empty()) write_file(a.csv, csv);
  return kExitOk;
}

struct SolveArgs {
  std::string group;
  std::string fixture;
  std::string from_cover;
  std::string g5;
  std::vector<std::string> s1;
  std::uint64_t node_budget = SolveLimits{}.node_budget;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const auto group = parse_group_arg(a.group);
  std::optional<CoverData> reference;
  Assignment assignment;
  if (!a.fixture.empty() || !a.from_cover.empty()) {
    if (!a.g5.empty() || !a.s1.empty()) throw UsageError("--g5/--s1 cannot be combined with a cover");
    try {
      reference = a.fixture.empty() ? io::parse_cover_file(a.from_cover) : fixture_cover(fixture(a.fixture));
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    if (reference->group.invariant_factors() != group.invariant_factors()) {
      throw UsageError("cover group " + reference->group.notation() + " differs from --group " + group.notation());
    }
    try {
      assignment = assignment_from_targets(cover::compute_spectrum(*reference).values);
    } catch (const DomainError& e) {
      throw UsageError(std::string("cover spectrum is not a canonical target: ") + e.what());
    }
  } else {
    if (a.g5.empty()) throw UsageError("solve needs --fixture, --from-cover or --g5/--s1");
    std::vector<std::int64_t> t(group.order(), 2);
    t[0] = 0;
    t[parse_element_arg(group, a.g5, "--g5")] = 5;
    for (const auto& s : a.s1) {
      const auto i = parse_element_arg(group, s, "--s1");
      if (t[i] != 2) throw UsageError("--s1 " + s + " repeats or collides with --g5");
      t[i] = 3;
    }
    try {
      assignment = assignment_from_targets(t);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  const auto layout = std::make_shared<const SystemLayout>(group);
  const auto sys = build_system(layout, assignment);
  const auto result = solve_system(sys, SolveLimits{a.node_budget});

  Json doc;
  doc["schema_version"] = report::kSchemaVersion;
  doc["tool"] = {{"name", report::kToolName}, {"version", report::kToolVersion}};
  doc["group"] = group.notation();
  doc["assignment"] = {{"g_prime", format_element(group.element_at(assignment.g_prime))}, {"s1", Json::array()}};
  for (auto i : assignment.s1) doc["assignment"]["s1"].push_back(format_element(group.element_at(i)));
  doc["complete"] = result.complete;
  doc["nodes"] = result.nodes;
  Json sols = Json::array();
  std::size_t failures = 0;
  for (const auto& s : result.solutions) {
    const auto mismatch = verify_solution(group, assignment, s);
    failures += mismatch.has_value();
    sols.push_back({{"x", solution_json(*layout, s)}, {"verified", !mismatch}});
  }
  doc["solutions"] = std::move(sols);
  int code = failures == 0 && result.complete ? kExitOk : kExitVerificationFailed;
  if (reference) {
    const auto totals = reference->totals();
    Solution ref;
    for (auto v : layout->variables) ref.x.push_back(totals[v]);
    std::string match = "none";
    for (const auto& s : result.solutions) {
      if (s == ref) match = "exact";
    }
    if (match == "none") {
      const AutomorphismAction action(group);
      const auto t = assignment.targets(group.order());
      const std::span<const std::int64_t> tn(t.data() + 1, t.size() - 1);
      const auto want = canonical_pair(action, tn, ref.x).values;
      for (const auto& s : result.solutions) {
        if (canonical_pair(action, tn, s.x).values == want) match = "aut_orbit";
      }
    }
    doc["reference_match"] = match;
    if (match == "none") code = kExitVerificationFailed;
  }
  out << doc.dump(2) << '\n';
  return code;
}

int cmd_verify(const std::string& path, bool trace, std::ostream& out, std::ostream& err) {
  CoverData cover = [&] {
    try {
      return io::parse_cover_file(path);
    } catch (const ParseError& e) {
      err << path << ":" << e.line() << ": " << e.what() << '\n';
      throw;
    } catch (const InvalidCoverData& e) {
      err << path << ": " << e.what() << '\n';
      throw;
    }
  }();
  const auto expected = cover.group.is_two_elementary() ? smoothness::Verdict::Smooth : smoothness::Verdict::Unsupported;
  const auto check = check_canonical_cover(std::filesystem::path(path).stem().string(), cover, expected);
  Json doc = report::fixture_json(check);
  doc["cover"] = report::cover_json(cover);
  doc["smoothness_detail"] = report::smoothness_json(smoothness::check_cover_smooth(cover), trace);
  out << doc.dump(2) << '\n';
  return check.ok ? kExitOk : kExitVerificationFailed;
}

int cmd_fixtures(bool json, std::ostream& out) {
  const auto checks = verify_fixtures();
  bool ok = true;
  for (const auto& c : checks) ok = ok && c.ok;
  if (json) {
    Json cfg;
    cfg["command"] = "fixtures";
    out << report::document(cfg, nullptr, &checks).dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < checks.size(); ++i) {
      const auto& c = checks[i];
      const auto& f = fixtures()[i];
      out << (c.ok ? "PASS " : "FAIL ") << c.name << " d=" << c.degree << (f.from_equations ? " equations" : " witness")
          << " spectrum=" << format_multiset(c.spectrum) << " (p_g,q,chi,K3,P2,P3)=(" << c.invariants.p_g << ','
          << c.invariants.q << ',' << c.invariants.chi_O << ',' << c.invariants.K3 << ',' << c.invariants.P2 << ','
          << c.invariants.P3 << ") " << smoothness::to_string(c.smoothness);
      if (!c.ok) out << " : " << c.failure;
      out << '\n';
    }
    out << (ok ? "all fixtures verified" : "fixture verification FAILED") << '\n';
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_invariants(const std::string& path, std::ostream& out) {
  const auto cover = io::parse_cover_file(path);
  Json doc;
  doc["cover"] = report::cover_json(cover);
  doc["spectrum"] = format_multiset(cover::compute_spectrum(cover).nonzero_multiset());
  doc["pushforward_twists"] = cover::pushforward_summands(cover);
  doc["invariants"] = report::invariants_json(cover::invariants(cover));
  out << doc.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Abelian covers of P^3 as canonical maps of threefolds", "abcover"};
  app.require_subcommand(1);
  app.set_version_flag("--version", report::kToolVersion);

  auto* spectrum = app.add_subcommand("spectrum", "Forced spectrum {l_g} for degree d");
  std::int64_t spec_d = 0;
  bool spec_oracle = false;
  spectrum->add_option("d", spec_d, "degree")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 40));
  spectrum->add_flag("--oracle", spec_oracle, "cross-check with the exhaustive multiset search (d <= 12)");

  auto* classify = app.add_subcommand("classify", "Solve every (group, assignment) cell for a degree range");
  ClassifyArgs ca;
  classify->add_option("--min", ca.min, "smallest degree")->capture_default_str();
  classify->add_option("--max", ca.max, "largest degree")->capture_default_str();
  classify->add_option("--group", ca.group, "restrict to one group, e.g. 2,2,2");
  classify->add_flag("--no-dedup", ca.no_dedup, "keep Aut-equivalent solutions");
  classify->add_option("--node-budget", ca.node_budget, "search nodes per cell")->capture_default_str();
  classify->add_option("--workers", ca.workers, "threads (default: ABCOVER_WORKERS or all cores)");
  classify->add_option("--out", ca.out, "write JSON here (CSV goes next to it)");
  classify->add_option("--csv", ca.csv, "CSV summary path");
  classify->add_flag("--timing", ca.timing, "include wall-clock times (breaks reproducibility)");
  classify->add_flag("--trace", ca.trace, "include smoothness reductions");

  auto* solve = app.add_subcommand("solve", "Solve the system of one assignment");
  SolveArgs sa;
  solve->add_option("--group", sa.group, "invariant factors, e.g. 2,2,2,2,2")->required();
  auto* fx = solve->add_option("--fixture", sa.fixture, "take the assignment from a shipped fixture");
  auto* fc = solve->add_option("--from-cover", sa.from_cover, "take the assignment from a cover file");
  fx->excludes(fc);
  solve->add_option("--g5", sa.g5, "element with l = 5, e.g. 1,1");
  solve->add_option("--s1", sa.s1, "element with l = 3 (repeat); the rest get l = 2");
  solve->add_option("--node-budget", sa.node_budget, "search nodes")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Check a cover file against the canonical profile");
  std::string verify_path;
  bool verify_trace = false;
  verify->add_option("file", verify_path, "cover file")->required();
  verify->add_flag("--trace", verify_trace, "show every stratum reduction");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "Verify the shipped fixtures");
  bool fixtures_json = false;
  fixtures_cmd->add_flag("--json", fixtures_json, "JSON instead of text");

  auto* bounds_cmd = app.add_subcommand("bounds", "Degree bounds for an invariant tuple");
  bounds::InvariantTuple bt;
  int dim_y = 0;
  std::int64_t pg_f = 0;
  bounds_cmd->add_option("--pg", bt.p_g, "geometric genus")->capture_default_str();
  bounds_cmd->add_option("--q", bt.q, "irregularity")->capture_default_str();
  bounds_cmd->add_option("--chi-omega", bt.chi_omega, "chi(omega_X)")->capture_default_str();
  bounds_cmd->add_option("--k3", bt.K3, "K^3")->capture_default_str();
  bounds_cmd->add_flag("--bpf", bt.base_point_free, "canonical system is base point free");
  auto* dy = bounds_cmd->add_option("--dim-y", dim_y, "dimension of the Albanese image factor");
  auto* pf = bounds_cmd->add_option("--pg-f", pg_f, "p_g of the general fibre");

  auto* inv = app.add_subcommand("invariants", "Spectrum and invariants of a cover file");
  std::string inv_path;
  inv->add_option("file", inv_path, "cover file")->required();

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << report::kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kExitUsage;
  }

  try {
    if (*spectrum) return cmd_spectrum(spec_d, spec_oracle, out);
    if (*classify) return cmd_classify(ca, out);
    if (*solve) return cmd_solve(sa, out);
    if (*verify) return cmd_verify(verify_path, verify_trace, out, err);
    if (*fixtures_cmd) return cmd_fixtures(fixtures_json, out);
    if (*bounds_cmd) {
      if (*dy) bt.dim_Y = dim_y;
      if (*pf) bt.p_g_F = pg_f;
      out << report::bounds_json(bt).dump(2) << '\n';
      return kExitOk;
    }
    if (*inv) return cmd_invariants(inv_path, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    if (*verify) return kExitVerificationFailed;
    err << "error: line " << e.line() << ": " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const InvalidCoverData& e) {
    if (*verify) return kExitVerificationFailed;
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const EffortExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace abcover::cli
