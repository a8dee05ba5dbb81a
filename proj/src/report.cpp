#include "abcover/report.hpp"

#include <sstream>

#include "abcover/errors.hpp"
#include "abcover/spectrum_target.hpp"

namespace abcover::report {
namespace {

std::string element_string(const FiniteAbelianGroup& g, std::size_t index) {
  return format_element(g.element_at(index));
}

Json element_list(const FiniteAbelianGroup& g, const std::vector<std::size_t>& idx) {
  Json out = Json::array();
  for (auto i : idx) out.push_back(element_string(g, i));
  return out;
}

Json witness_json(const GroupRecord& rec, const Witness& w, const Options& opts) {
  const auto& g = rec.group;
  Json j;
  j["assignment_index"] = w.assignment_index;
  j["assignment"] = {{"g_prime", element_string(g, w.assignment.g_prime)},
                     {"s1", element_list(g, w.assignment.s1)},
                     {"s2", element_list(g, w.assignment.s2)}};
  const SystemLayout layout(g);
  Json sol = Json::array();
  for (std::size_t v = 0; v < w.solution.x.size(); ++v) {
    if (w.solution.x[v] != 0) {
      sol.push_back({{"label", element_string(g, layout.variables[v])}, {"x", w.solution.x[v]}});
    }
  }
  j["solution"] = std::move(sol);
  j["multiplicity"] = w.multiplicity;
  j["invariants"] = invariants_json(w.invariants);
  j["invariants_ok"] = w.invariants_ok;
  j["smoothness"] = smoothness_json(w.smoothness, opts.trace);
  return j;
}

Json group_json(const GroupRecord& rec, const Options& opts) {
  Json j;
  j["group"] = rec.group.notation();
  j["name"] = rec.group.display_name();
  j["aut_supported"] = rec.aut_supported;
  j["aut_order"] = rec.aut_order;
  j["dedup"] = to_string(rec.dedup);
  j["assignments_total"] = rec.assignments_total;
  j["assignments_tried"] = rec.assignments_tried;
  j["assignments_pruned"] = rec.assignments_pruned;
  j["raw_solutions"] = rec.raw_solutions;
  j["verification_failures"] = rec.verification_failures;
  j["effort"] = {{"nodes", rec.nodes}, {"incomplete_cells", rec.incomplete_cells}};
  Json ws = Json::array();
  for (const auto& w : rec.witnesses) ws.push_back(witness_json(rec, w, opts));
  j["witnesses"] = std::move(ws);
  return j;
}

std::string smooth_column(const ClassificationReport& r) {
  if (!r.best_smoothness) return "-";
  switch (*r.best_smoothness) {
    case smoothness::Verdict::Smooth: return "yes";
    case smoothness::Verdict::SingularUnresolved: return "no";
    case smoothness::Verdict::Unsupported: return "unsupported";
  }
  return "-";
}

}  // namespace

Json cover_json(const CoverData& cover) {
  Json j;
  j["group"] = cover.group.notation();
  Json comps = Json::array();
  for (const auto& c : cover.components) {
    Json cj;
    cj["label"] = format_element(c.label);
    cj["degree"] = c.degree;
    if (!c.name.empty()) cj["name"] = c.name;
    comps.push_back(std::move(cj));
  }
  j["components"] = std::move(comps);
  return j;
}

Json invariants_json(const Invariants& inv) {
  return {{"p_g", inv.p_g}, {"q", inv.q},   {"h2", inv.h2}, {"chi_O", inv.chi_O},
          {"K3", inv.K3},   {"P2", inv.P2}, {"P3", inv.P3}};
}

Json smoothness_json(const smoothness::SmoothnessVerdict& v, bool trace) {
  Json j;
  j["verdict"] = smoothness::to_string(v.overall);
  if (!v.note.empty()) j["note"] = v.note;
  j["assumption"] = v.assumption;
  std::size_t bad = 0;
  for (const auto& s : v.strata) bad += s.reduction.verdict != smoothness::Verdict::Smooth;
  j["strata_checked"] = v.strata.size();
  j["strata_unresolved"] = bad;
  if (trace) {
    Json strata = Json::array();
    for (const auto& s : v.strata) {
      strata.push_back({{"components", s.components},
                        {"verdict", smoothness::to_string(s.reduction.verdict)},
                        {"reduction", smoothness::format_reduction(s.reduction)}});
    }
    j["strata"] = std::move(strata);
  }
  return j;
}

Json classification_json(const ClassificationReport& r, const Options& opts) {
  Json j;
  j["degree"] = r.degree;
  if (const auto* t = std::get_if<SpectrumTarget>(&r.target)) {
    j["target"] = format_multiset(t->values);
  } else {
    j["target"] = nullptr;
    j["infeasible_reason"] = std::get<Infeasible>(r.target).constraint;
  }
  j["verdict"] = to_string(r.verdict);
  j["witness_count"] = r.witness_count();
  j["best_smoothness"] = r.best_smoothness ? Json(smoothness::to_string(*r.best_smoothness)) : Json(nullptr);
  j["flags"] = r.flags;
  Json groups = Json::array();
  for (const auto& g : r.groups) groups.push_back(group_json(g, opts));
  j["groups"] = std::move(groups);
  if (opts.include_timing) j["wall_seconds"] = r.wall_seconds;
  return j;
}

Json fixture_json(const FixtureCheck& c) {
  Json j;
  j["name"] = c.name;
  j["degree"] = c.degree;
  j["ok"] = c.ok;
  if (!c.ok) j["failure"] = c.failure;
  j["spectrum"] = format_multiset(c.spectrum);
  j["invariants"] = invariants_json(c.invariants);
  j["smoothness"] = smoothness::to_string(c.smoothness);
  return j;
}

Json bounds_json(const bounds::InvariantTuple& t) {
  Json j;
  Json input;
  input["p_g"] = t.p_g;
  input["q"] = t.q;
  input["chi_omega"] = t.chi_omega;
  input["K3"] = t.K3;
  input["base_point_free"] = t.base_point_free;
  input["dim_Y"] = t.dim_Y ? Json(*t.dim_Y) : Json(nullptr);
  input["p_g_F"] = t.p_g_F ? Json(*t.p_g_F) : Json(nullptr);
  j["input"] = std::move(input);
  auto guarded = [](auto&& fn) -> Json {
    try {
      return fn();
    } catch (const DomainError& e) {
      return {{"applicable", false}, {"reason", e.what()}};
    }
  };
  j["my_degree_bound"] = guarded([&]() -> Json { return {{"applicable", true}, {"value", bounds::my_degree_bound(t)}}; });
  Json cases;
  for (auto c : {bounds::Case::QAtMost2, bounds::Case::AlbaneseDimAtLeast2, bounds::Case::AlbaneseDim1}) {
    cases[bounds::to_string(c)] =
        guarded([&]() -> Json { return {{"applicable", true}, {"value", bounds::case_bound(c, t)}}; });
  }
  j["case_bounds"] = std::move(cases);
  const auto chi = bounds::chi_upper_bound(t.p_g, t.q);
  j["chi_upper_bound"] = chi ? Json(*chi) : Json(nullptr);
  j["equality_fingerprint"] = bounds::equality_fingerprint(t);
  return j;
}

Json document(const Json& config, const std::vector<ClassificationReport>* degrees,
              const std::vector<FixtureCheck>* fixtures, const Options& opts) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  doc["config"] = config;
  if (degrees) {
    Json ds = Json::array();
    for (const auto& r : *degrees) ds.push_back(classification_json(r, opts));
    doc["degrees"] = std::move(ds);
    Json feasible = Json::array();
    for (const auto& r : *degrees) {
      if (r.feasible()) feasible.push_back(r.degree);
    }
    doc["feasible_degrees"] = std::move(feasible);
  }
  if (fixtures) {
    Json fs = Json::array();
    for (const auto& c : *fixtures) fs.push_back(fixture_json(c));
    doc["fixtures"] = std::move(fs);
  }
  return doc;
}

std::string csv_summary(const std::vector<ClassificationReport>& reports) {
  std::ostringstream os;
  os << "degree,feasible,witnesses,smooth\n";
  for (const auto& r : reports) {
    os << r.degree << ',' << (r.feasible() ? "yes" : (r.verdict == Feasibility::Incomplete ? "incomplete" : "no")) << ','
       << r.witness_count() << ',' << smooth_column(r) << '\n';
  }
  return os.str();
}

}  // namespace abcover::report
