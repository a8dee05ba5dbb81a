#include "abcover/fixtures.hpp"

#include <optional>

#include "abcover/classifier.hpp"
#include "abcover/cover_io.hpp"
#include "abcover/errors.hpp"
#include "abcover/spectrum_target.hpp"

namespace abcover {
namespace {

constexpr const char* kDeg02 = R"(# degree 2: z^2 = f
group: 2
component: 1 ; 10 ; f
)";

constexpr const char* kDeg04 = R"(# degree 4: z_1^2 = s, z_2^2 = q
group: 2,2
component: 1,0 ; 6 ; s
component: 0,1 ; 4 ; q
)";

constexpr const char* kDeg06 = R"(# degree 6, Z_6; first witness of `abcover classify --min 6 --max 6`
# (assignment 24). Not 2-elementary: smoothness is not established.
group: 6
component: 1 ; 1 ; p1
component: 2 ; 4 ; p2
component: 3 ; 3 ; p3
)";

constexpr const char* kDeg08 = R"(# degree 8: z_i^2 = t_i q
group: 2,2,2
component: 1,0,0 ; 2 ; t1
component: 0,1,0 ; 2 ; t2
component: 0,0,1 ; 2 ; t3
component: 1,1,1 ; 4 ; q
)";

constexpr const char* kDeg16 = R"(# degree 16
#   z_1^2 = h1 h4 t1 t2
#   z_2^2 = h2 h4 t2 t3
#   z_3^2 = h3 h4 t1 t3
#   z_4^2 = h2 h3 t3
group: 2,2,2,2
component: 1,0,0,0 ; 1 ; h1
component: 0,1,0,1 ; 1 ; h2
component: 0,0,1,1 ; 1 ; h3
component: 1,1,1,0 ; 1 ; h4
component: 1,0,1,0 ; 2 ; t1
component: 1,1,0,0 ; 2 ; t2
component: 0,1,1,1 ; 2 ; t3
)";

constexpr const char* kDeg18 = R"(# degree 18, Z_3+Z_6; first witness of `abcover classify --min 18 --max 18`
# (assignment 4432). Not 2-elementary: smoothness is not established.
group: 3,6
component: 0,3 ; 1 ; p1
component: 0,4 ; 1 ; p2
component: 0,5 ; 1 ; p3
component: 1,4 ; 1 ; p4
component: 1,5 ; 1 ; p5
component: 2,4 ; 1 ; p6
component: 2,5 ; 1 ; p7
)";

constexpr const char* kDeg32 = R"(# degree 32
#   z_1^2 = h1 h2 h3 h10
#   z_2^2 = h4 h5 h6 h10
#   z_3^2 = h2 h3 h6 h7
#   z_4^2 = h1 h3 h5 h8
#   z_5^2 = h7 h8 h9 h10
group: 2,2,2,2,2
component: 1,0,0,1,0 ; 1 ; h1
component: 1,0,1,0,0 ; 1 ; h2
component: 1,0,1,1,0 ; 1 ; h3
component: 0,1,0,0,0 ; 1 ; h4
component: 0,1,0,1,0 ; 1 ; h5
component: 0,1,1,0,0 ; 1 ; h6
component: 0,0,1,0,1 ; 1 ; h7
component: 0,0,0,1,1 ; 1 ; h8
component: 0,0,0,0,1 ; 1 ; h9
component: 1,1,0,0,1 ; 1 ; h10
)";

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = {
      {"deg02", 2, true, smoothness::Verdict::Smooth, kDeg02},
      {"deg04", 4, true, smoothness::Verdict::Smooth, kDeg04},
      {"deg06", 6, false, smoothness::Verdict::Unsupported, kDeg06},
      {"deg08", 8, true, smoothness::Verdict::Smooth, kDeg08},
      {"deg16", 16, true, smoothness::Verdict::Smooth, kDeg16},
      {"deg18", 18, false, smoothness::Verdict::Unsupported, kDeg18},
      {"deg32", 32, true, smoothness::Verdict::Smooth, kDeg32},
  };
  return all;
}

const Fixture& fixture(const std::string& name) {
  for (const auto& f : fixtures()) {
    if (f.name == name) return f;
  }
  throw DomainError("unknown fixture '" + name + "'");
}

CoverData fixture_cover(const Fixture& f) { return io::parse_cover(f.text); }

FixtureCheck check_canonical_cover(const std::string& name, const CoverData& cover,
                                   smoothness::Verdict expected_smoothness) {
  FixtureCheck c;
  c.name = name;
  c.degree = static_cast<std::int64_t>(cover.group.order());
  try {
    cover::validate(cover);
  } catch (const InvalidCoverData& e) {
    c.failure = std::string("validation: ") + e.what();
    return c;
  }
  c.spectrum = cover::compute_spectrum(cover).nonzero_multiset();
  const auto target = derive_targets(c.degree);
  const auto* t = std::get_if<SpectrumTarget>(&target);
  if (t == nullptr) {
    c.failure = "spectrum: degree " + std::to_string(c.degree) + " has no target (" +
                std::get<Infeasible>(target).constraint + ")";
    return c;
  }
  if (c.spectrum != t->values) {
    c.failure = "spectrum: got " + format_multiset(c.spectrum) + ", expected " + format_multiset(t->values);
    return c;
  }
  c.invariants = cover::invariants(cover);
  const auto expected = expected_invariants(c.degree);
  auto field = [&](const char* what, std::int64_t got, std::int64_t want) {
    if (c.failure.empty() && got != want) {
      c.failure = std::string("invariants: ") + what + " = " + std::to_string(got) + ", expected " + std::to_string(want);
    }
  };
  field("p_g", c.invariants.p_g, expected.p_g);
  field("q", c.invariants.q, expected.q);
  field("h2", c.invariants.h2, expected.h2);
  field("chi(O)", c.invariants.chi_O, expected.chi_O);
  field("K^3", c.invariants.K3, expected.K3);
  field("P_2", c.invariants.P2, expected.P2);
  field("P_3", c.invariants.P3, expected.P3);
  if (!c.failure.empty()) return c;
  c.smoothness = smoothness::check_cover_smooth(cover).overall;
  if (c.smoothness != expected_smoothness) {
    c.failure = "smoothness: " + smoothness::to_string(c.smoothness) + ", expected " +
                smoothness::to_string(expected_smoothness);
    return c;
  }
  c.ok = true;
  return c;
}

std::vector<FixtureCheck> verify_fixtures() {
  std::vector<FixtureCheck> out;
  for (const auto& f : fixtures()) {
    std::optional<CoverData> cover;
    try {
      cover = fixture_cover(f);
    } catch (const std::exception& e) {
      FixtureCheck c;
      c.name = f.name;
      c.degree = f.degree;
      c.failure = std::string("parse: ") + e.what();
      out.push_back(std::move(c));
      continue;
    }
    auto c = check_canonical_cover(f.name, *cover, f.expected_smoothness);
    if (c.ok && c.degree != f.degree) {
      c.ok = false;
      c.failure = "degree: group order " + std::to_string(c.degree) + ", expected " + std::to_string(f.degree);
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace abcover
