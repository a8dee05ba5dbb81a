#include <doctest.h>

#include <random>

#include "abcover/automorphism.hpp"
#include "abcover/cohomology.hpp"
#include "abcover/cover.hpp"
#include "abcover/errors.hpp"
#include "abcover/fixtures.hpp"
#include "oracles.hpp"

using namespace abcover;

namespace {

CoverData make(const char* group, std::vector<std::pair<std::vector<int>, std::int64_t>> comps) {
  CoverData c{FiniteAbelianGroup::parse(group), {}};
  for (auto& [label, deg] : comps) c.components.push_back({GroupElement{label}, deg, ""});
  return c;
}

CoverData deg2() { return make("2", {{{1}, 10}}); }
CoverData deg4() { return make("2,2", {{{1, 0}, 6}, {{0, 1}, 4}}); }
CoverData deg8() { return make("2,2,2", {{{1, 0, 0}, 2}, {{0, 1, 0}, 2}, {{0, 0, 1}, 2}, {{1, 1, 1}, 4}}); }

// Random consistent cover: random totals, then one extra component per
// coordinate to fix divisibility.
CoverData random_cover(const FiniteAbelianGroup& g, std::mt19937& rng) {
  CoverData c{g, {}};
  std::uniform_int_distribution<std::size_t> el(1, g.order() - 1);
  std::uniform_int_distribution<std::int64_t> deg(1, 4);
  const int count = 1 + static_cast<int>(rng() % 5);
  for (int i = 0; i < count; ++i) c.components.push_back({g.element_at(el(rng)), deg(rng), ""});
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const int n = g.invariant_factors()[i];
    std::int64_t s = 0;
    for (const auto& comp : c.components) s += comp.label.coords[i] * comp.degree;
    const auto r = ((s % n) + n) % n;
    if (r != 0) c.components.push_back({g.basis(i), n - r, ""});
  }
  return c;
}

}  // namespace

TEST_CASE("validate") {
  CHECK_NOTHROW(cover::validate(deg2()));
  CHECK_NOTHROW(cover::validate(deg4()));
  try {
    cover::validate(make("2", {{{1}, 9}}));
    FAIL("expected InvalidCoverData");
  } catch (const InvalidCoverData& e) {
    CHECK(e.kind() == InvalidCoverData::Kind::Divisibility);
    CHECK(e.index() == 0);
    CHECK(e.residue() == 1);
  }
  CHECK_THROWS_AS(cover::validate(make("2,2", {{{0, 0}, 2}})), InvalidCoverData);
  CHECK_THROWS_AS(cover::validate(make("2,2", {{{2, 0}, 2}})), InvalidCoverData);
  CHECK_THROWS_AS(cover::validate(make("2", {{{1}, 0}})), InvalidCoverData);
  CHECK_THROWS_AS(cover::validate(make("2,2", {{{1}, 2}})), InvalidCoverData);
}

TEST_CASE("l on the basis") {
  CHECK(cover::compute_l_basis(deg2()) == std::vector<std::int64_t>{5});
  CHECK(cover::compute_l_basis(deg4()) == std::vector<std::int64_t>{3, 2});
  CHECK(cover::compute_l_basis(deg8()) == std::vector<std::int64_t>{3, 3, 3});
}

TEST_CASE("spectrum examples") {
  const auto s4 = cover::compute_spectrum(deg4());
  CHECK(s4.at({{1, 0}}) == 3);
  CHECK(s4.at({{0, 1}}) == 2);
  CHECK(s4.at({{1, 1}}) == 5);
  CHECK(s4.at({{0, 0}}) == 0);
  CHECK(cover::compute_spectrum(deg8()).nonzero_multiset() == std::vector<std::int64_t>{5, 3, 3, 3, 2, 2, 2});
  CHECK(cover::compute_spectrum(deg2()).values == std::vector<std::int64_t>{0, 5});
}

TEST_CASE("pushforward summands") {
  CHECK(cover::pushforward_summands(deg2()) == std::vector<std::int64_t>{0, -5});
  CHECK(cover::pushforward_summands(deg4()) == std::vector<std::int64_t>{0, -2, -3, -5});
  CHECK(cover::pushforward_summands(deg8()) == std::vector<std::int64_t>{0, -2, -2, -2, -3, -3, -3, -5});
}

TEST_CASE("cohomology of pullbacks and invariants") {
  CHECK(cover::hi_of_pullback(deg8(), 0, 1) == 4);
  CHECK(cover::hi_of_pullback(deg8(), 1, 0) == 0);
  CHECK(cover::hi_of_pullback(deg2(), 0, 2) == cohomology::h(0, 3, 2) + cohomology::h(0, 3, -3));
  CHECK(cover::hi_of_pullback(deg2(), 0, 2) == 10);
  CHECK_THROWS_AS(cover::hi_of_pullback(deg2(), 4, 0), DomainError);
  CHECK_THROWS_AS(cover::hi_of_pullback(deg2(), -1, 0), DomainError);
  const auto inv = cover::invariants(deg8());
  CHECK(inv.p_g == 4);
  CHECK(inv.q == 0);
  CHECK(inv.h2 == 0);
  CHECK(inv.chi_O == -3);
  CHECK(inv.K3 == 8);
  CHECK(inv.P2 == 13);
  CHECK(inv.P3 == 35);
  CHECK(cover::plurigenus(deg2(), 2) == 10);
  CHECK(cover::invariants(deg2()).P2 == 10);
}

TEST_CASE("spectrum agrees with the fractional-part oracle") {
  std::mt19937 rng(2024);
  for (const auto* spec : {"2", "6", "2,2", "2,4", "3,3", "2,2,2", "3,6", "2,2,4", "12"}) {
    const auto g = FiniteAbelianGroup::parse(spec);
    for (int trial = 0; trial < 25; ++trial) {
      const auto c = random_cover(g, rng);
      REQUIRE_NOTHROW(cover::validate(c));
      CHECK(cover::compute_spectrum(c).values == oracle::spectrum(g.invariant_factors(), c.totals()));
    }
  }
  for (const auto& f : fixtures()) {
    const auto c = fixture_cover(f);
    CHECK(cover::compute_spectrum(c).values == oracle::spectrum(c.group.invariant_factors(), c.totals()));
  }
}

TEST_CASE("spectrum only depends on the totals per label") {
  std::mt19937 rng(99);
  for (const auto* spec : {"2,2,2", "2,4", "6"}) {
    const auto g = FiniteAbelianGroup::parse(spec);
    for (int trial = 0; trial < 20; ++trial) {
      auto c = random_cover(g, rng);
      const auto before = cover::compute_spectrum(c).values;
      // Split the first component of degree >= 2.
      for (std::size_t i = 0; i < c.components.size(); ++i) {
        if (c.components[i].degree >= 2) {
          auto piece = c.components[i];
          piece.degree = 1;
          c.components[i].degree -= 1;
          c.components.push_back(piece);
          break;
        }
      }
      CHECK(cover::compute_spectrum(c).values == before);
      CHECK(cover::invariants(c) == cover::invariants(CoverData{g, c.components}));
    }
  }
}

TEST_CASE("spectrum is Aut-equivariant: relabeling by sigma gives l o sigma^T") {
  std::mt19937 rng(4242);
  for (const auto* spec : {"2,2,2", "6", "3,3", "8", "2,2,2,2"}) {
    const auto g = FiniteAbelianGroup::parse(spec);
    const AutomorphismAction act(g);
    std::vector<Automorphism> autos;
    act.for_each([&](const Automorphism& s) {
      autos.push_back(s);
      return autos.size() < 200;
    });
    for (int trial = 0; trial < 10; ++trial) {
      const auto c = random_cover(g, rng);
      const auto l = cover::compute_spectrum(c).values;
      for (const auto& s : autos) {
        CoverData moved{g, {}};
        for (const auto& comp : c.components) moved.components.push_back({act.apply(s, comp.label), comp.degree, ""});
        REQUIRE_NOTHROW(cover::validate(moved));
        const auto l2 = cover::compute_spectrum(moved).values;
        for (std::size_t i = 0; i < g.order(); ++i) CHECK(l2[i] == l[s.dual[i]]);
        CHECK(cover::invariants(moved) == cover::invariants(c));
      }
    }
  }
}
