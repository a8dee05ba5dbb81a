#include "abcover/cover.hpp"

#include <algorithm>
#include <functional>

#include "abcover/cohomology.hpp"
#include "abcover/errors.hpp"

namespace abcover {

std::vector<std::int64_t> CoverData::totals() const {
  std::vector<std::int64_t> x(group.order(), 0);
  for (const auto& c : components) x[group.index_of(c.label)] += c.degree;
  return x;
}

std::vector<std::int64_t> Spectrum::nonzero_multiset() const {
  std::vector<std::int64_t> out(values.begin() + 1, values.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

namespace cover {
namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

void validate(const CoverData& cover) {
  const auto& G = cover.group;
  for (std::size_t c = 0; c < cover.components.size(); ++c) {
    const auto& comp = cover.components[c];
    const std::string who = "component " + std::to_string(c + 1) + (comp.name.empty() ? "" : " (" + comp.name + ")");
    try {
      G.check(comp.label);
    } catch (const DomainError& e) {
      throw InvalidCoverData(InvalidCoverData::Kind::LabelOutOfRange, c, 0, who + ": " + e.what());
    }
    if (comp.label == G.zero()) {
      throw InvalidCoverData(InvalidCoverData::Kind::ZeroLabel, c, 0, who + ": label must be nonzero");
    }
    if (comp.degree < 1) {
      throw InvalidCoverData(InvalidCoverData::Kind::NonPositiveDegree, c, 0,
                             who + ": degree must be >= 1, got " + std::to_string(comp.degree));
    }
  }
  const auto& n = G.invariant_factors();
  for (std::size_t i = 0; i < n.size(); ++i) {
    std::int64_t s = 0;
    for (const auto& comp : cover.components) s += comp.label.coords[i] * comp.degree;
    if (s % n[i] != 0) {
      throw InvalidCoverData(InvalidCoverData::Kind::Divisibility, i, s % n[i],
                             "n_" + std::to_string(i + 1) + " = " + std::to_string(n[i]) +
                                 " does not divide sum_alpha alpha_" + std::to_string(i + 1) +
                                 " x_alpha = " + std::to_string(s) + " (residue " + std::to_string(s % n[i]) + ")");
    }
  }
}

std::vector<std::int64_t> compute_l_basis(const CoverData& cover) {
  validate(cover);
  const auto& n = cover.group.invariant_factors();
  std::vector<std::int64_t> l(n.size(), 0);
  for (std::size_t i = 0; i < n.size(); ++i) {
    std::int64_t s = 0;
    for (const auto& comp : cover.components) s += comp.label.coords[i] * comp.degree;
    l[i] = s / n[i];
  }
  return l;
}

Spectrum compute_spectrum(const CoverData& cover) {
  const auto l_basis = compute_l_basis(cover);
  const auto& G = cover.group;
  const auto& n = G.invariant_factors();
  const std::int64_t N = G.exponent();
  const auto x = cover.totals();
  const auto elems = G.elements();

  Spectrum spec{G, std::vector<std::int64_t>(G.order(), 0)};
  for (std::size_t gi = 1; gi < elems.size(); ++gi) {
    const auto& g = elems[gi];
    std::int64_t l = 0;
    for (std::size_t i = 0; i < n.size(); ++i) l += g.coords[i] * l_basis[i];
    for (std::size_t ai = 1; ai < elems.size(); ++ai) {
      if (x[ai] == 0) continue;
      // floor(sum_i g_i a_i / n_i) over the common denominator N.
      std::int64_t num = 0;
      for (std::size_t i = 0; i < n.size(); ++i) num += std::int64_t{g.coords[i]} * elems[ai].coords[i] * (N / n[i]);
      l -= floor_div(num, N) * x[ai];
    }
    spec.values[gi] = l;
  }
  return spec;
}

std::vector<std::int64_t> pushforward_summands(const CoverData& cover) {
  const auto spec = compute_spectrum(cover);
  std::vector<std::int64_t> out;
  out.reserve(spec.values.size());
  for (auto l : spec.values) out.push_back(-l);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::int64_t hi_of_pullback(const CoverData& cover, int i, std::int64_t m) {
  if (i < 0 || i > 3) throw DomainError("cohomological degree " + std::to_string(i) + " outside [0,3]");
  const auto spec = compute_spectrum(cover);
  std::int64_t total = 0;
  for (auto l : spec.values) total += cohomology::h(i, 3, m - l);
  return total;
}

std::int64_t plurigenus(const CoverData& cover, std::int64_t m) { return hi_of_pullback(cover, 0, m); }

Invariants invariants(const CoverData& cover) {
  const auto spec = compute_spectrum(cover);
  Invariants inv;
  for (auto l : spec.values) {
    inv.p_g += cohomology::h(0, 3, 1 - l);
    inv.q += cohomology::h(1, 3, -l);
    inv.h2 += cohomology::h(2, 3, -l);
    inv.chi_O += cohomology::euler_char(3, -l);
    inv.P2 += cohomology::h(0, 3, 2 - l);
    inv.P3 += cohomology::h(0, 3, 3 - l);
  }
  inv.K3 = static_cast<std::int64_t>(cover.group.order());
  return inv;
}

}  // namespace cover
}  // namespace abcover
