#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "abcover/group.hpp"

namespace abcover {

/// An irreducible branch hypersurface p_alpha of P^3 with label alpha: it
/// enters the i-th defining equation z_i^{n_i} = f_i with exponent alpha_i.
struct BranchComponent {
  GroupElement label;
  std::int64_t degree = 1;
  std::string name;

  friend bool operator==(const BranchComponent&, const BranchComponent&) = default;
};

/// Building data of an abelian cover of P^3 with Galois group `group`.
struct CoverData {
  FiniteAbelianGroup group;
  std::vector<BranchComponent> components;

  /// x_alpha, indexed by element index (entry 0 is always 0).
  std::vector<std::int64_t> totals() const;

  friend bool operator==(const CoverData&, const CoverData&) = default;
};

/// l_g for every g, indexed by element index; l_0 == 0.
struct Spectrum {
  FiniteAbelianGroup group;
  std::vector<std::int64_t> values;

  std::int64_t at(const GroupElement& g) const { return values.at(group.index_of(g)); }
  /// Values at nonzero elements, sorted descending.
  std::vector<std::int64_t> nonzero_multiset() const;
};

struct Invariants {
  std::int64_t p_g = 0;
  std::int64_t q = 0;
  std::int64_t h2 = 0;
  std::int64_t chi_O = 0;
  std::int64_t K3 = 0;
  std::int64_t P2 = 0;
  std::int64_t P3 = 0;

  friend bool operator==(const Invariants&, const Invariants&) = default;
};

namespace cover {

/// Throws InvalidCoverData on a zero or out-of-range label, a degree < 1, or
/// when n_i does not divide sum_alpha alpha_i x_alpha (index = i, 0-based).
void validate(const CoverData& cover);

/// (l_{e_1}, ..., l_{e_k}) with n_i l_{e_i} = sum_alpha alpha_i x_alpha.
std::vector<std::int64_t> compute_l_basis(const CoverData& cover);

/// l_g = sum_i g_i l_{e_i} - sum_alpha floor(sum_i g_i alpha_i / n_i) x_alpha.
Spectrum compute_spectrum(const CoverData& cover);

/// Twists of phi_* O_X: the multiset {-l_g : g in G}, sorted descending
/// (0 first).
std::vector<std::int64_t> pushforward_summands(const CoverData& cover);

/// h^i(X, phi^* O(m)) = sum_g h^i(P^3, O(m - l_g)). Throws DomainError
/// unless 0 <= i <= 3.
std::int64_t hi_of_pullback(const CoverData& cover, int i, std::int64_t m);

/// P_m = h^0(X, phi^* O(m)) for canonical covers (K_X = phi^* O(1)).
std::int64_t plurigenus(const CoverData& cover, std::int64_t m);

Invariants invariants(const CoverData& cover);

}  // namespace cover

}  // namespace abcover
