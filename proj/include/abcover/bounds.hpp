#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace abcover::bounds {

/// Scalar invariants of a threefold with generically finite canonical map.
struct InvariantTuple {
  std::int64_t p_g = 4;
  std::int64_t q = 0;
  std::int64_t chi_omega = 0;
  std::int64_t K3 = 1;
  bool base_point_free = false;
  std::optional<int> dim_Y;             // dimension of the Stein factor of the Albanese map
  std::optional<std::int64_t> p_g_F;    // geometric genus of its general fibre
};

enum class Case { QAtMost2, AlbaneseDimAtLeast2, AlbaneseDim1 };

std::string to_string(Case c);

/// floor(72 chi_omega / (p_g - 3)), from d (p_g - 3) <= K^3 <= 72 chi(omega).
/// Throws DomainError if p_g < 4.
std::int64_t my_degree_bound(const InvariantTuple& t);

/// QAtMost2:            floor(72 (p_g + 1) / (p_g - 3)),             p_g >= 4
/// AlbaneseDimAtLeast2: floor(72 p_g / (p_g - 3)),                   p_g >= 4
/// AlbaneseDim1:        floor(72 (1 + 1/p_g_F) p_g / (p_g - 3)),     p_g >= 6, p_g_F >= 3
/// Throws DomainError when a required field is missing or below its floor.
std::int64_t case_bound(Case c, const InvariantTuple& t);

/// (p_g, q, chi_omega, K3, bpf) == (4, 2, 5, 360, true).
bool equality_fingerprint(const InvariantTuple& t);

/// p_g + q - 1 when q <= 2; nullopt (not applicable) when q >= 3.
std::optional<std::int64_t> chi_upper_bound(std::int64_t p_g, std::int64_t q);

}  // namespace abcover::bounds
