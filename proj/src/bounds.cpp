#include "abcover/bounds.hpp"

#include "abcover/errors.hpp"

namespace abcover::bounds {
namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void require_pg(const InvariantTuple& t, std::int64_t floor) {
  if (t.p_g < floor) {
    throw DomainError("p_g must be >= " + std::to_string(floor) + ", got " + std::to_string(t.p_g));
  }
}

}  // namespace

std::string to_string(Case c) {
  switch (c) {
    case Case::QAtMost2: return "q_le_2";
    case Case::AlbaneseDimAtLeast2: return "albanese_dim_ge_2";
    case Case::AlbaneseDim1: return "albanese_dim_1";
  }
  return "?";
}

std::int64_t my_degree_bound(const InvariantTuple& t) {
  require_pg(t, 4);
  return floor_div(72 * t.chi_omega, t.p_g - 3);
}

std::int64_t case_bound(Case c, const InvariantTuple& t) {
  switch (c) {
    case Case::QAtMost2:
      require_pg(t, 4);
      return floor_div(72 * (t.p_g + 1), t.p_g - 3);
    case Case::AlbaneseDimAtLeast2:
      require_pg(t, 4);
      return floor_div(72 * t.p_g, t.p_g - 3);
    case Case::AlbaneseDim1: {
      require_pg(t, 6);
      if (!t.p_g_F) throw DomainError("albanese_dim_1 bound needs p_g(F)");
      if (*t.p_g_F < 3) throw DomainError("p_g(F) must be >= 3, got " + std::to_string(*t.p_g_F));
      return floor_div(72 * (*t.p_g_F + 1) * t.p_g, *t.p_g_F * (t.p_g - 3));
    }
  }
  throw DomainError("unknown case");
}

bool equality_fingerprint(const InvariantTuple& t) {
  return t.p_g == 4 && t.q == 2 && t.chi_omega == 5 && t.K3 == 360 && t.base_point_free;
}

std::optional<std::int64_t> chi_upper_bound(std::int64_t p_g, std::int64_t q) {
  if (q >= 3) return std::nullopt;
  return p_g + q - 1;
}

}  // namespace abcover::bounds
