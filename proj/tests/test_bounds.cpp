#include <doctest.h>

#include "abcover/bounds.hpp"
#include "abcover/errors.hpp"

using namespace abcover;
using namespace abcover::bounds;

namespace {

InvariantTuple tuple(std::int64_t pg, std::int64_t q, std::int64_t chi, std::int64_t k3, bool bpf) {
  InvariantTuple t;
  t.p_g = pg;
  t.q = q;
  t.chi_omega = chi;
  t.K3 = k3;
  t.base_point_free = bpf;
  return t;
}

}  // namespace

TEST_CASE("degree bound") {
  CHECK(my_degree_bound(tuple(4, 0, 5, 1, false)) == 360);
  CHECK(my_degree_bound(tuple(4, 0, 4, 1, false)) == 288);
  CHECK(my_degree_bound(tuple(7, 0, 8, 1, false)) == 144);
  CHECK(my_degree_bound(tuple(5, 0, 5, 1, false)) == 180);
  CHECK_THROWS_AS(my_degree_bound(tuple(3, 0, 5, 1, false)), DomainError);
}

TEST_CASE("case bounds") {
  CHECK(case_bound(Case::QAtMost2, tuple(4, 0, 0, 1, false)) == 360);
  CHECK(case_bound(Case::AlbaneseDimAtLeast2, tuple(4, 3, 0, 1, false)) == 288);
  auto t = tuple(6, 3, 0, 1, false);
  t.dim_Y = 1;
  t.p_g_F = 3;
  CHECK(case_bound(Case::AlbaneseDim1, t) == 192);
  t.p_g_F = 2;
  CHECK_THROWS_AS(case_bound(Case::AlbaneseDim1, t), DomainError);
  t.p_g_F.reset();
  CHECK_THROWS_AS(case_bound(Case::AlbaneseDim1, t), DomainError);
  CHECK_THROWS_AS(case_bound(Case::AlbaneseDim1, tuple(5, 3, 0, 1, false)), DomainError);
  CHECK_THROWS_AS(case_bound(Case::QAtMost2, tuple(3, 0, 0, 1, false)), DomainError);
  CHECK(to_string(Case::QAtMost2) == "q_le_2");
  CHECK(to_string(Case::AlbaneseDimAtLeast2) == "albanese_dim_ge_2");
  CHECK(to_string(Case::AlbaneseDim1) == "albanese_dim_1");
}

TEST_CASE("bounds are monotone where they should be") {
  for (std::int64_t pg = 4; pg <= 30; ++pg) {
    CHECK(case_bound(Case::QAtMost2, tuple(pg + 1, 0, 0, 1, false)) <= case_bound(Case::QAtMost2, tuple(pg, 0, 0, 1, false)));
    CHECK(case_bound(Case::AlbaneseDimAtLeast2, tuple(pg, 3, 0, 1, false)) <=
          case_bound(Case::QAtMost2, tuple(pg, 0, 0, 1, false)));
    for (std::int64_t chi = 0; chi <= 10; ++chi) {
      CHECK(my_degree_bound(tuple(pg, 0, chi, 1, false)) <= my_degree_bound(tuple(pg, 0, chi + 1, 1, false)));
    }
  }
}

TEST_CASE("equality fingerprint and chi bound") {
  CHECK(equality_fingerprint(tuple(4, 2, 5, 360, true)));
  CHECK_FALSE(equality_fingerprint(tuple(4, 0, 5, 360, true)));
  CHECK_FALSE(equality_fingerprint(tuple(4, 2, 5, 288, true)));
  CHECK_FALSE(equality_fingerprint(tuple(4, 2, 5, 360, false)));
  CHECK(chi_upper_bound(4, 2) == 5);
  CHECK(chi_upper_bound(4, 0) == 3);
  CHECK_FALSE(chi_upper_bound(4, 3).has_value());
  // The extremal tuple meets both bounds with equality.
  CHECK(my_degree_bound(tuple(4, 2, *chi_upper_bound(4, 2), 360, true)) == 360);
}
