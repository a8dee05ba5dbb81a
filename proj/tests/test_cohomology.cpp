#include <doctest.h>

#include "abcover/cohomology.hpp"
#include "abcover/errors.hpp"
#include "oracles.hpp"

using namespace abcover::cohomology;

TEST_CASE("h on P^3") {
  CHECK(h(0, 3, 1) == 4);
  CHECK(h(3, 3, -5) == 4);
  CHECK(h(1, 3, -2) == 0);
  CHECK(h(0, 3, 0) == 1);
  CHECK(h(0, 3, -1) == 0);
  CHECK(h(0, 3, 2) == 10);
  CHECK(h(3, 3, -4) == 1);
  CHECK(h(0, LineBundleDegree{3, 1}) == 4);
}

TEST_CASE("euler characteristic") {
  CHECK(euler_char(3, 0) == 1);
  CHECK(euler_char(3, -5) == -4);
  CHECK(euler_char(3, -2) == 0);
}

TEST_CASE("h agrees with monomial counting") {
  for (int n = 1; n <= 4; ++n) {
    for (std::int64_t m = -12; m <= 12; ++m) {
      for (int i = 0; i <= n; ++i) CHECK_MESSAGE(h(i, n, m) == oracle::h(i, n, m), "i=" << i << " n=" << n << " m=" << m);
    }
  }
}

TEST_CASE("Serre duality h^i(O(m)) = h^{n-i}(O(-m-n-1))") {
  for (int n = 1; n <= 4; ++n) {
    for (std::int64_t m = -10; m <= 10; ++m) {
      for (int i = 0; i <= n; ++i) CHECK(h(i, n, m) == h(n - i, n, -m - n - 1));
    }
  }
}

TEST_CASE("euler characteristic is the Hilbert polynomial") {
  for (int n = 1; n <= 4; ++n) {
    for (std::int64_t m = -15; m <= 15; ++m) CHECK(euler_char(n, m) == binomial_polynomial(n, m));
  }
}

TEST_CASE("domain and overflow") {
  CHECK_THROWS_AS(h(-1, 3, 0), abcover::DomainError);
  CHECK_THROWS_AS(h(4, 3, 0), abcover::DomainError);
  CHECK_THROWS_AS(h(0, 0, 0), abcover::DomainError);
  CHECK_THROWS_AS(binomial_polynomial(-1, 0), abcover::DomainError);
  CHECK_THROWS_AS(binomial_polynomial(3, std::int64_t{1} << 40), std::overflow_error);
  CHECK(binomial_polynomial(3, 1'000'000) == std::int64_t{1'000'001} * 1'000'002 * 1'000'003 / 6);
}
