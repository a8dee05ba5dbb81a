#include "abcover/cohomology.hpp"

#include <stdexcept>
#include <string>

#include "abcover/errors.hpp"

namespace abcover::cohomology {

std::int64_t binomial_polynomial(int n, std::int64_t m) {
  if (n < 0) throw DomainError("binomial_polynomial: n must be >= 0");
  // Partial products of j consecutive integers are divisible by j!, so each
  // step divides exactly.
  __extension__ using Wide = __int128;
  Wide acc = 1;
  for (int j = 1; j <= n; ++j) {
    acc = acc * (m + j) / j;
    if (acc > INT64_MAX || acc < INT64_MIN) throw std::overflow_error("binomial_polynomial overflow");
  }
  return static_cast<std::int64_t>(acc);
}

std::int64_t h(int i, int n, std::int64_t m) {
  if (n < 1) throw DomainError("projective dimension must be >= 1, got " + std::to_string(n));
  if (i < 0 || i > n) {
    throw DomainError("cohomological degree " + std::to_string(i) + " outside [0," + std::to_string(n) + "]");
  }
  if (i == 0) return m >= 0 ? binomial_polynomial(n, m) : 0;
  if (i == n) return h(0, n, -m - n - 1);  // Serre duality, omega = O(-n-1)
  return 0;
}

std::int64_t euler_char(int n, std::int64_t m) {
  if (n < 1) throw DomainError("projective dimension must be >= 1, got " + std::to_string(n));
  std::int64_t chi = 0;
  for (int i = 0; i <= n; ++i) chi += (i % 2 == 0 ? 1 : -1) * h(i, n, m);
  return chi;
}

}  // namespace abcover::cohomology
