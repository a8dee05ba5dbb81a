#pragma once

#include <cstdint>

namespace abcover::cohomology {

/// O(twist) on projective space of dimension `dim`.
struct LineBundleDegree {
  int dim = 3;
  std::int64_t twist = 0;
};

/// Binomial-coefficient polynomial C(m + n, n) = (m+1)(m+2)...(m+n)/n!
/// evaluated at any integer m. Throws std::overflow_error past int64.
std::int64_t binomial_polynomial(int n, std::int64_t m);

/// h^i(P^n, O(m)). Throws DomainError unless n >= 1 and 0 <= i <= n.
std::int64_t h(int i, int n, std::int64_t m);

inline std::int64_t h(int i, const LineBundleDegree& bundle) { return h(i, bundle.dim, bundle.twist); }

/// chi(P^n, O(m)) = sum_i (-1)^i h^i.
std::int64_t euler_char(int n, std::int64_t m);

}  // namespace abcover::cohomology
