#include "abcover/automorphism.hpp"

#include <algorithm>
#include <numeric>

#include "abcover/errors.hpp"

namespace abcover {
namespace {

constexpr std::uint64_t kCacheLimit = 4'000'000;  // automorphisms * group order

struct DigitArith {
  std::uint32_t p;
  std::size_t k;
  std::vector<std::uint32_t> stride;  // stride[j] = p^(k-1-j)

  DigitArith(std::uint32_t p_, std::size_t k_) : p(p_), k(k_), stride(k_, 1) {
    for (std::size_t j = k; j-- > 1;) stride[j - 1] = stride[j] * p;
  }
  std::uint32_t digit(std::uint32_t idx, std::size_t j) const { return (idx / stride[j]) % p; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (p == 2) return a ^ b;
    std::uint32_t r = 0;
    for (std::size_t j = 0; j < k; ++j) r += ((digit(a, j) + digit(b, j)) % p) * stride[j];
    return r;
  }
  std::uint32_t scale(std::uint32_t a, std::uint32_t lambda) const {
    std::uint32_t r = 0;
    for (std::size_t j = 0; j < k; ++j) r += ((digit(a, j) * lambda) % p) * stride[j];
    return r;
  }
  // Linear map with the given column images, evaluated on every index.
  std::vector<std::uint32_t> linear_map(const std::vector<std::uint32_t>& columns) const {
    const std::uint32_t size = stride[0] * p;
    std::vector<std::uint32_t> out(size, 0);
    for (std::uint32_t idx = 1; idx < size; ++idx) {
      std::size_t j = k - 1;
      while (digit(idx, j) == 0) --j;
      out[idx] = add(out[idx - stride[j]], columns[j]);
    }
    return out;
  }
};

std::uint64_t gl_order(std::uint64_t p, std::size_t k) {
  std::uint64_t pk = 1;
  for (std::size_t i = 0; i < k; ++i) pk *= p;
  std::uint64_t order = 1, pi = 1;
  for (std::size_t i = 0; i < k; ++i) {
    order *= pk - pi;
    pi *= p;
  }
  return order;
}

}  // namespace

AutomorphismAction::AutomorphismAction(FiniteAbelianGroup group) : group_(std::move(group)) {
  if (group_.is_cyclic()) {
    const int n = group_.exponent();
    supported_ = true;
    for (int u = 1; u < n; ++u) size_ += std::gcd(u, n) == 1 ? 1 : 0;
  } else if (group_.is_elementary_abelian()) {
    supported_ = true;
    size_ = gl_order(static_cast<std::uint64_t>(group_.exponent()), group_.rank());
  }
  if (supported_ && size_ * group_.order() <= kCacheLimit) {
    auto cache = std::make_shared<std::vector<Automorphism>>();
    cache->reserve(size_);
    generate([&](const Automorphism& a) {
      cache->push_back(a);
      return true;
    });
    cache_ = std::move(cache);
  }
}

bool AutomorphismAction::for_each(const std::function<bool(const Automorphism&)>& fn) const {
  if (!supported_) return true;
  if (cache_) {
    for (const auto& a : *cache_) {
      if (!fn(a)) return false;
    }
    return true;
  }
  return generate(fn);
}

Automorphism AutomorphismAction::from_matrix(const std::vector<std::uint32_t>& column_images) const {
  const DigitArith arith(static_cast<std::uint32_t>(group_.exponent()), group_.rank());
  const std::size_t k = group_.rank();
  // Row j of the matrix, read as an element, is sigma^T(e_j).
  std::vector<std::uint32_t> rows(k, 0);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) rows[j] += arith.digit(column_images[i], j) * arith.stride[i];
  }
  return Automorphism{arith.linear_map(column_images), arith.linear_map(rows)};
}

bool AutomorphismAction::generate(const std::function<bool(const Automorphism&)>& fn) const {
  if (group_.is_cyclic()) {
    const auto n = static_cast<std::uint32_t>(group_.exponent());
    Automorphism a;
    a.image.resize(n);
    for (std::uint32_t u = 1; u < n; ++u) {
      if (std::gcd(u, n) != 1) continue;
      for (std::uint32_t i = 0; i < n; ++i) a.image[i] = static_cast<std::uint32_t>((std::uint64_t{u} * i) % n);
      a.dual = a.image;
      if (!fn(a)) return false;
    }
    return true;
  }

  // GL(k, p): choose column images one at a time outside the running span.
  const auto p = static_cast<std::uint32_t>(group_.exponent());
  const std::size_t k = group_.rank();
  const DigitArith arith(p, k);
  const auto size = static_cast<std::uint32_t>(group_.order());
  std::vector<std::uint32_t> columns(k, 0);

  std::function<bool(std::size_t, const std::vector<char>&)> choose = [&](std::size_t j,
                                                                          const std::vector<char>& span) {
    if (j == k) return fn(from_matrix(columns));
    for (std::uint32_t c = 1; c < size; ++c) {
      if (span[c]) continue;
      columns[j] = c;
      std::vector<char> next(size, 0);
      for (std::uint32_t s = 0; s < size; ++s) {
        if (!span[s]) continue;
        for (std::uint32_t lambda = 0; lambda < p; ++lambda) next[arith.add(s, arith.scale(c, lambda))] = 1;
      }
      if (!choose(j + 1, next)) return false;
    }
    return true;
  };
  std::vector<char> span(size, 0);
  span[0] = 1;
  return choose(0, span);
}

GroupElement AutomorphismAction::apply(const Automorphism& sigma, const GroupElement& g) const {
  return group_.element_at(sigma.image.at(group_.index_of(g)));
}

GroupElement AutomorphismAction::apply_dual(const Automorphism& sigma, const GroupElement& g) const {
  return group_.element_at(sigma.dual.at(group_.index_of(g)));
}

CanonicalForm canonical_representative(const AutomorphismAction& action, std::span<const std::int64_t> values) {
  const std::size_t n = action.group().order() - 1;
  if (values.size() != n) throw DomainError("labeled map must have one value per nonzero element");
  CanonicalForm best{std::vector<std::int64_t>(values.begin(), values.end()), action.supported()};
  if (!action.supported()) return best;
  std::vector<std::int64_t> cand(n);
  action.for_each([&](const Automorphism& sigma) {
    for (std::size_t i = 0; i < n; ++i) cand[i] = values[sigma.image[i + 1] - 1];
    if (cand < best.values) best.values = cand;
    return true;
  });
  return best;
}

bool is_canonical(const AutomorphismAction& action, std::span<const std::int64_t> values) {
  const std::size_t n = action.group().order() - 1;
  if (values.size() != n) throw DomainError("labeled map must have one value per nonzero element");
  return action.for_each([&](const Automorphism& sigma) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t v = values[sigma.image[i + 1] - 1];
      if (v != values[i]) return v > values[i];  // smaller image found -> stop
    }
    return true;
  });
}

CanonicalForm canonical_pair(const AutomorphismAction& action, std::span<const std::int64_t> targets,
                             std::span<const std::int64_t> solution) {
  const std::size_t n = action.group().order() - 1;
  if (targets.size() != n || solution.size() != n) {
    throw DomainError("labeled maps must have one value per nonzero element");
  }
  CanonicalForm best;
  best.reduced = action.supported();
  best.values.resize(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    best.values[2 * i] = targets[i];
    best.values[2 * i + 1] = solution[i];
  }
  if (!action.supported()) return best;
  std::vector<std::int64_t> cand(2 * n);
  std::vector<std::uint32_t> inverse(n + 1);
  action.for_each([&](const Automorphism& sigma) {
    for (std::size_t i = 0; i <= n; ++i) inverse[sigma.image[i]] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < n; ++i) {
      cand[2 * i] = targets[sigma.dual[i + 1] - 1];
      cand[2 * i + 1] = solution[inverse[i + 1] - 1];
    }
    if (cand < best.values) best.values = cand;
    return true;
  });
  return best;
}

}  // namespace abcover
