#include "abcover/group.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

#include "abcover/errors.hpp"

namespace abcover {
namespace {

std::map<int, int> factorize(std::int64_t n) {
  std::map<int, int> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[static_cast<int>(p)];
      n /= p;
    }
  }
  if (n > 1) ++out[static_cast<int>(n)];
  return out;
}

int ipow(int base, int e) {
  int r = 1;
  while (e-- > 0) r *= base;
  return r;
}

// Per-prime exponent lists (descending) -> invariant factors (ascending chain).
std::vector<int> assemble_invariant_factors(const std::map<int, std::vector<int>>& exponents) {
  std::size_t k = 0;
  for (const auto& [p, es] : exponents) k = std::max(k, es.size());
  std::vector<int> factors(k, 1);
  for (const auto& [p, es] : exponents) {
    // es is descending; the largest power goes to n_k.
    for (std::size_t j = 0; j < es.size(); ++j) factors[k - 1 - j] *= ipow(p, es[j]);
  }
  return factors;
}

void partitions_rec(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(n - part, part, cur, out);
    cur.pop_back();
  }
}

int parse_int(std::string_view s, const char* what) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw DomainError(std::string("invalid ") + what + " '" + std::string(s) + "'");
  }
  return value;
}

std::vector<int> parse_int_list(std::string_view text, const char* what) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(parse_int(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start), what));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(const std::vector<int>& cyclic_factors) {
  std::map<int, std::vector<int>> exponents;
  for (int n : cyclic_factors) {
    if (n < 1) throw DomainError("cyclic factor must be >= 1, got " + std::to_string(n));
    for (const auto& [p, e] : factorize(n)) exponents[p].push_back(e);
  }
  for (auto& [p, es] : exponents) std::sort(es.rbegin(), es.rend());
  *this = FiniteAbelianGroup(Normalized{}, assemble_invariant_factors(exponents));
}

FiniteAbelianGroup::FiniteAbelianGroup(Normalized, std::vector<int> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw DomainError("group order must be >= 2");
  strides_.assign(factors_.size(), 1);
  for (std::size_t i = factors_.size(); i-- > 0;) {
    strides_[i] = order_;
    order_ *= static_cast<std::size_t>(factors_[i]);
  }
}

FiniteAbelianGroup FiniteAbelianGroup::from_invariant_factors(const std::vector<int>& factors) {
  if (factors.empty()) throw DomainError("group order must be >= 2");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2) throw DomainError("invariant factor must be >= 2, got " + std::to_string(factors[i]));
    if (i > 0 && factors[i] % factors[i - 1] != 0) {
      throw DomainError("invariant factors must form a divisibility chain: " + std::to_string(factors[i - 1]) +
                        " does not divide " + std::to_string(factors[i]));
    }
  }
  return FiniteAbelianGroup(Normalized{}, factors);
}

FiniteAbelianGroup FiniteAbelianGroup::parse(std::string_view notation) {
  return FiniteAbelianGroup(parse_int_list(notation, "invariant factor"));
}

bool FiniteAbelianGroup::is_elementary_abelian() const noexcept {
  const int p = factors_.front();
  if (factorize(p).size() != 1 || factorize(p).begin()->second != 1) return false;
  return std::all_of(factors_.begin(), factors_.end(), [p](int n) { return n == p; });
}

bool FiniteAbelianGroup::is_two_elementary() const noexcept {
  return std::all_of(factors_.begin(), factors_.end(), [](int n) { return n == 2; });
}

void FiniteAbelianGroup::check(const GroupElement& g) const {
  if (g.coords.size() != factors_.size()) {
    throw DomainError("element " + format_element(g) + " has " + std::to_string(g.coords.size()) +
                      " coordinates, group " + notation() + " needs " + std::to_string(factors_.size()));
  }
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (g.coords[i] < 0 || g.coords[i] >= factors_[i]) {
      throw DomainError("coordinate " + std::to_string(i + 1) + " of " + format_element(g) + " out of range [0," +
                        std::to_string(factors_[i]) + ")");
    }
  }
}

GroupElement FiniteAbelianGroup::zero() const { return GroupElement{std::vector<int>(factors_.size(), 0)}; }

GroupElement FiniteAbelianGroup::basis(std::size_t i) const {
  if (i >= factors_.size()) throw DomainError("basis index out of range");
  GroupElement e = zero();
  e.coords[i] = 1;
  return e;
}

GroupElement FiniteAbelianGroup::add(const GroupElement& g, const GroupElement& h) const {
  check(g);
  check(h);
  GroupElement r = zero();
  for (std::size_t i = 0; i < factors_.size(); ++i) r.coords[i] = (g.coords[i] + h.coords[i]) % factors_[i];
  return r;
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& g) const {
  check(g);
  GroupElement r = zero();
  for (std::size_t i = 0; i < factors_.size(); ++i) r.coords[i] = (factors_[i] - g.coords[i]) % factors_[i];
  return r;
}

int FiniteAbelianGroup::element_order(const GroupElement& g) const {
  check(g);
  int ord = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const int n = factors_[i];
    ord = std::lcm(ord, n / std::gcd(n, g.coords[i]));
  }
  return ord;
}

std::size_t FiniteAbelianGroup::index_of(const GroupElement& g) const {
  check(g);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) idx += static_cast<std::size_t>(g.coords[i]) * strides_[i];
  return idx;
}

GroupElement FiniteAbelianGroup::element_at(std::size_t index) const {
  if (index >= order_) throw DomainError("element index " + std::to_string(index) + " out of range");
  GroupElement g = zero();
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    g.coords[i] = static_cast<int>(index / strides_[i]);
    index %= strides_[i];
  }
  return g;
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order_);
  for (std::size_t i = 0; i < order_; ++i) out.push_back(element_at(i));
  return out;
}

std::int64_t FiniteAbelianGroup::pairing_numerator(const GroupElement& g, const GroupElement& a) const {
  check(g);
  check(a);
  const std::int64_t n = exponent();
  std::int64_t s = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    s += static_cast<std::int64_t>(g.coords[i]) * a.coords[i] * (n / factors_[i]);
  }
  return s % n;
}

std::string FiniteAbelianGroup::notation() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) os << (i ? "," : "") << factors_[i];
  return os.str();
}

std::string FiniteAbelianGroup::display_name() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) os << (i ? "+" : "") << "Z_" << factors_[i];
  return os.str();
}

std::vector<std::vector<int>> integer_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<FiniteAbelianGroup> enumerate_groups(std::int64_t d) {
  if (d < 2) throw DomainError("group order must be >= 2, got " + std::to_string(d));
  const auto primes = factorize(d);
  std::vector<std::pair<int, std::vector<std::vector<int>>>> choices;
  for (const auto& [p, e] : primes) choices.emplace_back(p, integer_partitions(e));

  std::vector<FiniteAbelianGroup> out;
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    std::map<int, std::vector<int>> exponents;
    for (std::size_t j = 0; j < choices.size(); ++j) exponents[choices[j].first] = choices[j].second[pick[j]];
    out.push_back(FiniteAbelianGroup::from_invariant_factors(assemble_invariant_factors(exponents)));
    // Odometer with the last prime varying fastest.
    std::size_t j = choices.size();
    while (j-- > 0) {
      if (++pick[j] < choices[j].second.size()) break;
      pick[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

std::string format_element(const GroupElement& g) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < g.coords.size(); ++i) os << (i ? "," : "") << g.coords[i];
  os << ')';
  return os.str();
}

GroupElement parse_element(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  return GroupElement{parse_int_list(text, "coordinate")};
}

}  // namespace abcover
