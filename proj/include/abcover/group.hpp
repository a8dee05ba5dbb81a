#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace abcover {

struct GroupElement {
  std::vector<int> coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Finite abelian group Z_{n_1} + ... + Z_{n_k} held in invariant-factor
/// form (n_1 | n_2 | ... | n_k, every n_i >= 2).
///
/// Elements are addressed either by coordinates or by a dense index in
/// [0, order). Index order is lexicographic on coordinates with the first
/// coordinate most significant, so index 0 is the zero element and e_i (the
/// i-th standard generator) has index order / (n_1 * ... * n_i).
class FiniteAbelianGroup {
 public:
  /// Accepts any list of cyclic factors (e.g. a primary decomposition such as
  /// {2, 3} or {4, 2}) and normalizes it to invariant-factor form. Factors of
  /// 1 are dropped. Throws DomainError if the resulting order is < 2.
  explicit FiniteAbelianGroup(const std::vector<int>& cyclic_factors);

  /// Strict constructor: throws DomainError unless the list already is a
  /// divisibility chain of factors >= 2.
  static FiniteAbelianGroup from_invariant_factors(const std::vector<int>& factors);

  /// Parses the comma-separated notation "2,2,2"; normalizes like the
  /// main constructor.
  static FiniteAbelianGroup parse(std::string_view notation);

  const std::vector<int>& invariant_factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  std::size_t order() const noexcept { return order_; }
  int exponent() const noexcept { return factors_.back(); }

  bool is_cyclic() const noexcept { return factors_.size() == 1; }
  /// All invariant factors equal to one prime p.
  bool is_elementary_abelian() const noexcept;
  bool is_two_elementary() const noexcept;

  void check(const GroupElement& g) const;  // throws DomainError
  GroupElement zero() const;
  GroupElement basis(std::size_t i) const;

  GroupElement add(const GroupElement& g, const GroupElement& h) const;
  GroupElement neg(const GroupElement& g) const;
  int element_order(const GroupElement& g) const;

  std::size_t index_of(const GroupElement& g) const;
  GroupElement element_at(std::size_t index) const;

  /// All elements in index order, zero first.
  std::vector<GroupElement> elements() const;

  /// exponent * (sum_i g_i a_i / n_i) reduced mod exponent; the Q/Z pairing
  /// of g and a scaled to an integer in [0, exponent).
  std::int64_t pairing_numerator(const GroupElement& g, const GroupElement& a) const;

  /// "2,2,2"
  std::string notation() const;
  /// "Z_2+Z_2+Z_2"
  std::string display_name() const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  struct Normalized {};
  FiniteAbelianGroup(Normalized, std::vector<int> factors);

  std::vector<int> factors_;
  std::vector<std::size_t> strides_;
  std::size_t order_ = 1;
};

/// One representative per isomorphism class of abelian groups of order d.
/// Ordered by descending partition of the exponent of each prime, so the
/// cyclic group comes first and the most split group last.
std::vector<FiniteAbelianGroup> enumerate_groups(std::int64_t d);

/// Integer partitions of n in reverse-lexicographic order ({n} first).
std::vector<std::vector<int>> integer_partitions(int n);

std::string format_element(const GroupElement& g);
GroupElement parse_element(std::string_view text);

}  // namespace abcover
