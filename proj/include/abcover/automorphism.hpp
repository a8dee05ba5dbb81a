#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "abcover/group.hpp"

namespace abcover {

/// An automorphism sigma of G stored as permutations of element indices.
///
/// `image[i]` is the index of sigma(g_i). `dual[i]` is the index of the
/// adjoint sigma^T(g_i) with respect to the pairing g.a = sum g_i a_i / n_i,
/// i.e. sigma(g).a == g.sigma^T(a). For cyclic groups sigma^T == sigma.
struct Automorphism {
  std::vector<std::uint32_t> image;
  std::vector<std::uint32_t> dual;
};

/// The full automorphism group of a supported G, enumerated on demand.
///
/// Supported: cyclic groups (multiplication by units) and elementary
/// abelian p-groups (GL(k, p) acting on coordinate vectors). Anything else
/// reports `supported() == false` and enumerates nothing; callers must fall
/// back to unreduced search.
class AutomorphismAction {
 public:
  explicit AutomorphismAction(FiniteAbelianGroup group);

  const FiniteAbelianGroup& group() const noexcept { return group_; }
  bool supported() const noexcept { return supported_; }
  /// |Aut(G)|; 0 when unsupported.
  std::uint64_t size() const noexcept { return size_; }

  /// Calls fn for every automorphism in a fixed order until
  /// fn returns false. Returns false iff stopped early. Small groups are
  /// served from a cache, large ones (e.g. GL(5,2)) are generated lazily.
  bool for_each(const std::function<bool(const Automorphism&)>& fn) const;

  GroupElement apply(const Automorphism& sigma, const GroupElement& g) const;
  GroupElement apply_dual(const Automorphism& sigma, const GroupElement& g) const;

 private:
  bool generate(const std::function<bool(const Automorphism&)>& fn) const;
  Automorphism from_matrix(const std::vector<std::uint32_t>& column_images) const;

  FiniteAbelianGroup group_;
  bool supported_ = false;
  std::uint64_t size_ = 0;
  std::shared_ptr<const std::vector<Automorphism>> cache_;
};

inline AutomorphismAction automorphism_action(const FiniteAbelianGroup& group) {
  return AutomorphismAction(group);
}

/// Canonical form of a map f: G \ {0} -> Z, given as values[i] = f(element
/// with index i + 1).
struct CanonicalForm {
  std::vector<std::int64_t> values;
  /// False when Aut(G) is unsupported and the input was returned unchanged.
  bool reduced = true;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Lexicographically least (f o sigma) over all automorphisms sigma.
CanonicalForm canonical_representative(const AutomorphismAction& action, std::span<const std::int64_t> values);

/// True iff no automorphism produces a lexicographically smaller f o sigma.
/// Unsupported groups: always true.
bool is_canonical(const AutomorphismAction& action, std::span<const std::int64_t> values);

/// Canonical form of a (target, solution) pair under simultaneous
/// relabeling: components move by sigma, characters by the adjoint, so the
/// pair (t, x) and (t o sigma^T, x o sigma^-1) are identified. Both inputs
/// are indexed like canonical_representative. The result interleaves
/// (t, x) per position.
CanonicalForm canonical_pair(const AutomorphismAction& action, std::span<const std::int64_t> targets,
                             std::span<const std::int64_t> solution);

}  // namespace abcover
