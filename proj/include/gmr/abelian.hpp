#pragma once

// Finite abelian groups presented by invariant factors, their elements and
// subgroups. Everything downstream (components A_ij, the assembled ring,
// ideals) addresses elements by their canonical Index in this encoding.

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gmr/error.hpp"

namespace gmr {

using Index = std::uint32_t;

/// Coordinates of an element of a FinAbGroup, one residue per factor.
struct GroupElement {
  std::vector<std::uint32_t> coords;

  auto operator<=>(const GroupElement&) const = default;
  std::string to_string() const;  // "(c1,c2,...)"
};

/// Z_{n_1} x ... x Z_{n_r}. Elements are enumerated lexicographically on
/// coordinates (first coordinate most significant), so Index order and
/// lexicographic order coincide.
class FinAbGroup {
 public:
  /// Trivial group with no factors.
  FinAbGroup() = default;

  static FinAbGroup make(std::vector<std::uint32_t> invariant_factors,
                         std::uint64_t order_cap = Caps{}.max_order);

  const std::vector<std::uint32_t>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  Index order() const { return order_; }

  GroupElement element(Index a) const;
  Index index(const GroupElement& e) const;
  bool contains(const GroupElement& e) const;
  std::uint32_t coord(Index a, std::size_t k) const { return (a / strides_[k]) % factors_[k]; }

  Index zero() const { return 0; }
  Index add(Index a, Index b) const;
  Index neg(Index a) const;
  Index sub(Index a, Index b) const { return add(a, neg(b)); }
  Index scale(Index a, std::int64_t n) const;
  Index element_order(Index a) const;

  /// Unit coordinate vectors of the nontrivial factors; they generate the group.
  std::vector<Index> generators() const;

  bool operator==(const FinAbGroup& other) const { return factors_ == other.factors_; }

 private:
  std::vector<std::uint32_t> factors_;
  std::vector<Index> strides_;
  Index order_ = 1;
};

/// A subgroup stored as its canonical sorted member list.
class Subgroup {
 public:
  Subgroup() = default;

  static Subgroup zero(const FinAbGroup& g);
  static Subgroup whole(const FinAbGroup& g);
  /// Validates that `members` is a subgroup; throws InvalidInput otherwise.
  static Subgroup from_members(const FinAbGroup& g, std::vector<Index> members);
  static Subgroup generated_by(const FinAbGroup& g, std::span<const Index> gens);

  const FinAbGroup& parent() const { return parent_; }
  const std::vector<Index>& members() const { return members_; }
  Index order() const { return static_cast<Index>(members_.size()); }
  bool is_zero() const { return members_.size() == 1; }
  bool is_whole() const { return members_.size() == parent_.order(); }
  bool contains(Index a) const;
  bool is_subset_of(const Subgroup& other) const;

  /// Greedy generating set: members (ascending) not in the span of the
  /// previously chosen ones.
  std::vector<Index> generators() const;

  Subgroup join(const Subgroup& other) const;
  Subgroup meet(const Subgroup& other) const;

  bool operator==(const Subgroup& other) const {
    return parent_ == other.parent_ && members_ == other.members_;
  }
  auto operator<=>(const Subgroup& other) const { return members_ <=> other.members_; }

 private:
  Subgroup(FinAbGroup parent, std::vector<Index> members)
      : parent_(std::move(parent)), members_(std::move(members)) {}

  FinAbGroup parent_;
  std::vector<Index> members_{0};

  friend class SpanBuilder;
};

/// Incrementally grows the span of a set of generators.
class SpanBuilder {
 public:
  explicit SpanBuilder(const FinAbGroup& g);
  /// Starts from an existing subgroup.
  explicit SpanBuilder(const Subgroup& start);

  /// Adds `g` to the span; returns false if it was already a member.
  bool add(Index g);
  bool contains(Index a) const { return mask_[a] != 0; }
  std::size_t size() const { return members_.size(); }
  const std::vector<Index>& members() const { return members_; }
  Subgroup finish() &&;

 private:
  const FinAbGroup* group_;
  std::vector<std::uint8_t> mask_;
  std::vector<Index> members_;
};

/// An additive self-map of a group given as a table over element indices.
using Endomorphism = std::vector<Index>;

bool is_additive(const FinAbGroup& g, const Endomorphism& map);

/// Smallest subgroup containing `seed` closed under every closer.
/// Throws InvalidInput on a foreign seed element or a closer that is not a
/// total additive table.
Subgroup subgroup_closure(const FinAbGroup& g, std::span<const GroupElement> seed,
                          std::span<const Endomorphism> closers);

/// Fixpoint engine behind subgroup_closure and the ideal closures.
/// `images(x, out)` appends the images of a newly accepted generator x.
/// Only generators that enlarge the span are expanded; for additive closers
/// this suffices, since the image of a span is the span of the images.
template <class Images>
Subgroup close_subgroup(const FinAbGroup& g, std::span<const Index> seeds, Images&& images) {
  SpanBuilder span(g);
  std::vector<Index> queue(seeds.begin(), seeds.end());
  while (!queue.empty()) {
    Index x = queue.back();
    queue.pop_back();
    if (span.add(x)) images(x, queue);
  }
  return std::move(span).finish();
}

/// Result of finding an invariant-factor presentation for an abstract
/// finite abelian group on ids 0..order-1 (0 = identity).
struct AbelianPresentation {
  FinAbGroup group;
  std::vector<Index> to_group;    // abstract id -> group index
  std::vector<Index> from_group;  // group index -> abstract id
};

/// Decomposes an abstract finite abelian group, given by its addition, into
/// cyclic factors of prime-power order (primes ascending, exponents
/// descending within a prime). Coordinates map to sums of basis multiples,
/// so the map is a homomorphism; injectivity is checked.
AbelianPresentation present_abelian(Index order, const std::function<Index(Index, Index)>& add);

}  // namespace gmr
