#pragma once

// The generalized matrix ring A = sum{A_ij} assembled from a Gamma_I-system,
// with its ideal calculus.

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gmr/abelian.hpp"
#include "gmr/gamma_system.hpp"
#include "gmr/verdict.hpp"

namespace gmr {

/// A generalized matrix as its nonzero entries.
struct GMElement {
  std::map<std::pair<std::size_t, std::size_t>, GroupElement> entries;
};

/// Index sets are limited so that an element's entries fit a stack buffer.
inline constexpr std::size_t kMaxIndexSet = 16;

/// Elements are addressed by Index in the additive group of A, which is the
/// concatenation of the components in (i,j) row-major order. The class is a
/// cheap shared handle; copies refer to the same ring.
class GMRing {
 public:
  /// Validates the system (Violation carrying the first axiom witness)
  /// and the order cap (ResourceLimit).
  static GMRing assemble(GammaSystem system, const Caps& caps = {});

  const GammaSystem& system() const { return impl_->system; }
  std::size_t size() const { return impl_->system.size(); }
  Index order() const { return impl_->additive.order(); }
  const FinAbGroup& additive() const { return impl_->additive; }
  const FinAbGroup& component(std::size_t i, std::size_t j) const { return system().component(i, j); }

  Index entry(Index x, std::size_t i, std::size_t j) const {
    const std::size_t c = i * size() + j;
    return (x / impl_->strides[c]) % system().component(i, j).order();
  }
  /// a E(i,j): the matrix whose only nonzero entry is a at (i,j).
  Index single(std::size_t i, std::size_t j, Index a) const { return a * impl_->strides[i * size() + j]; }

  Index add(Index x, Index y) const { return additive().add(x, y); }
  Index neg(Index x) const { return additive().neg(x); }
  Index sub(Index x, Index y) const { return additive().sub(x, y); }
  /// (xy)_ij = sum_k x_ik y_kj.
  Index mul(Index x, Index y) const;

  /// Additive generators: placed unit vectors of every component.
  const std::vector<Index>& generators() const { return impl_->generators; }

  GMElement element(Index x) const;
  Index index(const GMElement& e) const;
  /// "0" or nonzero entries "i,j:(c1,...)" joined by " + ".
  std::string format(Index x) const;
  /// Inverse of format; throws InvalidInput with code E_COORDINATES/E_LABEL.
  Index parse(std::string_view text) const;

  bool same_as(const GMRing& other) const { return impl_ == other.impl_; }

 private:
  struct Impl {
    GammaSystem system;
    FinAbGroup additive;
    std::vector<Index> strides;
    std::vector<Index> generators;
  };
  explicit GMRing(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

struct Check {
  bool ok = true;
  std::string witness;
};

/// Associativity and distributivity of A: exhaustive when |A| <= 64,
/// otherwise on triples of additive generators. The assembled product is a
/// sum of component products, so it is biadditive once the tables are.
Check ring_self_test(const GMRing& ring);

// ---------------------------------------------------------------------------
// Ideals

enum class Flavor { GM, Ring };
const char* to_string(Flavor f);

/// An ideal of A. Ring-flavored ideals are arbitrary two-sided ideals of the
/// assembled ring; gm-flavored ones additionally decompose as sum{B_ij}.
class GMIdeal {
 public:
  /// Builds from componentwise subgroups (gm flavor). Not checked.
  static GMIdeal from_components(const GMRing& ring, std::vector<Subgroup> components);
  /// Builds from a member subgroup of A. For gm flavor the components are
  /// the entry projections. Not checked.
  static GMIdeal from_members(const GMRing& ring, Subgroup members, Flavor flavor);

  const GMRing& ring() const { return ring_; }
  Flavor flavor() const { return flavor_; }
  const Subgroup& members() const { return members_; }
  Index order() const { return members_.order(); }
  bool contains(Index x) const { return members_.contains(x); }
  bool is_zero() const { return members_.is_zero(); }
  bool is_whole() const { return members_.is_whole(); }
  /// Componentwise subgroups B_ij (row-major); empty for ring flavor.
  const std::vector<Subgroup>& components() const { return components_; }
  const Subgroup& component(std::size_t i, std::size_t j) const { return components_[i * ring_.size() + j]; }

  bool operator==(const GMIdeal& o) const { return flavor_ == o.flavor_ && members_ == o.members_; }

 private:
  GMIdeal(GMRing ring, Flavor flavor) : ring_(std::move(ring)), flavor_(flavor) {}
  GMRing ring_;
  Flavor flavor_;
  Subgroup members_;
  std::vector<Subgroup> components_;
};

/// g.m. ideal closure conditions B_ij A_jk in B_ik, A_ij B_jk in B_ik.
Check is_gm_ideal(const GMRing& ring, const std::vector<Subgroup>& candidate);
/// Two-sided ideal of the assembled ring.
Check is_ring_ideal(const GMRing& ring, const Subgroup& members);

GMIdeal zero_ideal(const GMRing& ring, Flavor flavor);
GMIdeal whole_ideal(const GMRing& ring, Flavor flavor);

/// Smallest ideal of the flavor containing the seeds.
GMIdeal gm_ideal_closure(const GMRing& ring, std::span<const Index> seeds, Flavor flavor,
                         const Caps& caps = {});

/// D_ij = additive closure of A_is * B_st * A_tj; checked to be a g.m. ideal.
GMIdeal seed_ideal_from_component(const GMRing& ring, std::size_t s, std::size_t t,
                                  const Subgroup& b_st);

enum class CombineMode { Sum, Intersection };
GMIdeal combine_ideals(std::span<const GMIdeal> ideals, CombineMode mode);

/// Every ideal of the flavor, as sums of principal closures, sorted by
/// (order, members).
std::vector<GMIdeal> enumerate_ideals(const GMRing& ring, Flavor flavor, const Caps& caps = {});

/// B* = {x in A | xA = Ax = 0}, evaluated on the whole ring.
GMIdeal annihilator_star(const GMRing& ring);
/// The relative annihilator {x in A | xB = Bx = 0}. Not used by the theorem
/// verifiers.
GMIdeal annihilator_of(const GMRing& ring, const GMIdeal& b);

/// The ideal product B*C (additive span of all products), ring flavor.
Subgroup ideal_product(const GMRing& ring, const Subgroup& b, const Subgroup& c);

// ---------------------------------------------------------------------------
// Homomorphisms and quotients

/// A g.m. homomorphism given by component tables A_ij -> B_ij.
struct GMHom {
  GMRing source;
  GMRing target;
  std::vector<std::vector<Index>> maps;  // row-major in (i,j)

  /// The induced map on the assembled rings.
  Index apply(Index x) const;
};

struct HomCheck {
  bool ok = false;
  std::string witness;
  bool injective = false;
  bool surjective = false;
  std::optional<GMIdeal> kernel;  // set when ok
  std::vector<Subgroup> image;    // set when ok; a g.m. subring of the target
};

HomCheck verify_gm_hom(const GMHom& psi);

/// H_ij / K_ij as a Gamma_I-system. H must be closed under the products and
/// K must absorb them (K_ij H_jk, H_ij K_jk in K_ik); the coset product is
/// verified to be independent of representatives.
struct Subquotient {
  GammaSystem system;
  std::vector<std::vector<Index>> project;  // A_ij index -> quotient index (kOutside if not in H_ij)
  std::vector<std::vector<Index>> rep;      // quotient index -> least A_ij representative
};
inline constexpr Index kOutside = static_cast<Index>(-1);

Subquotient subquotient(const GammaSystem& system, const std::vector<Subgroup>& h,
                        const std::vector<Subgroup>& k, const Caps& caps = {});

struct Quotient {
  GMRing ring;
  GMHom projection;
  std::vector<std::vector<Index>> representatives;
};

/// A//B for a g.m. ideal B; throws InvalidInput with a witness otherwise.
Quotient quotient(const GMRing& ring, const GMIdeal& b, const Caps& caps = {});

/// Certificates for the quotient construction and the isomorphism theorems.
/// When `psi` is null the projection A -> A//B is used for the first
/// isomorphism theorem and the ideal correspondence.
TheoremReport verify_iso_theorems(const GMRing& ring, const GMIdeal& b, const GMIdeal& c,
                                  const GMHom* psi = nullptr, const Caps& caps = {});

}  // namespace gmr
