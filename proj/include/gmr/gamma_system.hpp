#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gmr/abelian.hpp"

namespace gmr {

/// An index set I with components A_ij and product tables
/// mu_ijk : A_ij x A_jk -> A_ik. Tables are stored row-major:
/// table(i,j,k)[x * |A_jk| + z] = x*z.
class GammaSystem {
 public:
  GammaSystem() = default;
  /// `components` has n*n entries (row-major in (i,j)); `tables` has n^3
  /// entries indexed ((i*n)+j)*n+k. Shapes and entry ranges are validated.
  GammaSystem(std::vector<std::string> labels, std::vector<FinAbGroup> components,
              std::vector<std::vector<Index>> tables);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  /// Position of `label` in I; throws InvalidInput when undeclared.
  std::size_t label_index(std::string_view label) const;

  const FinAbGroup& component(std::size_t i, std::size_t j) const {
    return components_[i * size() + j];
  }
  const std::vector<Index>& table(std::size_t i, std::size_t j, std::size_t k) const {
    return tables_[(i * size() + j) * size() + k];
  }
  Index mul(std::size_t i, std::size_t j, std::size_t k, Index x, Index z) const {
    return table(i, j, k)[static_cast<std::size_t>(x) * component(j, k).order() + z];
  }

  /// Sum of component orders.
  std::uint64_t total_component_order() const;

  bool operator==(const GammaSystem&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<FinAbGroup> components_;
  std::vector<std::vector<Index>> tables_;
};

// ---------------------------------------------------------------------------
// Axiom checking

enum class AxiomCheckMode {
  /// Additivity tested against the factor generators, associativity on
  /// generator triples. Equivalent to the exhaustive check for deciding
  /// validity (a biadditive/triadditive map is fixed by generator values).
  Generators,
  /// Every instance of every axiom.
  Exhaustive,
};

struct AxiomViolation {
  std::string axiom;                 // "left-distributive", "right-distributive", "associative"
  std::vector<std::string> indices;  // labels involved, in order of appearance
  std::vector<Index> elements;       // operands in the order of the axiom statement
  Index lhs = 0;
  Index rhs = 0;

  std::string describe(const GammaSystem& s) const;
};

struct AxiomReport {
  AxiomCheckMode mode = AxiomCheckMode::Generators;
  std::vector<AxiomViolation> violations;  // first `witness_limit` found, canonical order
  std::uint64_t violation_count = 0;
  bool ok() const { return violation_count == 0; }
};

AxiomReport check_gamma_axioms(const GammaSystem& s, AxiomCheckMode mode = AxiomCheckMode::Generators,
                               const Caps& caps = {}, std::size_t witness_limit = 64);

// ---------------------------------------------------------------------------
// Constructors

struct MatrixHomSpec {
  std::vector<std::pair<std::string, std::uint32_t>> dims;  // object label -> rank
  std::uint32_t modulus = 2;
  std::set<std::pair<std::string, std::string>> zero_blocks;
};

/// A_ij = d_i x d_j matrices over Z_m (Hom(j, i) of free Z_m-modules),
/// products by matrix multiplication; blocks in zero_blocks are trivial.
GammaSystem from_matrix_homs(const MatrixHomSpec& spec, const Caps& caps = {});

struct PathAlgebraSpec {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::uint32_t modulus = 2;
  std::uint32_t truncation = 1;
  bool include_trivial_paths = true;
};

/// A path as its vertex sequence (positions in `vertices`); a single vertex
/// is the trivial path at that vertex.
using Path = std::vector<std::size_t>;

struct PathAlgebra {
  GammaSystem system;
  /// Basis paths of A_ij (row-major in (i,j)), ordered by length, then
  /// lexicographically by vertex positions. Coordinate k of an element of
  /// A_ij is the coefficient of basis[k].
  std::vector<std::vector<Path>> basis;
};

PathAlgebra build_path_algebra(const PathAlgebraSpec& spec, const Caps& caps = {});
GammaSystem from_digraph(const PathAlgebraSpec& spec, const Caps& caps = {});

struct ComponentDecl {
  std::string i, j;
  std::vector<std::uint32_t> factors;
};

struct ProductTableDecl {
  std::string i, j, k;
  /// rows[x][z] = index of x*z in A_ik.
  std::vector<std::vector<Index>> rows;
};

/// Explicit system. Undeclared components are trivial and undeclared tables
/// are zero maps. The result is not axiom-checked.
GammaSystem from_tables(const std::vector<std::string>& index_set,
                        const std::vector<ComponentDecl>& components,
                        const std::vector<ProductTableDecl>& tables, const Caps& caps = {});

}  // namespace gmr
