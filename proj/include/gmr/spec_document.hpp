#pragma once

// Ring-spec files: versioned JSON describing one Gamma_I-system, optional
// named ideals and cap overrides. Diagnostics carry a distinct code and the
// JSON path of the offending field, e.g. "$.construction.edges[2]".

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gmr/gamma_system.hpp"
#include "gmr/gm_ring.hpp"

namespace gmr {

struct TablesSpec {
  std::vector<std::string> index_set;
  std::vector<ComponentDecl> components;
  std::vector<ProductTableDecl> products;
};

struct SpecDocument {
  int version = 1;
  std::string description;
  std::string kind;  // "matrix_hom" | "path_algebra" | "tables"
  MatrixHomSpec matrix_hom;
  PathAlgebraSpec path_algebra;
  TablesSpec tables;
  std::map<std::string, std::vector<std::string>> named_ideals;
  Caps caps;

  /// Canonical form: every field explicit, keys sorted. Parsing the dump
  /// yields an equivalent document.
  nlohmann::json to_json() const;

  /// Builds the system (constructor errors keep their codes).
  GammaSystem build() const;
  /// Resolves a named ideal's generators against the assembled ring;
  /// throws InvalidInput E_IDEAL_NAME / E_COORDINATES.
  std::vector<Index> ideal_generators(const GMRing& ring, const std::string& name) const;
};

SpecDocument parse_spec(std::string_view text);

/// Exact byte digest of a spec text, "sha256:<hex>".
std::string spec_digest(std::string_view text);

}  // namespace gmr
