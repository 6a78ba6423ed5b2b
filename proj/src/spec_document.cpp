#include "gmr/spec_document.hpp"

#include <openssl/sha.h>

#include <algorithm>
#include <cstdio>
#include <regex>
#include <set>

namespace gmr {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& code, const std::string& path, const std::string& msg) {
  invalid_input(code, path + ": " + msg);
}

const char* type_name(const json& j) {
  switch (j.type()) {
    case json::value_t::object: return "object";
    case json::value_t::array: return "array";
    case json::value_t::string: return "string";
    case json::value_t::boolean: return "boolean";
    case json::value_t::null: return "null";
    case json::value_t::number_float: return "float";
    default: return "integer";
  }
}

const json& object_at(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail("E_SCHEMA", path, std::string("expected object, found ") + type_name(j));
  for (const auto& [key, _] : j.items())
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
      fail("E_UNKNOWN_FIELD", path + "." + key, "unknown field");
  return j;
}

const json& member(const json& obj, const std::string& path, const char* key) {
  if (!obj.contains(key)) fail("E_SCHEMA", path + "." + key, "missing required field");
  return obj.at(key);
}

const json& array_at(const json& j, const std::string& path) {
  if (!j.is_array()) fail("E_SCHEMA", path, std::string("expected array, found ") + type_name(j));
  return j;
}

std::uint64_t integer_at(const json& j, const std::string& path, std::uint64_t lo, std::uint64_t hi) {
  if (!j.is_number_integer()) fail("E_SCHEMA", path, std::string("expected integer, found ") + type_name(j));
  if (j.is_number_unsigned() || j.get<std::int64_t>() >= 0) {
    const auto v = j.get<std::uint64_t>();
    if (v >= lo && v <= hi) return v;
  }
  fail("E_RANGE", path, "integer out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

std::string string_at(const json& j, const std::string& path) {
  if (!j.is_string()) fail("E_SCHEMA", path, std::string("expected string, found ") + type_name(j));
  return j.get<std::string>();
}

bool bool_at(const json& j, const std::string& path) {
  if (!j.is_boolean()) fail("E_SCHEMA", path, std::string("expected boolean, found ") + type_name(j));
  return j.get<bool>();
}

std::string label_at(const json& j, const std::string& path) {
  auto s = string_at(j, path);
  static const std::regex ok("[A-Za-z0-9_.-]+");
  if (!std::regex_match(s, ok)) fail("E_LABEL", path, "label '" + s + "' must match [A-Za-z0-9_.-]+");
  return s;
}

std::string declared_label(const json& j, const std::string& path, const std::set<std::string>& declared) {
  auto s = label_at(j, path);
  if (!declared.count(s)) fail("E_LABEL", path, "undeclared label '" + s + "'");
  return s;
}

std::string idx(const std::string& path, std::size_t k) { return path + "[" + std::to_string(k) + "]"; }

std::set<std::string> unique_labels(const std::vector<std::string>& labels, const std::string& path) {
  std::set<std::string> seen;
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (!seen.insert(labels[k]).second) fail("E_DUPLICATE", idx(path, k), "duplicate label '" + labels[k] + "'");
  if (labels.empty()) fail("E_SCHEMA", path, "index set must not be empty");
  if (labels.size() > kMaxIndexSet)
    fail("E_RANGE", path, "at most " + std::to_string(kMaxIndexSet) + " indices are supported");
  return seen;
}

void parse_matrix_hom(SpecDocument& d, const json& c, const std::string& p) {
  object_at(c, p, {"kind", "objects", "modulus", "zero_blocks"});
  const auto& objs = array_at(member(c, p, "objects"), p + ".objects");
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < objs.size(); ++k) {
    const auto q = idx(p + ".objects", k);
    object_at(objs[k], q, {"label", "dim"});
    labels.push_back(label_at(member(objs[k], q, "label"), q + ".label"));
    d.matrix_hom.dims.emplace_back(labels.back(),
                                   static_cast<std::uint32_t>(integer_at(member(objs[k], q, "dim"), q + ".dim", 1, 16)));
  }
  const auto declared = unique_labels(labels, p + ".objects");
  d.matrix_hom.modulus = static_cast<std::uint32_t>(integer_at(member(c, p, "modulus"), p + ".modulus", 2, 65536));
  if (c.contains("zero_blocks")) {
    const auto& zb = array_at(c.at("zero_blocks"), p + ".zero_blocks");
    for (std::size_t k = 0; k < zb.size(); ++k) {
      const auto q = idx(p + ".zero_blocks", k);
      if (!zb[k].is_array() || zb[k].size() != 2) fail("E_SCHEMA", q, "expected a pair [i, j]");
      auto i = declared_label(zb[k][0], idx(q, 0), declared), j = declared_label(zb[k][1], idx(q, 1), declared);
      if (!d.matrix_hom.zero_blocks.emplace(i, j).second) fail("E_DUPLICATE", q, "duplicate zero block");
    }
  }
}

void parse_path_algebra(SpecDocument& d, const json& c, const std::string& p) {
  object_at(c, p, {"kind", "vertices", "edges", "modulus", "truncation", "include_trivial_paths"});
  auto& pa = d.path_algebra;
  const auto& vs = array_at(member(c, p, "vertices"), p + ".vertices");
  for (std::size_t k = 0; k < vs.size(); ++k) pa.vertices.push_back(label_at(vs[k], idx(p + ".vertices", k)));
  const auto declared = unique_labels(pa.vertices, p + ".vertices");
  const auto& es = array_at(member(c, p, "edges"), p + ".edges");
  std::set<std::pair<std::string, std::string>> seen;
  for (std::size_t k = 0; k < es.size(); ++k) {
    const auto q = idx(p + ".edges", k);
    if (!es[k].is_array() || es[k].size() != 2) fail("E_SCHEMA", q, "expected an edge [source, target]");
    for (std::size_t e = 0; e < 2; ++e) {
      auto v = label_at(es[k][e], idx(q, e));
      if (!declared.count(v)) fail("E_LABEL", q, "edge " + std::to_string(k) + " references undeclared vertex '" + v + "'");
    }
    pa.edges.emplace_back(es[k][0].get<std::string>(), es[k][1].get<std::string>());
    if (!seen.insert(pa.edges.back()).second) fail("E_DUPLICATE_EDGE", q, "duplicate edge");
  }
  pa.modulus = static_cast<std::uint32_t>(integer_at(member(c, p, "modulus"), p + ".modulus", 2, 65536));
  pa.truncation = static_cast<std::uint32_t>(integer_at(member(c, p, "truncation"), p + ".truncation", 1, 16));
  if (c.contains("include_trivial_paths"))
    pa.include_trivial_paths = bool_at(c.at("include_trivial_paths"), p + ".include_trivial_paths");
}

void parse_tables(SpecDocument& d, const json& c, const std::string& p) {
  object_at(c, p, {"kind", "index_set", "components", "products"});
  auto& t = d.tables;
  const auto& is = array_at(member(c, p, "index_set"), p + ".index_set");
  for (std::size_t k = 0; k < is.size(); ++k) t.index_set.push_back(label_at(is[k], idx(p + ".index_set", k)));
  const auto declared = unique_labels(t.index_set, p + ".index_set");

  const auto& comps = array_at(member(c, p, "components"), p + ".components");
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const auto q = idx(p + ".components", k);
    object_at(comps[k], q, {"i", "j", "factors"});
    ComponentDecl decl;
    decl.i = declared_label(member(comps[k], q, "i"), q + ".i", declared);
    decl.j = declared_label(member(comps[k], q, "j"), q + ".j", declared);
    const auto& fs = array_at(member(comps[k], q, "factors"), q + ".factors");
    for (std::size_t f = 0; f < fs.size(); ++f)
      decl.factors.push_back(static_cast<std::uint32_t>(integer_at(fs[f], idx(q + ".factors", f), 1, 65536)));
    t.components.push_back(std::move(decl));
  }

  if (c.contains("products")) {
    const auto& prods = array_at(c.at("products"), p + ".products");
    for (std::size_t k = 0; k < prods.size(); ++k) {
      const auto q = idx(p + ".products", k);
      object_at(prods[k], q, {"i", "j", "k", "table"});
      ProductTableDecl decl;
      decl.i = declared_label(member(prods[k], q, "i"), q + ".i", declared);
      decl.j = declared_label(member(prods[k], q, "j"), q + ".j", declared);
      decl.k = declared_label(member(prods[k], q, "k"), q + ".k", declared);
      const auto& rows = array_at(member(prods[k], q, "table"), q + ".table");
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto rp = idx(q + ".table", r);
        const auto& row = array_at(rows[r], rp);
        decl.rows.emplace_back();
        for (std::size_t e = 0; e < row.size(); ++e)
          decl.rows.back().push_back(static_cast<Index>(integer_at(row[e], idx(rp, e), 0, 0xFFFFFFFFu)));
      }
      t.products.push_back(std::move(decl));
    }
  }
}

const std::vector<std::string> index_labels(const SpecDocument& d) {
  if (d.kind == "matrix_hom") {
    std::vector<std::string> v;
    for (const auto& [l, _] : d.matrix_hom.dims) v.push_back(l);
    return v;
  }
  if (d.kind == "path_algebra") return d.path_algebra.vertices;
  return d.tables.index_set;
}

// "0" or terms "i,j:(c1,...)" joined by "+".
void check_element_syntax(const std::string& text, const std::string& path, const std::set<std::string>& declared) {
  static const std::regex term(R"(\s*([A-Za-z0-9_.-]+),([A-Za-z0-9_.-]+):\((\d+(?:,\d+)*)?\)\s*)");
  static const std::regex zero(R"(\s*0\s*)");
  if (std::regex_match(text, zero)) return;
  std::size_t start = 0;
  while (true) {
    const auto plus = text.find('+', start);
    const auto piece = text.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    std::smatch m;
    if (!std::regex_match(piece, m, term))
      fail("E_ELEMENT_SYNTAX", path, "malformed element '" + text + "', expected i,j:(c1,...,cr)");
    for (int g = 1; g <= 2; ++g)
      if (!declared.count(m[g].str())) fail("E_LABEL", path, "undeclared label '" + m[g].str() + "'");
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
}

}  // namespace

SpecDocument parse_spec(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    invalid_input("E_JSON", std::string("$: ") + e.what());
  }
  SpecDocument d;
  object_at(root, "$", {"version", "description", "construction", "named_ideals", "caps"});
  const auto& ver = member(root, "$", "version");
  if (!ver.is_number_integer() || ver.get<std::int64_t>() != 1)
    fail("E_VERSION", "$.version", "unsupported spec version " + ver.dump() + " (expected 1)");
  if (root.contains("description")) d.description = string_at(root.at("description"), "$.description");

  const auto& c = member(root, "$", "construction");
  if (!c.is_object()) fail("E_SCHEMA", "$.construction", std::string("expected object, found ") + type_name(c));
  d.kind = string_at(member(c, "$.construction", "kind"), "$.construction.kind");
  if (d.kind == "matrix_hom") parse_matrix_hom(d, c, "$.construction");
  else if (d.kind == "path_algebra") parse_path_algebra(d, c, "$.construction");
  else if (d.kind == "tables") parse_tables(d, c, "$.construction");
  else fail("E_KIND", "$.construction.kind", "unknown construction kind '" + d.kind + "'");

  if (root.contains("named_ideals")) {
    const auto labels = index_labels(d);
    const std::set<std::string> declared(labels.begin(), labels.end());
    const auto& ni = root.at("named_ideals");
    if (!ni.is_object()) fail("E_SCHEMA", "$.named_ideals", std::string("expected object, found ") + type_name(ni));
    for (const auto& [name, gens] : ni.items()) {
      const auto q = "$.named_ideals." + name;
      label_at(json(name), q);
      const auto& arr = array_at(gens, q);
      auto& out = d.named_ideals[name];
      for (std::size_t k = 0; k < arr.size(); ++k) {
        out.push_back(string_at(arr[k], idx(q, k)));
        check_element_syntax(out.back(), idx(q, k), declared);
      }
    }
  }

  if (root.contains("caps")) {
    const auto& caps = object_at(root.at("caps"), "$.caps", {"max_order", "max_lattice", "max_radical"});
    const std::uint64_t hard = std::uint64_t{1} << 24;
    if (caps.contains("max_order")) d.caps.max_order = integer_at(caps.at("max_order"), "$.caps.max_order", 1, hard);
    if (caps.contains("max_lattice"))
      d.caps.max_lattice = integer_at(caps.at("max_lattice"), "$.caps.max_lattice", 1, hard);
    if (caps.contains("max_radical"))
      d.caps.max_radical = integer_at(caps.at("max_radical"), "$.caps.max_radical", 1, hard);
  }
  return d;
}

json SpecDocument::to_json() const {
  json c;
  c["kind"] = kind;
  if (kind == "matrix_hom") {
    c["objects"] = json::array();
    for (const auto& [l, dim] : matrix_hom.dims) c["objects"].push_back({{"label", l}, {"dim", dim}});
    c["modulus"] = matrix_hom.modulus;
    c["zero_blocks"] = json::array();
    for (const auto& [i, j] : matrix_hom.zero_blocks) c["zero_blocks"].push_back({i, j});
  } else if (kind == "path_algebra") {
    c["vertices"] = path_algebra.vertices;
    c["edges"] = json::array();
    for (const auto& [s, t] : path_algebra.edges) c["edges"].push_back({s, t});
    c["modulus"] = path_algebra.modulus;
    c["truncation"] = path_algebra.truncation;
    c["include_trivial_paths"] = path_algebra.include_trivial_paths;
  } else {
    c["index_set"] = tables.index_set;
    c["components"] = json::array();
    for (const auto& comp : tables.components)
      c["components"].push_back({{"i", comp.i}, {"j", comp.j}, {"factors", comp.factors}});
    c["products"] = json::array();
    for (const auto& p : tables.products)
      c["products"].push_back({{"i", p.i}, {"j", p.j}, {"k", p.k}, {"table", p.rows}});
  }
  json out;
  out["version"] = version;
  out["description"] = description;
  out["construction"] = std::move(c);
  out["named_ideals"] = json::object();
  for (const auto& [name, gens] : named_ideals) out["named_ideals"][name] = gens;
  out["caps"] = {{"max_order", caps.max_order}, {"max_lattice", caps.max_lattice}, {"max_radical", caps.max_radical}};
  return out;
}

GammaSystem SpecDocument::build() const {
  if (kind == "matrix_hom") return from_matrix_homs(matrix_hom, caps);
  if (kind == "path_algebra") return from_digraph(path_algebra, caps);
  return from_tables(tables.index_set, tables.components, tables.products, caps);
}

std::vector<Index> SpecDocument::ideal_generators(const GMRing& ring, const std::string& name) const {
  auto it = named_ideals.find(name);
  if (it == named_ideals.end()) invalid_input("E_IDEAL_NAME", "$.named_ideals: no ideal named '" + name + "'");
  std::vector<Index> out;
  for (std::size_t k = 0; k < it->second.size(); ++k) {
    try {
      out.push_back(ring.parse(it->second[k]));
    } catch (const Error& e) {
      invalid_input(e.code(), idx("$.named_ideals." + name, k) + ": " + e.what());
    }
  }
  return out;
}

std::string spec_digest(std::string_view text) {
  unsigned char md[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(text.data()), text.size(), md);
  std::string hex = "sha256:";
  char buf[3];
  for (unsigned char b : md) {
    std::snprintf(buf, sizeof buf, "%02x", b);
    hex += buf;
  }
  return hex;
}

}  // namespace gmr
