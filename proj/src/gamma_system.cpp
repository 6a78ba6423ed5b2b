#include "gmr/gamma_system.hpp"

#include <algorithm>
#include <map>

namespace gmr {

namespace {

// Upper bound on stored product-table entries across a system.
constexpr std::uint64_t kMaxTableEntries = std::uint64_t{1} << 25;

void check_table_budget(const std::vector<FinAbGroup>& comps, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        total += std::uint64_t{comps[i * n + j].order()} * comps[j * n + k].order();
  if (total > kMaxTableEntries)
    resource_limit("product tables would need " + std::to_string(total) + " entries");
}

}  // namespace

GammaSystem::GammaSystem(std::vector<std::string> labels, std::vector<FinAbGroup> components,
                         std::vector<std::vector<Index>> tables)
    : labels_(std::move(labels)), components_(std::move(components)), tables_(std::move(tables)) {
  const std::size_t n = labels_.size();
  if (n == 0) invalid_input("E_INDEX_SET", "index set is empty");
  {
    auto sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      invalid_input("E_INDEX_SET", "duplicate label in index set");
  }
  if (components_.size() != n * n) invalid_input("E_SHAPE", "component count must be |I|^2");
  if (tables_.size() != n * n * n) invalid_input("E_SHAPE", "table count must be |I|^3");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const auto& t = table(i, j, k);
        const std::uint64_t want = std::uint64_t{component(i, j).order()} * component(j, k).order();
        if (t.size() != want)
          invalid_input("E_SHAPE", "product table (" + labels_[i] + "," + labels_[j] + "," +
                                       labels_[k] + ") has wrong size");
        const Index bound = component(i, k).order();
        for (Index v : t)
          if (v >= bound)
            invalid_input("E_TABLE_RANGE", "product table (" + labels_[i] + "," + labels_[j] +
                                               "," + labels_[k] + ") entry out of range");
      }
}

std::size_t GammaSystem::label_index(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  invalid_input("E_LABEL", "undeclared label '" + std::string(label) + "'");
}

std::uint64_t GammaSystem::total_component_order() const {
  std::uint64_t t = 0;
  for (const auto& c : components_) t += c.order();
  return t;
}

// ---------------------------------------------------------------------------

std::string AxiomViolation::describe(const GammaSystem& s) const {
  std::string out = axiom + " at (";
  for (std::size_t k = 0; k < indices.size(); ++k) out += (k ? "," : "") + indices[k];
  out += ") elements [";
  for (std::size_t k = 0; k < elements.size(); ++k)
    out += (k ? " " : "") + std::to_string(elements[k]);
  out += "] lhs=" + std::to_string(lhs) + " rhs=" + std::to_string(rhs);
  (void)s;
  return out;
}

AxiomReport check_gamma_axioms(const GammaSystem& s, AxiomCheckMode mode, const Caps& caps,
                               std::size_t witness_limit) {
  const std::size_t n = s.size();
  if (s.total_component_order() > caps.max_order)
    resource_limit("total component order exceeds cap " + std::to_string(caps.max_order));

  AxiomReport report;
  report.mode = mode;
  auto record = [&](const char* axiom, std::vector<std::size_t> idx, std::vector<Index> elems,
                    Index lhs, Index rhs) {
    ++report.violation_count;
    if (report.violations.size() >= witness_limit) return;
    AxiomViolation v{axiom, {}, std::move(elems), lhs, rhs};
    for (auto i : idx) v.indices.push_back(s.label(i));
    report.violations.push_back(std::move(v));
  };

  auto all_of = [](const FinAbGroup& g) {
    std::vector<Index> v(g.order());
    for (Index a = 0; a < g.order(); ++a) v[a] = a;
    return v;
  };
  // The "second summand" range in the distributive laws. Including 0 pins
  // 0*z = 0 even on trivial components.
  auto summands = [&](const FinAbGroup& g) {
    if (mode == AxiomCheckMode::Exhaustive) return all_of(g);
    auto v = g.generators();
    v.insert(v.begin(), Index{0});
    return v;
  };
  auto operands = [&](const FinAbGroup& g) {
    return mode == AxiomCheckMode::Exhaustive ? all_of(g) : g.generators();
  };

  if (mode == AxiomCheckMode::Exhaustive) {
    std::uint64_t cost = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          const std::uint64_t ab = s.component(a, b).order(), bc = s.component(b, c).order();
          cost += ab * ab * bc + ab * bc * bc;
          for (std::size_t l = 0; l < n; ++l) cost += std::uint64_t{s.component(l, a).order()} * ab * bc;
        }
    if (cost > (std::uint64_t{1} << 32)) resource_limit("exhaustive axiom check too large");
  }

  // Right distributivity (x+y)z = xz+yz and left distributivity w(x+y) = wx+wy,
  // over every composable triple (a,b,c).
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const auto& left = s.component(a, b);
        const auto& right = s.component(b, c);
        const auto& out = s.component(a, c);
        const auto ys = summands(left);
        for (Index z = 0; z < right.order(); ++z)
          for (Index x = 0; x < left.order(); ++x)
            for (Index y : ys) {
              const Index lhs = s.mul(a, b, c, left.add(x, y), z);
              const Index rhs = out.add(s.mul(a, b, c, x, z), s.mul(a, b, c, y, z));
              if (lhs != rhs) record("right-distributive", {a, b, c}, {x, y, z}, lhs, rhs);
            }
        const auto ys2 = summands(right);
        for (Index w = 0; w < left.order(); ++w)
          for (Index x = 0; x < right.order(); ++x)
            for (Index y : ys2) {
              const Index lhs = s.mul(a, b, c, w, right.add(x, y));
              const Index rhs = out.add(s.mul(a, b, c, w, x), s.mul(a, b, c, w, y));
              if (lhs != rhs) record("left-distributive", {a, b, c}, {w, x, y}, lhs, rhs);
            }
      }

  // w(xz) = (wx)z for w in A_li, x in A_ij, z in A_jk.
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const auto ws = operands(s.component(l, i));
          const auto xs = operands(s.component(i, j));
          const auto zs = operands(s.component(j, k));
          for (Index w : ws)
            for (Index x : xs)
              for (Index z : zs) {
                const Index lhs = s.mul(l, i, k, w, s.mul(i, j, k, x, z));
                const Index rhs = s.mul(l, j, k, s.mul(l, i, j, w, x), z);
                if (lhs != rhs) record("associative", {l, i, j, k}, {w, x, z}, lhs, rhs);
              }
        }
  return report;
}

// ---------------------------------------------------------------------------

GammaSystem from_matrix_homs(const MatrixHomSpec& spec, const Caps& caps) {
  if (spec.modulus < 2) invalid_input("E_MODULUS", "modulus must be >= 2");
  const std::size_t n = spec.dims.size();
  std::vector<std::string> labels;
  std::vector<std::uint32_t> dim;
  for (const auto& [label, d] : spec.dims) {
    if (d < 1) invalid_input("E_DIM", "dimension of object '" + label + "' must be >= 1");
    labels.push_back(label);
    dim.push_back(d);
  }
  auto find = [&](const std::string& l) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) invalid_input("E_LABEL", "zero block references undeclared object '" + l + "'");
    return static_cast<std::size_t>(it - labels.begin());
  };
  std::vector<std::uint8_t> zeroed(n * n, 0);
  for (const auto& [i, j] : spec.zero_blocks) zeroed[find(i) * n + find(j)] = 1;

  // Full matrix blocks over Z_m (m >= 2) always have a nonzero product, so
  // a masked target with two live factors breaks associativity.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (zeroed[i * n + k] && !zeroed[i * n + j] && !zeroed[j * n + k])
          invalid_input("E_ZERO_MASK", "inconsistent zero_blocks: (" + labels[i] + "," + labels[k] +
                                           ") is zero but (" + labels[i] + "," + labels[j] + ")*(" +
                                           labels[j] + "," + labels[k] + ") is not");

  std::vector<FinAbGroup> comps(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!zeroed[i * n + j])
        comps[i * n + j] =
            FinAbGroup::make(std::vector<std::uint32_t>(dim[i] * dim[j], spec.modulus), caps.max_order);
  check_table_budget(comps, n);

  const std::uint32_t m = spec.modulus;
  std::vector<std::vector<Index>> tables(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const auto& A = comps[i * n + j];
        const auto& B = comps[j * n + k];
        const auto& C = comps[i * n + k];
        auto& t = tables[(i * n + j) * n + k];
        t.assign(std::size_t{A.order()} * B.order(), 0);
        if (A.rank() == 0 || B.rank() == 0 || C.rank() == 0) continue;
        const std::uint32_t r = dim[i], q = dim[j], c = dim[k];
        for (Index x = 0; x < A.order(); ++x) {
          const auto X = A.element(x).coords;
          for (Index z = 0; z < B.order(); ++z) {
            const auto Z = B.element(z).coords;
            GroupElement prod;
            prod.coords.assign(std::size_t{r} * c, 0);
            for (std::uint32_t a = 0; a < r; ++a)
              for (std::uint32_t b = 0; b < c; ++b) {
                std::uint64_t acc = 0;
                for (std::uint32_t t2 = 0; t2 < q; ++t2) acc += std::uint64_t{X[a * q + t2]} * Z[t2 * c + b];
                prod.coords[a * c + b] = static_cast<std::uint32_t>(acc % m);
              }
            t[std::size_t{x} * B.order() + z] = C.index(prod);
          }
        }
      }
  return GammaSystem(std::move(labels), std::move(comps), std::move(tables));
}

// ---------------------------------------------------------------------------

PathAlgebra build_path_algebra(const PathAlgebraSpec& spec, const Caps& caps) {
  if (spec.modulus < 2) invalid_input("E_MODULUS", "modulus must be >= 2");
  if (spec.truncation < 1) invalid_input("E_TRUNCATION", "truncation must be >= 1");
  const std::size_t n = spec.vertices.size();
  auto find = [&](const std::string& v, std::size_t edge) {
    auto it = std::find(spec.vertices.begin(), spec.vertices.end(), v);
    if (it == spec.vertices.end())
      invalid_input("E_LABEL", "edge " + std::to_string(edge) + " references undeclared vertex '" + v + "'");
    return static_cast<std::size_t>(it - spec.vertices.begin());
  };
  std::vector<std::vector<std::size_t>> out(n);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < spec.edges.size(); ++e) {
    const auto a = find(spec.edges[e].first, e), b = find(spec.edges[e].second, e);
    if (!seen.insert({a, b}).second)
      invalid_input("E_DUPLICATE_EDGE", "edge " + std::to_string(e) + " duplicates an earlier edge");
    out[a].push_back(b);
  }
  for (auto& o : out) std::sort(o.begin(), o.end());

  PathAlgebra pa;
  pa.basis.assign(n * n, {});
  // Walks of length 0..L from every vertex.
  std::vector<Path> frontier;
  for (std::size_t v = 0; v < n; ++v) frontier.push_back({v});
  for (std::uint32_t len = 0;; ++len) {
    for (const auto& p : frontier)
      if (len > 0 || spec.include_trivial_paths) pa.basis[p.front() * n + p.back()].push_back(p);
    if (len == spec.truncation) break;
    std::vector<Path> next;
    for (const auto& p : frontier)
      for (std::size_t w : out[p.back()]) {
        Path q = p;
        q.push_back(w);
        next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  for (auto& b : pa.basis)
    std::sort(b.begin(), b.end(), [](const Path& x, const Path& y) {
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    });

  std::vector<FinAbGroup> comps(n * n);
  for (std::size_t c = 0; c < n * n; ++c)
    comps[c] = FinAbGroup::make(std::vector<std::uint32_t>(pa.basis[c].size(), spec.modulus), caps.max_order);
  check_table_budget(comps, n);

  const std::uint32_t m = spec.modulus;
  std::vector<std::vector<Index>> tables(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const auto& P = pa.basis[i * n + j];
        const auto& Q = pa.basis[j * n + k];
        const auto& R = pa.basis[i * n + k];
        // Basis-level concatenation, -1 when annihilated by truncation.
        std::vector<long> cat(P.size() * Q.size(), -1);
        for (std::size_t s = 0; s < P.size(); ++s)
          for (std::size_t t = 0; t < Q.size(); ++t) {
            if ((P[s].size() - 1) + (Q[t].size() - 1) > spec.truncation) continue;
            Path joined = P[s];
            joined.insert(joined.end(), Q[t].begin() + 1, Q[t].end());
            auto it = std::find(R.begin(), R.end(), joined);
            cat[s * Q.size() + t] = it == R.end() ? -1 : static_cast<long>(it - R.begin());
          }
        const auto& A = comps[i * n + j];
        const auto& B = comps[j * n + k];
        const auto& C = comps[i * n + k];
        auto& tab = tables[(i * n + j) * n + k];
        tab.assign(std::size_t{A.order()} * B.order(), 0);
        for (Index x = 0; x < A.order(); ++x) {
          const auto X = A.element(x).coords;
          for (Index z = 0; z < B.order(); ++z) {
            const auto Z = B.element(z).coords;
            GroupElement prod;
            prod.coords.assign(R.size(), 0);
            for (std::size_t s = 0; s < P.size(); ++s) {
              if (!X[s]) continue;
              for (std::size_t t = 0; t < Q.size(); ++t) {
                const long r = cat[s * Q.size() + t];
                if (r < 0 || !Z[t]) continue;
                prod.coords[r] = static_cast<std::uint32_t>((prod.coords[r] + std::uint64_t{X[s]} * Z[t]) % m);
              }
            }
            tab[std::size_t{x} * B.order() + z] = C.index(prod);
          }
        }
      }
  pa.system = GammaSystem(spec.vertices, std::move(comps), std::move(tables));
  return pa;
}

GammaSystem from_digraph(const PathAlgebraSpec& spec, const Caps& caps) {
  return build_path_algebra(spec, caps).system;
}

// ---------------------------------------------------------------------------

GammaSystem from_tables(const std::vector<std::string>& index_set,
                        const std::vector<ComponentDecl>& components,
                        const std::vector<ProductTableDecl>& tables, const Caps& caps) {
  const std::size_t n = index_set.size();
  auto pos = [&](const std::string& l) {
    auto it = std::find(index_set.begin(), index_set.end(), l);
    if (it == index_set.end()) invalid_input("E_LABEL", "undeclared label '" + l + "'");
    return static_cast<std::size_t>(it - index_set.begin());
  };
  std::vector<FinAbGroup> comps(n * n);
  std::vector<std::uint8_t> declared(n * n, 0);
  for (const auto& c : components) {
    const auto at = pos(c.i) * n + pos(c.j);
    if (declared[at]) invalid_input("E_DUPLICATE", "component (" + c.i + "," + c.j + ") declared twice");
    declared[at] = 1;
    comps[at] = FinAbGroup::make(c.factors, caps.max_order);
  }
  check_table_budget(comps, n);
  std::vector<std::vector<Index>> tabs(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        tabs[(i * n + j) * n + k].assign(std::size_t{comps[i * n + j].order()} * comps[j * n + k].order(), 0);
  std::vector<std::uint8_t> seen(n * n * n, 0);
  for (const auto& t : tables) {
    const auto i = pos(t.i), j = pos(t.j), k = pos(t.k);
    const std::string where = "(" + t.i + "," + t.j + "," + t.k + ")";
    if (seen[(i * n + j) * n + k]++) invalid_input("E_DUPLICATE", "product table " + where + " declared twice");
    const auto& A = comps[i * n + j];
    const auto& B = comps[j * n + k];
    const auto& C = comps[i * n + k];
    if (t.rows.size() != A.order())
      invalid_input("E_TABLE_SHAPE", "product table " + where + " needs " + std::to_string(A.order()) + " rows");
    auto& dst = tabs[(i * n + j) * n + k];
    for (Index x = 0; x < A.order(); ++x) {
      if (t.rows[x].size() != B.order())
        invalid_input("E_TABLE_SHAPE", "product table " + where + " row " + std::to_string(x) + " needs " +
                                           std::to_string(B.order()) + " entries");
      for (Index z = 0; z < B.order(); ++z) {
        const Index v = t.rows[x][z];
        if (v >= C.order())
          invalid_input("E_TABLE_RANGE", "product table " + where + " entry [" + std::to_string(x) + "][" +
                                             std::to_string(z) + "] out of component range");
        dst[std::size_t{x} * B.order() + z] = v;
      }
    }
  }
  return GammaSystem(index_set, std::move(comps), std::move(tabs));
}

}  // namespace gmr
