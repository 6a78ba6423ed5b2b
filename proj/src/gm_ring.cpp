#include <algorithm>
#include <array>
#include <cctype>

#include "gmr/gm_ring.hpp"

namespace gmr {

const char* to_string(Flavor f) { return f == Flavor::GM ? "gm" : "ring"; }

GMRing GMRing::assemble(GammaSystem system, const Caps& caps) {
  const std::size_t n = system.size();
  if (n > kMaxIndexSet)
    resource_limit("index set larger than " + std::to_string(kMaxIndexSet));
  std::vector<std::uint32_t> factors;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (auto f : system.component(i, j).factors()) factors.push_back(f);
  auto additive = FinAbGroup::make(factors, caps.max_order);

  const auto report = check_gamma_axioms(system, AxiomCheckMode::Generators, caps, 1);
  if (!report.ok())
    violation("E_AXIOM", "not a Gamma_I-system: " + report.violations.front().describe(system));

  auto impl = std::make_shared<Impl>();
  impl->strides.assign(n * n, 1);
  for (std::size_t c = n * n; c-- > 1;)
    impl->strides[c - 1] = impl->strides[c] * system.component(c / n, c % n).order();
  for (std::size_t c = 0; c < n * n; ++c)
    for (Index g : system.component(c / n, c % n).generators()) impl->generators.push_back(g * impl->strides[c]);
  std::sort(impl->generators.begin(), impl->generators.end());
  impl->system = std::move(system);
  impl->additive = std::move(additive);
  return GMRing(std::move(impl));
}

Index GMRing::mul(Index x, Index y) const {
  const std::size_t n = size();
  const auto& s = system();
  const auto& strides = impl_->strides;
  std::array<Index, kMaxIndexSet * kMaxIndexSet> xe{}, ye{};
  for (std::size_t c = 0; c < n * n; ++c) {
    const Index o = s.component(c / n, c % n).order();
    xe[c] = (x / strides[c]) % o;
    ye[c] = (y / strides[c]) % o;
  }
  Index r = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& out = s.component(i, j);
      if (out.order() == 1) continue;
      Index acc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        const Index a = xe[i * n + k], b = ye[k * n + j];
        if (a && b) acc = out.add(acc, s.mul(i, k, j, a, b));
      }
      r += acc * strides[i * n + j];
    }
  return r;
}

GMElement GMRing::element(Index x) const {
  GMElement e;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (Index a = entry(x, i, j)) e.entries[{i, j}] = component(i, j).element(a);
  return e;
}

Index GMRing::index(const GMElement& e) const {
  Index x = 0;
  for (const auto& [pos, value] : e.entries) {
    if (pos.first >= size() || pos.second >= size())
      invalid_input("E_LABEL", "entry position outside the index set");
    x = add(x, single(pos.first, pos.second, component(pos.first, pos.second).index(value)));
  }
  return x;
}

std::string GMRing::format(Index x) const {
  std::string out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) {
      const Index a = entry(x, i, j);
      if (!a) continue;
      if (!out.empty()) out += " + ";
      out += system().label(i) + "," + system().label(j) + ":" + component(i, j).element(a).to_string();
    }
  return out.empty() ? "0" : out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Index GMRing::parse(std::string_view text) const {
  text = trim(text);
  if (text == "0") return 0;
  Index x = 0;
  while (true) {
    const auto plus = text.find('+');
    const std::string_view term = trim(text.substr(0, plus));
    const auto comma = term.find(',');
    const auto colon = term.find(':');
    if (comma == std::string_view::npos || colon == std::string_view::npos || colon < comma)
      invalid_input("E_ELEMENT_SYNTAX", "element '" + std::string(term) + "' is not of the form i,j:(c1,...)");
    const std::size_t i = system().label_index(trim(term.substr(0, comma)));
    const std::size_t j = system().label_index(trim(term.substr(comma + 1, colon - comma - 1)));
    std::string_view coords = trim(term.substr(colon + 1));
    if (coords.size() < 2 || coords.front() != '(' || coords.back() != ')')
      invalid_input("E_ELEMENT_SYNTAX", "coordinates of '" + std::string(term) + "' must be parenthesized");
    coords = trim(coords.substr(1, coords.size() - 2));
    GroupElement e;
    while (!coords.empty()) {
      const auto sep = coords.find(',');
      const auto tok = trim(coords.substr(0, sep));
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
          tok.size() > 9)
        invalid_input("E_COORDINATES", "malformed coordinate in '" + std::string(term) + "'");
      e.coords.push_back(static_cast<std::uint32_t>(std::stoul(std::string(tok))));
      if (sep == std::string_view::npos) break;
      coords.remove_prefix(sep + 1);
    }
    x = add(x, single(i, j, component(i, j).index(e)));
    if (plus == std::string_view::npos) break;
    text.remove_prefix(plus + 1);
  }
  return x;
}

Check ring_self_test(const GMRing& ring) {
  const Index order = ring.order();
  auto fail = [&](const std::string& law, Index x, Index y, Index z) {
    return Check{false, law + " fails at x=" + ring.format(x) + " y=" + ring.format(y) + " z=" + ring.format(z)};
  };
  if (order <= 64) {
    for (Index x = 0; x < order; ++x)
      for (Index y = 0; y < order; ++y) {
        const Index xy = ring.mul(x, y);
        for (Index z = 0; z < order; ++z) {
          if (ring.mul(xy, z) != ring.mul(x, ring.mul(y, z))) return fail("associativity", x, y, z);
          if (ring.mul(x, ring.add(y, z)) != ring.add(xy, ring.mul(x, z))) return fail("left distributivity", x, y, z);
          if (ring.mul(ring.add(x, y), z) != ring.add(ring.mul(x, z), ring.mul(y, z)))
            return fail("right distributivity", x, y, z);
        }
      }
    return {};
  }
  const auto& gens = ring.generators();
  for (Index x : gens)
    for (Index e : gens)
      for (Index f : gens) {
        if (ring.mul(x, ring.add(e, f)) != ring.add(ring.mul(x, e), ring.mul(x, f)))
          return fail("left distributivity", x, e, f);
        if (ring.mul(ring.add(e, f), x) != ring.add(ring.mul(e, x), ring.mul(f, x)))
          return fail("right distributivity", e, f, x);
      }
  for (Index x : gens)
    for (Index y : gens)
      for (Index z : gens)
        if (ring.mul(ring.mul(x, y), z) != ring.mul(x, ring.mul(y, z))) return fail("associativity", x, y, z);
  return {};
}

}  // namespace gmr
