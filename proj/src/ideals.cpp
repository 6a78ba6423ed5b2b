#include <algorithm>
#include <set>

#include "gmr/gm_ring.hpp"

namespace gmr {

namespace {

std::string where(const GMRing& r, std::size_t i, std::size_t j) {
  return "(" + r.system().label(i) + "," + r.system().label(j) + ")";
}

Subgroup direct_sum(const GMRing& ring, const std::vector<Subgroup>& comps) {
  SpanBuilder span(ring.additive());
  const std::size_t n = ring.size();
  for (std::size_t c = 0; c < n * n; ++c)
    for (Index g : comps[c].generators()) span.add(ring.single(c / n, c % n, g));
  return std::move(span).finish();
}

std::vector<Subgroup> projections(const GMRing& ring, const Subgroup& members) {
  const std::size_t n = ring.size();
  std::vector<Subgroup> comps;
  comps.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Index> vals;
      for (Index x : members.members()) vals.push_back(ring.entry(x, i, j));
      comps.push_back(Subgroup::from_members(ring.component(i, j), std::move(vals)));
    }
  return comps;
}

}  // namespace

GMIdeal GMIdeal::from_components(const GMRing& ring, std::vector<Subgroup> components) {
  if (components.size() != ring.size() * ring.size())
    invalid_input("E_SHAPE", "ideal needs one subgroup per component");
  GMIdeal out(ring, Flavor::GM);
  out.members_ = direct_sum(ring, components);
  out.components_ = std::move(components);
  return out;
}

GMIdeal GMIdeal::from_members(const GMRing& ring, Subgroup members, Flavor flavor) {
  GMIdeal out(ring, flavor);
  if (flavor == Flavor::GM) out.components_ = projections(ring, members);
  out.members_ = std::move(members);
  return out;
}

Check is_gm_ideal(const GMRing& ring, const std::vector<Subgroup>& cand) {
  const std::size_t n = ring.size();
  if (cand.size() != n * n) return {false, "candidate has wrong number of components"};
  for (std::size_t c = 0; c < n * n; ++c)
    if (!(cand[c].parent() == ring.component(c / n, c % n)))
      return {false, "candidate component " + where(ring, c / n, c % n) + " lives in the wrong group"};
  const auto& s = ring.system();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const auto& target = cand[i * n + k];
        for (Index b : cand[i * n + j].generators())
          for (Index a : ring.component(j, k).generators()) {
            const Index p = s.mul(i, j, k, b, a);
            if (!target.contains(p))
              return {false, "B" + where(ring, i, j) + "*A" + where(ring, j, k) + " escapes: b=" +
                                 ring.format(ring.single(i, j, b)) + " a=" + ring.format(ring.single(j, k, a)) +
                                 " product=" + ring.format(ring.single(i, k, p)) + " not in B" + where(ring, i, k)};
          }
        for (Index a : ring.component(i, j).generators())
          for (Index b : cand[j * n + k].generators()) {
            const Index p = s.mul(i, j, k, a, b);
            if (!target.contains(p))
              return {false, "A" + where(ring, i, j) + "*B" + where(ring, j, k) + " escapes: a=" +
                                 ring.format(ring.single(i, j, a)) + " b=" + ring.format(ring.single(j, k, b)) +
                                 " product=" + ring.format(ring.single(i, k, p)) + " not in B" + where(ring, i, k)};
          }
      }
  return {};
}

Check is_ring_ideal(const GMRing& ring, const Subgroup& members) {
  if (!(members.parent() == ring.additive())) return {false, "member set lives in the wrong group"};
  for (Index b : members.generators())
    for (Index g : ring.generators()) {
      if (Index p = ring.mul(g, b); !members.contains(p))
        return {false, "a*b escapes: a=" + ring.format(g) + " b=" + ring.format(b) + " product=" + ring.format(p)};
      if (Index p = ring.mul(b, g); !members.contains(p))
        return {false, "b*a escapes: b=" + ring.format(b) + " a=" + ring.format(g) + " product=" + ring.format(p)};
    }
  return {};
}

GMIdeal zero_ideal(const GMRing& ring, Flavor flavor) {
  return GMIdeal::from_members(ring, Subgroup::zero(ring.additive()), flavor);
}

GMIdeal whole_ideal(const GMRing& ring, Flavor flavor) {
  return GMIdeal::from_members(ring, Subgroup::whole(ring.additive()), flavor);
}

GMIdeal gm_ideal_closure(const GMRing& ring, std::span<const Index> seeds, Flavor flavor, const Caps& caps) {
  if (ring.order() > caps.max_order) resource_limit("ring order exceeds cap " + std::to_string(caps.max_order));
  for (Index x : seeds)
    if (x >= ring.order()) invalid_input("E_COORDINATES", "seed outside the ring");

  if (flavor == Flavor::Ring) {
    auto members = close_subgroup(ring.additive(), seeds, [&](Index x, std::vector<Index>& out) {
      for (Index g : ring.generators()) {
        out.push_back(ring.mul(g, x));
        out.push_back(ring.mul(x, g));
      }
    });
    return GMIdeal::from_members(ring, std::move(members), Flavor::Ring);
  }

  // Componentwise fixpoint: each seed entry is scattered to its component;
  // accepted generators of B_ij push B_ij*A_jk and A_li*B_ij products.
  const std::size_t n = ring.size();
  const auto& s = ring.system();
  std::vector<SpanBuilder> spans;
  for (std::size_t c = 0; c < n * n; ++c) spans.emplace_back(ring.component(c / n, c % n));
  std::vector<std::pair<std::size_t, Index>> queue;
  for (Index x : seeds)
    for (std::size_t c = 0; c < n * n; ++c)
      if (Index a = ring.entry(x, c / n, c % n)) queue.emplace_back(c, a);
  while (!queue.empty()) {
    auto [c, v] = queue.back();
    queue.pop_back();
    if (!spans[c].add(v)) continue;
    const std::size_t i = c / n, j = c % n;
    for (std::size_t k = 0; k < n; ++k)
      for (Index a : ring.component(j, k).generators()) queue.emplace_back(i * n + k, s.mul(i, j, k, v, a));
    for (std::size_t l = 0; l < n; ++l)
      for (Index a : ring.component(l, i).generators()) queue.emplace_back(l * n + j, s.mul(l, i, j, a, v));
  }
  std::vector<Subgroup> comps;
  for (auto& sp : spans) comps.push_back(std::move(sp).finish());
  return GMIdeal::from_components(ring, std::move(comps));
}

GMIdeal seed_ideal_from_component(const GMRing& ring, std::size_t s, std::size_t t, const Subgroup& b_st) {
  const std::size_t n = ring.size();
  if (s >= n || t >= n) invalid_input("E_LABEL", "component position outside the index set");
  if (!(b_st.parent() == ring.component(s, t)))
    invalid_input("E_COORDINATES", "seed subgroup does not live in A" + where(ring, s, t));
  const auto& sys = ring.system();
  const auto bg = b_st.generators();
  std::vector<Subgroup> comps;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SpanBuilder span(ring.component(i, j));
      for (Index a : ring.component(i, s).generators())
        for (Index b : bg) {
          const Index ab = sys.mul(i, s, t, a, b);
          for (Index c : ring.component(t, j).generators()) span.add(sys.mul(i, t, j, ab, c));
        }
      comps.push_back(std::move(span).finish());
    }
  if (auto chk = is_gm_ideal(ring, comps); !chk.ok)
    violation("E_SEEDED_IDEAL", "A_is B_st A_tj is not a g.m. ideal: " + chk.witness);
  return GMIdeal::from_components(ring, std::move(comps));
}

GMIdeal combine_ideals(std::span<const GMIdeal> ideals, CombineMode mode) {
  if (ideals.empty()) invalid_input("E_EMPTY", "combine_ideals needs at least one ideal");
  const auto& ring = ideals.front().ring();
  const Flavor flavor = ideals.front().flavor();
  for (const auto& b : ideals)
    if (!b.ring().same_as(ring) || b.flavor() != flavor)
      invalid_input("E_PARENT", "ideals must share parent ring and flavor");

  auto fold = [&](const Subgroup& a, const Subgroup& b) {
    return mode == CombineMode::Sum ? a.join(b) : a.meet(b);
  };
  GMIdeal out = ideals.front();
  if (flavor == Flavor::GM) {
    auto comps = ideals.front().components();
    for (std::size_t t = 1; t < ideals.size(); ++t)
      for (std::size_t c = 0; c < comps.size(); ++c) comps[c] = fold(comps[c], ideals[t].components()[c]);
    if (auto chk = is_gm_ideal(ring, comps); !chk.ok)
      violation("E_COMBINE", std::string("combined set is not a g.m. ideal: ") + chk.witness);
    out = GMIdeal::from_components(ring, std::move(comps));
  } else {
    Subgroup m = ideals.front().members();
    for (std::size_t t = 1; t < ideals.size(); ++t) m = fold(m, ideals[t].members());
    if (auto chk = is_ring_ideal(ring, m); !chk.ok)
      violation("E_COMBINE", std::string("combined set is not an ideal: ") + chk.witness);
    out = GMIdeal::from_members(ring, std::move(m), Flavor::Ring);
  }
  return out;
}

std::vector<GMIdeal> enumerate_ideals(const GMRing& ring, Flavor flavor, const Caps& caps) {
  if (ring.order() > caps.max_lattice)
    resource_limit("ring order " + std::to_string(ring.order()) + " exceeds lattice cap " +
                   std::to_string(caps.max_lattice));
  const std::uint64_t lattice_cap = caps.max_lattice * caps.max_lattice;

  std::set<std::vector<Index>> principal_keys;
  std::vector<Subgroup> principals;
  for (Index a = 1; a < ring.order(); ++a) {
    const Index seed[] = {a};
    auto p = gm_ideal_closure(ring, seed, flavor, caps).members();
    if (principal_keys.insert(p.members()).second) principals.push_back(std::move(p));
  }
  std::vector<std::vector<Index>> principal_gens;
  for (const auto& p : principals) principal_gens.push_back(p.generators());

  // Every ideal is the sum of the principal ideals of its members.
  std::set<std::vector<Index>> seen;
  std::vector<Subgroup> lattice;
  auto push = [&](Subgroup s) {
    if (!seen.insert(s.members()).second) return;
    if (seen.size() > lattice_cap) resource_limit("ideal lattice exceeds " + std::to_string(lattice_cap) + " entries");
    lattice.push_back(std::move(s));
  };
  push(Subgroup::zero(ring.additive()));
  for (const auto& p : principals) push(p);
  for (std::size_t w = 0; w < lattice.size(); ++w) {
    for (std::size_t p = 0; p < principals.size(); ++p) {
      if (principals[p].is_subset_of(lattice[w])) continue;
      SpanBuilder span(lattice[w]);
      for (Index g : principal_gens[p]) span.add(g);
      push(std::move(span).finish());
    }
  }
  std::sort(lattice.begin(), lattice.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.members() < b.members();
  });
  std::vector<GMIdeal> out;
  out.reserve(lattice.size());
  for (auto& m : lattice) out.push_back(GMIdeal::from_members(ring, std::move(m), flavor));
  return out;
}

GMIdeal annihilator_star(const GMRing& ring) {
  // Literal reading: x with xA = Ax = 0. Testing against additive
  // generators of A is equivalent by biadditivity.
  std::vector<Index> ann;
  for (Index x = 0; x < ring.order(); ++x) {
    bool kills = true;
    for (Index g : ring.generators())
      if (ring.mul(x, g) != 0 || ring.mul(g, x) != 0) {
        kills = false;
        break;
      }
    if (kills) ann.push_back(x);
  }
  auto ideal = GMIdeal::from_members(ring, Subgroup::from_members(ring.additive(), std::move(ann)), Flavor::GM);
  if (!(direct_sum(ring, ideal.components()) == ideal.members()))
    violation("E_ANNIHILATOR", "B* does not decompose componentwise");
  if (auto chk = is_gm_ideal(ring, ideal.components()); !chk.ok)
    violation("E_ANNIHILATOR", "B* is not a g.m. ideal: " + chk.witness);
  return ideal;
}

GMIdeal annihilator_of(const GMRing& ring, const GMIdeal& b) {
  if (!b.ring().same_as(ring)) invalid_input("E_PARENT", "ideal belongs to another ring");
  const auto gens = b.members().generators();
  std::vector<Index> ann;
  for (Index x = 0; x < ring.order(); ++x) {
    bool kills = true;
    for (Index g : gens)
      if (ring.mul(x, g) != 0 || ring.mul(g, x) != 0) {
        kills = false;
        break;
      }
    if (kills) ann.push_back(x);
  }
  auto members = Subgroup::from_members(ring.additive(), std::move(ann));
  if (auto chk = is_ring_ideal(ring, members); !chk.ok)
    violation("E_ANNIHILATOR", "relative annihilator is not an ideal: " + chk.witness);
  auto ideal = GMIdeal::from_members(ring, std::move(members), b.flavor());
  if (b.flavor() == Flavor::GM && !(direct_sum(ring, ideal.components()) == ideal.members()))
    violation("E_ANNIHILATOR", "relative annihilator does not decompose componentwise");
  return ideal;
}

Subgroup ideal_product(const GMRing& ring, const Subgroup& b, const Subgroup& c) {
  SpanBuilder span(ring.additive());
  const auto cg = c.generators();
  for (Index x : b.generators())
    for (Index y : cg) span.add(ring.mul(x, y));
  return std::move(span).finish();
}

}  // namespace gmr
