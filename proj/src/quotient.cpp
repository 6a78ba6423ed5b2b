#include <algorithm>
#include <set>

#include "gmr/gm_ring.hpp"

namespace gmr {

Index GMHom::apply(Index x) const {
  const std::size_t n = source.size();
  Index y = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      y = target.add(y, target.single(i, j, maps[i * n + j][source.entry(x, i, j)]));
  return y;
}

HomCheck verify_gm_hom(const GMHom& psi) {
  HomCheck out;
  const auto& a = psi.source;
  const auto& b = psi.target;
  const std::size_t n = a.size();
  if (a.system().labels() != b.system().labels()) {
    out.witness = "source and target have different index sets";
    return out;
  }
  if (psi.maps.size() != n * n) {
    out.witness = "map needs one table per component";
    return out;
  }
  auto at = [&](std::size_t i, std::size_t j) {
    return "(" + a.system().label(i) + "," + a.system().label(j) + ")";
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& f = psi.maps[i * n + j];
      const auto& src = a.component(i, j);
      const auto& dst = b.component(i, j);
      if (f.size() != src.order() ||
          std::any_of(f.begin(), f.end(), [&](Index v) { return v >= dst.order(); })) {
        out.witness = "component map " + at(i, j) + " is not a total map into the target component";
        return out;
      }
      auto summands = src.generators();
      summands.push_back(0);
      for (Index x = 0; x < src.order(); ++x)
        for (Index e : summands)
          if (f[src.add(x, e)] != dst.add(f[x], f[e])) {
            out.witness = "not additive on " + at(i, j) + ": x=" + a.format(a.single(i, j, x)) +
                          " y=" + a.format(a.single(i, j, e));
            return out;
          }
    }
  // Both sides of psi(xz) = psi(x)psi(z) are biadditive once psi is additive.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (Index x : a.component(i, j).generators())
          for (Index z : a.component(j, k).generators()) {
            const Index lhs = psi.maps[i * n + k][a.system().mul(i, j, k, x, z)];
            const Index rhs = b.system().mul(i, j, k, psi.maps[i * n + j][x], psi.maps[j * n + k][z]);
            if (lhs != rhs) {
              out.witness = "psi(xz) != psi(x)psi(z) for x=" + a.format(a.single(i, j, x)) +
                            " z=" + a.format(a.single(j, k, z));
              return out;
            }
          }

  std::vector<Subgroup> kernel, image;
  out.injective = out.surjective = true;
  for (std::size_t c = 0; c < n * n; ++c) {
    const auto& f = psi.maps[c];
    std::vector<Index> ker, img;
    for (Index x = 0; x < f.size(); ++x) {
      if (f[x] == 0) ker.push_back(x);
      img.push_back(f[x]);
    }
    kernel.push_back(Subgroup::from_members(a.component(c / n, c % n), std::move(ker)));
    image.push_back(Subgroup::from_members(b.component(c / n, c % n), std::move(img)));
    out.injective = out.injective && kernel.back().is_zero();
    out.surjective = out.surjective && image.back().is_whole();
  }
  if (auto chk = is_gm_ideal(a, kernel); !chk.ok) {
    out.witness = "kernel is not a g.m. ideal: " + chk.witness;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (Index x : image[i * n + j].generators())
          for (Index z : image[j * n + k].generators())
            if (!image[i * n + k].contains(b.system().mul(i, j, k, x, z))) {
              out.witness = "image is not closed under multiplication";
              return out;
            }
  out.kernel = GMIdeal::from_components(a, std::move(kernel));
  out.image = std::move(image);
  out.ok = true;
  return out;
}

Subquotient subquotient(const GammaSystem& sys, const std::vector<Subgroup>& h, const std::vector<Subgroup>& k,
                        const Caps& caps) {
  const std::size_t n = sys.size();
  if (h.size() != n * n || k.size() != n * n) invalid_input("E_SHAPE", "subquotient needs one subgroup per component");
  auto at = [&](std::size_t c) { return "(" + sys.label(c / n) + "," + sys.label(c % n) + ")"; };

  Subquotient out;
  out.project.resize(n * n);
  out.rep.resize(n * n);
  std::vector<FinAbGroup> comps(n * n);
  for (std::size_t c = 0; c < n * n; ++c) {
    const auto& g = sys.component(c / n, c % n);
    if (!(h[c].parent() == g) || !(k[c].parent() == g))
      invalid_input("E_COORDINATES", "subgroup for " + at(c) + " lives in the wrong group");
    if (!k[c].is_subset_of(h[c])) invalid_input("E_NOT_IDEAL", "K" + at(c) + " is not contained in H" + at(c));
    if (k[c].is_zero() && h[c].is_whole()) {
      comps[c] = g;
      out.project[c].resize(g.order());
      for (Index x = 0; x < g.order(); ++x) out.project[c][x] = x;
      out.rep[c] = out.project[c];
      continue;
    }
    std::vector<Index> coset(g.order(), kOutside), reps;
    for (Index x : h[c].members()) {
      if (coset[x] != kOutside) continue;
      const auto id = static_cast<Index>(reps.size());
      reps.push_back(x);
      for (Index y : k[c].members()) coset[g.add(x, y)] = id;
    }
    auto pres = present_abelian(static_cast<Index>(reps.size()),
                                [&](Index p, Index q) { return coset[g.add(reps[p], reps[q])]; });
    comps[c] = pres.group;
    out.project[c].assign(g.order(), kOutside);
    for (Index x : h[c].members()) out.project[c][x] = pres.to_group[coset[x]];
    out.rep[c].resize(reps.size());
    for (Index q = 0; q < reps.size(); ++q) out.rep[c][q] = reps[pres.from_group[q]];
  }

  std::vector<std::vector<Index>> tables(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        const std::size_t ij = i * n + j, jl = j * n + l, il = i * n + l;
        auto& t = tables[ij * n + l];
        const Index qa = comps[ij].order(), qb = comps[jl].order();
        t.assign(std::size_t{qa} * qb, 0);
        for (Index p = 0; p < qa; ++p)
          for (Index q = 0; q < qb; ++q) {
            const Index prod = sys.mul(i, j, l, out.rep[ij][p], out.rep[jl][q]);
            const Index cls = out.project[il][prod];
            if (cls == kOutside) invalid_input("E_NOT_SUBRING", "H is not closed under the product into " + at(il));
            t[std::size_t{p} * qb + q] = cls;
          }
        // Representative independence, checked on every pair.
        for (Index x : h[ij].members())
          for (Index z : h[jl].members()) {
            const Index cls = out.project[il][sys.mul(i, j, l, x, z)];
            if (cls == kOutside) invalid_input("E_NOT_SUBRING", "H is not closed under the product into " + at(il));
            if (cls != t[std::size_t{out.project[ij][x]} * qb + out.project[jl][z]])
              invalid_input("E_NOT_IDEAL", "coset product depends on representatives at " + at(ij) + "*" + at(jl) +
                                               ": x=" + std::to_string(x) + " z=" + std::to_string(z));
          }
      }
  (void)caps;
  out.system = GammaSystem(sys.labels(), std::move(comps), std::move(tables));
  return out;
}

namespace {

std::vector<Subgroup> gm_components_or_throw(const GMRing& ring, const GMIdeal& b, const char* name) {
  if (!b.ring().same_as(ring)) invalid_input("E_PRECONDITION", std::string(name) + " belongs to another ring");
  auto comps = b.flavor() == Flavor::GM ? b.components()
                                        : GMIdeal::from_members(ring, b.members(), Flavor::GM).components();
  if (!(GMIdeal::from_components(ring, comps).members() == b.members()))
    invalid_input("E_PRECONDITION", std::string(name) + " does not decompose componentwise");
  if (auto chk = is_gm_ideal(ring, comps); !chk.ok)
    invalid_input("E_PRECONDITION", std::string(name) + " is not a g.m. ideal: " + chk.witness);
  return comps;
}

std::vector<Subgroup> whole_components(const GMRing& ring) {
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < ring.size(); ++i)
    for (std::size_t j = 0; j < ring.size(); ++j) out.push_back(Subgroup::whole(ring.component(i, j)));
  return out;
}

}  // namespace

Quotient quotient(const GMRing& ring, const GMIdeal& b, const Caps& caps) {
  auto comps = gm_components_or_throw(ring, b, "B");
  auto sq = subquotient(ring.system(), whole_components(ring), comps, caps);
  auto q = GMRing::assemble(std::move(sq.system), caps);
  return Quotient{q, GMHom{ring, q, std::move(sq.project)}, std::move(sq.rep)};
}

// ---------------------------------------------------------------------------

namespace {

Check certify_isomorphism(const GMHom& f) {
  auto chk = verify_gm_hom(f);
  if (!chk.ok) return {false, chk.witness};
  if (!chk.injective) return {false, "canonical map is not injective"};
  if (!chk.surjective) return {false, "canonical map is not surjective"};
  return {};
}

std::vector<Subgroup> image_components(const GMHom& f, const std::vector<Subgroup>& comps) {
  const std::size_t n = f.source.size();
  std::vector<Subgroup> out;
  for (std::size_t c = 0; c < n * n; ++c) {
    std::vector<Index> img;
    for (Index x : comps[c].members()) img.push_back(f.maps[c][x]);
    out.push_back(Subgroup::from_members(f.target.component(c / n, c % n), std::move(img)));
  }
  return out;
}

Verdict make(const char* id, const char* claim) { return Verdict{id, claim, VerdictStatus::Pass, "", ""}; }

void fail(Verdict& v, std::string witness) {
  v.status = VerdictStatus::Fail;
  v.witness = std::move(witness);
}

}  // namespace

TheoremReport verify_iso_theorems(const GMRing& ring, const GMIdeal& b, const GMIdeal& c, const GMHom* psi,
                                  const Caps& caps) {
  const auto bc = gm_components_or_throw(ring, b, "B");
  const auto cc = gm_components_or_throw(ring, c, "C");
  const std::size_t n = ring.size();
  TheoremReport report;

  // Quotient construction: well-defined coset product, valid system,
  // projection is a g.m. homomorphism with kernel exactly the ideal.
  Verdict v11 = make("quotient", "A//B is a g.m. ring and A -> A//B has kernel B");
  std::optional<Quotient> qb, qc;
  try {
    qb = quotient(ring, b, caps);
    qc = quotient(ring, c, caps);
    for (const auto* q : {&*qb, &*qc}) {
      if (auto ax = check_gamma_axioms(q->ring.system(), AxiomCheckMode::Generators, caps, 1); !ax.ok())
        fail(v11, "quotient violates " + ax.violations.front().describe(q->ring.system()));
      auto hom = verify_gm_hom(q->projection);
      const auto& ideal = q == &*qb ? b : c;
      if (!hom.ok) fail(v11, "projection: " + hom.witness);
      else if (!hom.surjective) fail(v11, "projection is not surjective");
      else if (!(hom.kernel->members() == ideal.members())) fail(v11, "projection kernel differs from the ideal");
    }
    v11.detail = "|A//B|=" + std::to_string(qb->ring.order()) + " |A//C|=" + std::to_string(qc->ring.order());
  } catch (const Error& e) {
    fail(v11, e.what());
  }
  report.add(v11);
  if (v11.status == VerdictStatus::Fail) return report;

  // First isomorphism theorem.
  const GMHom& map = psi ? *psi : qb->projection;
  Verdict v12 = make("first-iso", "A//ker(psi) ~ psi(A) via x+ker -> psi(x)");
  auto hom = verify_gm_hom(map);
  if (!hom.ok) invalid_input("E_PRECONDITION", "psi is not a g.m. homomorphism: " + hom.witness);
  if (!hom.surjective) invalid_input("E_PRECONDITION", "psi is not surjective");
  {
    auto qk = quotient(ring, *hom.kernel, caps);
    GMHom induced{qk.ring, map.target, {}};
    for (std::size_t cidx = 0; cidx < n * n; ++cidx) {
      std::vector<Index> m;
      for (Index r : qk.representatives[cidx]) m.push_back(map.maps[cidx][r]);
      induced.maps.push_back(std::move(m));
    }
    if (auto chk = certify_isomorphism(induced); !chk.ok) fail(v12, chk.witness);
    v12.detail = "|ker|=" + std::to_string(hom.kernel->order()) + " |image|=" + std::to_string(map.target.order());
  }
  report.add(v12);

  // Second isomorphism theorem: B//(B cap C) -> (B+C)//C, b + (B cap C) -> b + C.
  Verdict v13 = make("second-iso", "(B+C)//C ~ B//(B cap C)");
  try {
    std::vector<Subgroup> sum, meet;
    for (std::size_t k = 0; k < n * n; ++k) {
      sum.push_back(bc[k].join(cc[k]));
      meet.push_back(bc[k].meet(cc[k]));
    }
    auto top = subquotient(ring.system(), sum, cc, caps);
    auto bottom = subquotient(ring.system(), bc, meet, caps);
    auto top_ring = GMRing::assemble(top.system, caps);
    auto bottom_ring = GMRing::assemble(bottom.system, caps);
    GMHom f{bottom_ring, top_ring, {}};
    for (std::size_t k = 0; k < n * n; ++k) {
      std::vector<Index> m;
      for (Index r : bottom.rep[k]) m.push_back(top.project[k][r]);
      f.maps.push_back(std::move(m));
    }
    if (auto chk = certify_isomorphism(f); !chk.ok) fail(v13, chk.witness);
    v13.detail = "order " + std::to_string(top_ring.order());
  } catch (const Error& e) {
    fail(v13, e.what());
  }
  report.add(v13);

  // Third isomorphism theorem: A//B -> (A//C)//(B//C), requires C in B.
  Verdict v14 = make("third-iso", "A//B ~ (A//C)//(B//C) for C in B");
  if (!c.members().is_subset_of(b.members())) {
    v14.status = VerdictStatus::NotApplicable;
    v14.detail = "C is not contained in B";
  } else {
    try {
      auto b_over_c = image_components(qc->projection, bc);
      if (auto chk = is_gm_ideal(qc->ring, b_over_c); !chk.ok) {
        fail(v14, "B//C is not a g.m. ideal of A//C: " + chk.witness);
      } else {
        auto qq = quotient(qc->ring, GMIdeal::from_components(qc->ring, b_over_c), caps);
        GMHom f{qb->ring, qq.ring, {}};
        for (std::size_t k = 0; k < n * n; ++k) {
          std::vector<Index> m;
          for (Index r : qb->representatives[k]) m.push_back(qq.projection.maps[k][qc->projection.maps[k][r]]);
          f.maps.push_back(std::move(m));
        }
        if (auto chk = certify_isomorphism(f); !chk.ok) fail(v14, chk.witness);
        v14.detail = "order " + std::to_string(qb->ring.order());
      }
    } catch (const Error& e) {
      fail(v14, e.what());
    }
  }
  report.add(v14);

  // Ideal correspondence: C -> psi(C) between g.m. ideals over ker(psi)
  // and g.m. ideals of the target.
  Verdict v17 = make("correspondence", "C -> psi(C) is a bijection onto the g.m. ideals of the target");
  {
    auto above = enumerate_ideals(ring, Flavor::GM, caps);
    std::erase_if(above, [&](const GMIdeal& x) { return !hom.kernel->members().is_subset_of(x.members()); });
    auto target_ideals = enumerate_ideals(map.target, Flavor::GM, caps);
    std::set<std::vector<Index>> images, expected;
    for (const auto& t : target_ideals) expected.insert(t.members().members());
    for (const auto& x : above) {
      auto img = image_components(map, x.components());
      if (auto chk = is_gm_ideal(map.target, img); !chk.ok) {
        fail(v17, "psi(C) is not a g.m. ideal: " + chk.witness);
        break;
      }
      if (!images.insert(GMIdeal::from_components(map.target, std::move(img)).members().members()).second) {
        fail(v17, "two ideals above ker(psi) have the same image");
        break;
      }
    }
    if (v17.status == VerdictStatus::Pass && images != expected) fail(v17, "image set differs from the target's ideals");
    v17.detail = std::to_string(above.size()) + " ideals above ker(psi), " + std::to_string(target_ideals.size()) +
                 " target ideals";
  }
  report.add(v17);
  return report;
}

}  // namespace gmr
