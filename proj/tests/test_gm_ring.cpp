#include <gtest/gtest.h>

#include <set>

#include "gmr/gm_ring.hpp"
#include "oracles.hpp"

using namespace gmr;

namespace {

GMRing full2(std::uint32_t mod) { return GMRing::assemble(from_matrix_homs({{{"1", 1}, {"2", 1}}, mod, {}})); }
GMRing upper(std::uint32_t mod) {
  return GMRing::assemble(from_matrix_homs({{{"1", 1}, {"2", 1}}, mod, {{"2", "1"}}}));
}
GMRing zn(std::uint32_t n) { return GMRing::assemble(oracle::zn_system(n)); }

std::vector<std::uint32_t> as_matrix(const GMRing& r, Index x) {
  return {r.entry(x, 0, 0), r.entry(x, 0, 1), r.entry(x, 1, 0), r.entry(x, 1, 1)};
}

std::vector<Index> members_of(std::initializer_list<Index> v) { return v; }

}  // namespace

TEST(Assemble, FullMatrixRingMatchesDirectProducts) {
  for (std::uint32_t m : {2u, 3u}) {
    auto r = full2(m);
    ASSERT_EQ(r.order(), m * m * m * m);
    for (Index a = 0; a < r.order(); ++a)
      for (Index b = 0; b < r.order(); ++b) {
        auto x = as_matrix(r, a), y = as_matrix(r, b), z = as_matrix(r, r.mul(a, b));
        EXPECT_EQ(z[0], (x[0] * y[0] + x[1] * y[2]) % m);
        EXPECT_EQ(z[1], (x[0] * y[1] + x[1] * y[3]) % m);
        EXPECT_EQ(z[2], (x[2] * y[0] + x[3] * y[2]) % m);
        EXPECT_EQ(z[3], (x[2] * y[1] + x[3] * y[3]) % m);
      }
  }
}

TEST(Assemble, SingleEntries) {
  auto r = full2(3);
  for (Index a = 0; a < 3; ++a)
    for (Index b = 0; b < 3; ++b) {
      EXPECT_EQ(r.mul(r.single(0, 1, a), r.single(1, 0, b)), r.single(0, 0, (a * b) % 3));
      EXPECT_EQ(r.mul(r.single(0, 1, a), r.single(0, 1, b)), 0u);
    }
}

TEST(Assemble, SingleIndexKeepsTable) {
  auto r = zn(6);
  for (Index a = 0; a < 6; ++a)
    for (Index b = 0; b < 6; ++b) EXPECT_EQ(r.mul(a, b), (a * b) % 6);
}

TEST(Assemble, RejectsBrokenSystem) {
  std::vector<std::vector<Index>> rows{{0, 0}, {0, 0}};
  rows[1][1] = 1;
  rows[0][1] = 1;
  auto s = from_tables({"1"}, {{"1", "1", {2}}}, {{"1", "1", "1", rows}});
  EXPECT_THROW(GMRing::assemble(s), Error);
}

TEST(Assemble, SelfTest) {
  for (auto r : {full2(2), upper(4), zn(12)}) EXPECT_TRUE(ring_self_test(r).ok);
  auto big = GMRing::assemble(from_matrix_homs({{{"1", 2}, {"2", 1}}, 2, {}}));
  EXPECT_TRUE(ring_self_test(big).ok);
}

TEST(Elements, FormatParse) {
  auto r = full2(3);
  for (Index x = 0; x < r.order(); ++x) EXPECT_EQ(r.parse(r.format(x)), x);
  EXPECT_EQ(r.format(0), "0");
  EXPECT_EQ(r.format(r.single(0, 1, 2)), "1,2:(2)");
  EXPECT_EQ(r.parse("1,2:(1) + 1,2:(1)"), r.single(0, 1, 2));
  EXPECT_THROW(r.parse("1,3:(1)"), Error);
  EXPECT_THROW(r.parse("1,2:(5)"), Error);
  EXPECT_THROW(r.parse("1,2:(1"), Error);
  EXPECT_THROW(r.parse("1,2:(1,1)"), Error);
  auto e = r.element(r.parse("2,2:(1) + 1,1:(2)"));
  EXPECT_EQ(e.entries.size(), 2u);
  EXPECT_EQ(r.index(e), r.parse("1,1:(2) + 2,2:(1)"));
}

TEST(Ideals, GmIdealCheck) {
  auto r = upper(2);
  const std::size_t n = 2;
  std::vector<Subgroup> strict;
  for (std::size_t c = 0; c < n * n; ++c)
    strict.push_back(c == 1 ? Subgroup::whole(r.component(0, 1)) : Subgroup::zero(r.component(c / n, c % n)));
  EXPECT_TRUE(is_gm_ideal(r, strict).ok);
  std::vector<Subgroup> diag11 = strict;
  diag11[1] = Subgroup::zero(r.component(0, 1));
  diag11[0] = Subgroup::whole(r.component(0, 0));
  auto chk = is_gm_ideal(r, diag11);
  EXPECT_FALSE(chk.ok);
  EXPECT_FALSE(chk.witness.empty());
  EXPECT_TRUE(is_gm_ideal(r, zero_ideal(r, Flavor::GM).components()).ok);
  EXPECT_TRUE(is_gm_ideal(r, whole_ideal(r, Flavor::GM).components()).ok);
}

TEST(Ideals, Closure) {
  auto z4 = zn(4);
  EXPECT_TRUE(gm_ideal_closure(z4, {}, Flavor::GM).is_zero());
  const Index two[] = {2};
  EXPECT_EQ(gm_ideal_closure(z4, two, Flavor::GM).members().members(), members_of({0, 2}));
  auto m = full2(2);
  const Index e12[] = {m.single(0, 1, 1)};
  EXPECT_TRUE(gm_ideal_closure(m, e12, Flavor::GM).is_whole());
  EXPECT_TRUE(gm_ideal_closure(m, e12, Flavor::Ring).is_whole());
}

TEST(Ideals, SeededIdeal) {
  auto m = full2(2);
  EXPECT_TRUE(seed_ideal_from_component(m, 0, 1, Subgroup::zero(m.component(0, 1))).is_zero());
  EXPECT_TRUE(seed_ideal_from_component(m, 0, 1, Subgroup::whole(m.component(0, 1))).is_whole());
  auto u = upper(2);
  auto d = seed_ideal_from_component(u, 0, 1, Subgroup::whole(u.component(0, 1)));
  EXPECT_EQ(d.members().members(), members_of({0, u.single(0, 1, 1)}));
  // Every seed over every corpus-like ring is a g.m. ideal.
  for (auto r : {m, u, upper(3), zn(12)}) {
    const std::size_t n = r.size();
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) {
        const auto& g = r.component(s, t);
        for (Index a = 0; a < g.order(); ++a) {
          const Index one[] = {a};
          auto ideal = seed_ideal_from_component(r, s, t, Subgroup::generated_by(g, one));
          EXPECT_TRUE(is_gm_ideal(r, ideal.components()).ok);
        }
      }
  }
}

TEST(Ideals, Combine) {
  auto r = zn(12);
  const Index six[] = {6}, four[] = {4};
  auto a = gm_ideal_closure(r, six, Flavor::GM), b = gm_ideal_closure(r, four, Flavor::GM);
  std::vector<GMIdeal> both{a, b};
  EXPECT_EQ(combine_ideals(both, CombineMode::Sum).members().members(), members_of({0, 2, 4, 6, 8, 10}));
  EXPECT_TRUE(combine_ideals(both, CombineMode::Intersection).is_zero());
  std::vector<GMIdeal> with_zero{a, zero_ideal(r, Flavor::GM)}, with_whole{a, whole_ideal(r, Flavor::GM)};
  EXPECT_EQ(combine_ideals(with_zero, CombineMode::Sum), a);
  EXPECT_EQ(combine_ideals(with_whole, CombineMode::Intersection), a);
}

TEST(Ideals, EnumerationMatchesBruteForce) {
  EXPECT_EQ(enumerate_ideals(zn(4), Flavor::GM).size(), 3u);
  EXPECT_EQ(enumerate_ideals(GMRing::assemble(oracle::zero_system({2})), Flavor::Ring).size(), 2u);
  EXPECT_EQ(enumerate_ideals(full2(2), Flavor::GM).size(), 2u);
  for (auto r : {zn(12), upper(2), full2(2), GMRing::assemble(oracle::zero_system({2, 2})),
                 GMRing::assemble(from_matrix_homs({{{"1", 1}, {"2", 1}}, 2, {{"1", "2"}, {"2", "1"}}}))}) {
    auto t = oracle::tables_of(r);
    auto brute = oracle::all_ideals(t);
    auto ring = enumerate_ideals(r, Flavor::Ring);
    ASSERT_EQ(ring.size(), brute.size());
    for (std::size_t k = 0; k < brute.size(); ++k) EXPECT_EQ(ring[k].members().members(), brute[k]);
    // g.m. ideals are exactly the ring ideals that decompose componentwise.
    std::size_t decomposing = 0;
    for (const auto& b : ring) {
      auto gm = GMIdeal::from_members(r, b.members(), Flavor::GM);
      decomposing += GMIdeal::from_components(r, gm.components()).members() == b.members();
    }
    auto gms = enumerate_ideals(r, Flavor::GM);
    EXPECT_EQ(gms.size(), decomposing);
    for (const auto& g : gms) EXPECT_TRUE(is_ring_ideal(r, g.members()).ok);
  }
}

TEST(Ideals, RingIdealNotComponentwise) {
  // In the zero ring on Z_2 E11 + Z_2 E22 the diagonal {0, E11 + E22} is a
  // ring ideal with no componentwise decomposition.
  bool found = false;
  for (auto r : {full2(2), upper(2), upper(4),
                 GMRing::assemble(from_matrix_homs({{{"1", 1}, {"2", 1}}, 2, {{"1", "2"}, {"2", "1"}}})),
                 GMRing::assemble(from_tables({"1", "2"}, {{"1", "1", {2}}, {"2", "2", {2}}}, {}))}) {
    for (const auto& b : enumerate_ideals(r, Flavor::Ring)) {
      auto gm = GMIdeal::from_members(r, b.members(), Flavor::GM);
      if (GMIdeal::from_components(r, gm.components()).members() != b.members()) found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Ideals, LatticeClosedUnderCombine) {
  for (auto r : {zn(12), upper(2)}) {
    auto ideals = enumerate_ideals(r, Flavor::GM);
    std::set<std::vector<Index>> all;
    for (const auto& b : ideals) all.insert(b.members().members());
    for (const auto& a : ideals)
      for (const auto& b : ideals) {
        std::vector<GMIdeal> pair{a, b};
        EXPECT_TRUE(all.count(combine_ideals(pair, CombineMode::Sum).members().members()));
        EXPECT_TRUE(all.count(combine_ideals(pair, CombineMode::Intersection).members().members()));
      }
  }
}

TEST(Ideals, Annihilator) {
  auto zero = GMRing::assemble(oracle::zero_system({2, 2}));
  EXPECT_TRUE(annihilator_star(zero).is_whole());
  EXPECT_TRUE(annihilator_star(full2(2)).is_zero());
  // Z_2 (1,1) plus a zero-ring Z_2 at (2,2).
  auto mixed = GMRing::assemble(from_tables({"1", "2"}, {{"1", "1", {2}}, {"2", "2", {2}}},
                                            {{"1", "1", "1", {{0, 0}, {0, 1}}}}));
  auto ann = annihilator_star(mixed);
  EXPECT_TRUE(ann.contains(mixed.single(1, 1, 1)));
  EXPECT_FALSE(ann.contains(mixed.single(0, 0, 1)));
  auto rel = annihilator_of(mixed, whole_ideal(mixed, Flavor::GM));
  EXPECT_EQ(rel.members(), ann.members());
}

TEST(Ideals, Product) {
  auto r = zn(12);
  const Index two[] = {2};
  auto b = gm_ideal_closure(r, two, Flavor::Ring).members();
  EXPECT_EQ(ideal_product(r, b, b).members(), members_of({0, 4, 8}));
}
