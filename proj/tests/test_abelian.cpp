#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gmr/abelian.hpp"

using namespace gmr;

TEST(FinAbGroup, IndexRoundTripAndOrder) {
  auto g = FinAbGroup::make({2, 4, 3});
  EXPECT_EQ(g.order(), 24u);
  for (Index a = 0; a < g.order(); ++a) EXPECT_EQ(g.index(g.element(a)), a);
  EXPECT_EQ(g.element(5).to_string(), "(0,1,2)");
  EXPECT_THROW(g.index(GroupElement{{2, 0, 0}}), Error);
  EXPECT_THROW(g.index(GroupElement{{0, 0}}), Error);
}

TEST(FinAbGroup, IndexOrderIsLexicographic) {
  auto g = FinAbGroup::make({3, 2, 5});
  for (Index a = 0; a + 1 < g.order(); ++a) EXPECT_LT(g.element(a), g.element(a + 1));
}

TEST(FinAbGroup, ArithmeticMatchesCoordinates) {
  auto g = FinAbGroup::make({4, 6});
  for (Index a = 0; a < g.order(); ++a)
    for (Index b = 0; b < g.order(); ++b) {
      auto x = g.element(a), y = g.element(b);
      GroupElement s{{(x.coords[0] + y.coords[0]) % 4, (x.coords[1] + y.coords[1]) % 6}};
      EXPECT_EQ(g.add(a, b), g.index(s));
    }
  for (Index a = 0; a < g.order(); ++a) {
    EXPECT_EQ(g.add(a, g.neg(a)), 0u);
    EXPECT_EQ(g.scale(a, g.element_order(a)), 0u);
    EXPECT_EQ(g.scale(a, -1), g.neg(a));
  }
  EXPECT_EQ(g.element_order(g.index(GroupElement{{1, 2}})), 12u);
}

TEST(FinAbGroup, Caps) {
  EXPECT_THROW(FinAbGroup::make({256, 257}), Error);
  EXPECT_THROW(FinAbGroup::make({0}), Error);
  EXPECT_EQ(FinAbGroup::make({1, 1}).order(), 1u);
  EXPECT_TRUE(FinAbGroup::make({1}).generators().empty());
}

namespace {

// Subgroup count by subset enumeration (small groups only).
std::size_t brute_subgroup_count(const FinAbGroup& g) {
  std::size_t count = 0;
  const Index rest = g.order() - 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rest); ++mask) {
    std::vector<Index> s{0};
    for (Index k = 0; k < rest; ++k)
      if (mask >> k & 1) s.push_back(k + 1);
    bool ok = true;
    for (Index a : s)
      for (Index b : s)
        if (!std::binary_search(s.begin(), s.end(), g.add(a, b))) ok = false;
    count += ok;
  }
  return count;
}

std::size_t cyclic_span_count(const FinAbGroup& g) {
  std::set<std::vector<Index>> all;
  std::vector<Subgroup> frontier{Subgroup::zero(g)};
  all.insert(frontier[0].members());
  while (!frontier.empty()) {
    auto h = frontier.back();
    frontier.pop_back();
    for (Index a = 0; a < g.order(); ++a) {
      const Index one[] = {a};
      auto k = h.join(Subgroup::generated_by(g, one));
      if (all.insert(k.members()).second) frontier.push_back(k);
    }
  }
  return all.size();
}

}  // namespace

TEST(Subgroup, LatticeSizesMatchBruteForce) {
  for (auto f : std::vector<std::vector<std::uint32_t>>{{4}, {2, 2}, {2, 4}, {6}, {2, 2, 2}, {3, 3}, {12}}) {
    auto g = FinAbGroup::make(f);
    EXPECT_EQ(cyclic_span_count(g), brute_subgroup_count(g));
  }
  EXPECT_EQ(brute_subgroup_count(FinAbGroup::make({2, 2})), 5u);
  EXPECT_EQ(brute_subgroup_count(FinAbGroup::make({2, 4})), 8u);
}

TEST(Subgroup, FromMembersValidates) {
  auto g = FinAbGroup::make({4});
  EXPECT_NO_THROW(Subgroup::from_members(g, {2, 0}));
  EXPECT_THROW(Subgroup::from_members(g, {0, 1}), Error);
  EXPECT_THROW(Subgroup::from_members(g, {0, 7}), Error);
}

TEST(Subgroup, JoinMeetAndGenerators) {
  auto g = FinAbGroup::make({12});
  const Index six[] = {6}, four[] = {4};
  auto a = Subgroup::generated_by(g, six), b = Subgroup::generated_by(g, four);
  EXPECT_EQ(a.join(b).members(), (std::vector<Index>{0, 2, 4, 6, 8, 10}));
  EXPECT_EQ(a.meet(b).members(), (std::vector<Index>{0}));
  EXPECT_TRUE(a.is_subset_of(a.join(b)));
  auto j = a.join(b);
  auto gens = j.generators();
  EXPECT_EQ(Subgroup::generated_by(g, gens), j);
}

TEST(Subgroup, RandomSpansAreClosed) {
  std::mt19937 rng(7);
  auto g = FinAbGroup::make({2, 4, 6});
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Index> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(rng() % g.order());
    auto h = Subgroup::generated_by(g, gens);
    for (Index a : h.members()) {
      EXPECT_TRUE(h.contains(g.neg(a)));
      for (Index b : h.members()) ASSERT_TRUE(h.contains(g.add(a, b)));
    }
    EXPECT_EQ(g.order() % h.order(), 0u);
    for (Index x : gens) EXPECT_TRUE(h.contains(x));
  }
}

TEST(SubgroupClosure, EndomorphismClosure) {
  auto g = FinAbGroup::make({8});
  Endomorphism times2(8);
  for (Index a = 0; a < 8; ++a) times2[a] = (2 * a) % 8;
  EXPECT_TRUE(is_additive(g, times2));
  GroupElement seed{{2}};
  auto h = subgroup_closure(g, std::span(&seed, 1), std::span(&times2, 1));
  EXPECT_EQ(h.members(), (std::vector<Index>{0, 2, 4, 6}));
  Endomorphism bad(8, 1);
  EXPECT_FALSE(is_additive(g, bad));
  EXPECT_THROW(subgroup_closure(g, std::span(&seed, 1), std::span(&bad, 1)), Error);
}

TEST(PresentAbelian, RecognisesProducts) {
  // Z_2 x Z_6 given abstractly on ids 0..11.
  auto h = FinAbGroup::make({2, 6});
  auto p = present_abelian(12, [&](Index a, Index b) { return h.add(a, b); });
  EXPECT_EQ(p.group.order(), 12u);
  EXPECT_EQ(p.group.factors(), (std::vector<std::uint32_t>{2, 2, 3}));
  for (Index a = 0; a < 12; ++a) {
    EXPECT_EQ(p.from_group[p.to_group[a]], a);
    for (Index b = 0; b < 12; ++b) EXPECT_EQ(p.to_group[h.add(a, b)], p.group.add(p.to_group[a], p.to_group[b]));
  }
}

TEST(PresentAbelian, CyclicOfPrimePower) {
  auto p = present_abelian(9, [](Index a, Index b) { return (a + b) % 9; });
  EXPECT_EQ(p.group.factors(), (std::vector<std::uint32_t>{9}));
  auto q = present_abelian(1, [](Index, Index) { return Index{0}; });
  EXPECT_EQ(q.group.order(), 1u);
}
