#include <gtest/gtest.h>

#include "gmr/gm_ring.hpp"
#include "oracles.hpp"

using namespace gmr;

namespace {

GMRing upper(std::uint32_t mod) {
  return GMRing::assemble(from_matrix_homs({{{"1", 1}, {"2", 1}}, mod, {{"2", "1"}}}));
}
GMRing zn(std::uint32_t n) { return GMRing::assemble(oracle::zn_system(n)); }

GMIdeal principal(const GMRing& r, Index x) {
  const Index one[] = {x};
  return gm_ideal_closure(r, one, Flavor::GM);
}

}  // namespace

TEST(Quotient, Extremes) {
  auto r = upper(2);
  auto q0 = quotient(r, zero_ideal(r, Flavor::GM));
  EXPECT_EQ(q0.ring.order(), r.order());
  auto chk = verify_gm_hom(q0.projection);
  EXPECT_TRUE(chk.ok && chk.injective && chk.surjective);
  auto q1 = quotient(r, whole_ideal(r, Flavor::GM));
  EXPECT_EQ(q1.ring.order(), 1u);
}

TEST(Quotient, UpperModStrictIsDiagonal) {
  auto r = upper(2);
  auto strict = principal(r, r.single(0, 1, 1));
  auto q = quotient(r, strict);
  ASSERT_EQ(q.ring.order(), 4u);
  EXPECT_EQ(q.ring.component(0, 1).order(), 1u);
  const auto& s = q.ring.system();
  EXPECT_EQ(s.mul(0, 0, 0, 1, 1), 1u);
  EXPECT_EQ(s.mul(1, 1, 1, 1, 1), 1u);
  auto chk = verify_gm_hom(q.projection);
  ASSERT_TRUE(chk.ok);
  EXPECT_EQ(chk.kernel->members(), strict.members());
}

TEST(Quotient, CosetTablesMatchModularArithmetic) {
  auto r = zn(12);
  for (const auto& b : enumerate_ideals(r, Flavor::GM)) {
    auto q = quotient(r, b);
    const Index d = 12 / b.order();
    EXPECT_EQ(q.ring.order(), d);
    // The projection is additive and multiplicative; compare with Z_d.
    for (Index x = 0; x < 12; ++x)
      for (Index y = 0; y < 12; ++y)
        EXPECT_EQ(q.ring.mul(q.projection.apply(x), q.projection.apply(y)), q.projection.apply((x * y) % 12));
  }
}

TEST(Quotient, RejectsNonIdeal) {
  auto r = GMRing::assemble(from_tables({"1", "2"}, {{"1", "1", {2}}, {"2", "2", {2}}}, {}));
  auto diag = GMIdeal::from_members(r, Subgroup::from_members(r.additive(), {0, r.add(r.single(0, 0, 1), r.single(1, 1, 1))}),
                                    Flavor::Ring);
  EXPECT_THROW(quotient(r, diag), Error);
}

TEST(GMHom, ReductionModTwo) {
  auto z4 = zn(4), z2 = zn(2);
  GMHom psi{z4, z2, {{0, 1, 0, 1}}};
  auto chk = verify_gm_hom(psi);
  ASSERT_TRUE(chk.ok);
  EXPECT_TRUE(chk.surjective);
  EXPECT_FALSE(chk.injective);
  EXPECT_EQ(chk.kernel->members().members(), (std::vector<Index>{0, 2}));

  GMHom id{z4, z4, {{0, 1, 2, 3}}};
  auto ic = verify_gm_hom(id);
  EXPECT_TRUE(ic.ok && ic.kernel->is_zero());

  GMHom bad{z4, z4, {{0, 2, 0, 2}}};  // additive but not multiplicative
  EXPECT_FALSE(verify_gm_hom(bad).ok);
  GMHom nonadd{z4, z2, {{0, 1, 1, 1}}};
  EXPECT_FALSE(verify_gm_hom(nonadd).ok);
}

TEST(IsoTheorems, ModEight) {
  auto r = zn(8);
  auto b = principal(r, 2), c = principal(r, 4);
  auto rep = verify_iso_theorems(r, b, c);
  for (const auto& v : rep.verdicts) EXPECT_NE(v.status, VerdictStatus::Fail) << v.id << ": " << v.witness;
  bool saw14 = false;
  for (const auto& v : rep.verdicts)
    if (v.id == "third-iso") {
      saw14 = true;
      EXPECT_EQ(v.status, VerdictStatus::Pass);
    }
  EXPECT_TRUE(saw14);
}

TEST(IsoTheorems, DegenerateCases) {
  auto r = upper(2);
  auto strict = principal(r, r.single(0, 1, 1));
  EXPECT_TRUE(verify_iso_theorems(r, strict, strict).ok());
  EXPECT_TRUE(verify_iso_theorems(r, strict, zero_ideal(r, Flavor::GM)).ok());
}

TEST(IsoTheorems, AllPairsSmallRings) {
  for (auto r : {zn(12), upper(2), upper(3), GMRing::assemble(from_matrix_homs({{{"1", 1}, {"2", 1}}, 2, {}}))}) {
    auto ideals = enumerate_ideals(r, Flavor::GM);
    for (const auto& b : ideals)
      for (const auto& c : ideals) EXPECT_TRUE(verify_iso_theorems(r, b, c).ok());
  }
}

TEST(IsoTheorems, ExplicitHom) {
  auto z4 = zn(4), z2 = zn(2);
  GMHom psi{z4, z2, {{0, 1, 0, 1}}};
  auto ideals = enumerate_ideals(z4, Flavor::GM);
  auto rep = verify_iso_theorems(z4, ideals[1], ideals[0], &psi);
  EXPECT_TRUE(rep.ok());
}
