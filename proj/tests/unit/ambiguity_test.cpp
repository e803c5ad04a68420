#include <gtest/gtest.h>

#include "ambig/generators.hpp"
#include "ambig/oracle.hpp"
#include "fixtures.hpp"

namespace {

using namespace fixtures;

TEST(AmbiguityFromInterval, Fix1) {
  AmbiguityMap a = ambiguity_from_interval(fix1());
  EXPECT_EQ(a[PropSet(0b01)], S(w3(), {"w3"}));
  EXPECT_EQ(a[PropSet(0b10)], S(w3(), {"w3"}));
  EXPECT_TRUE(a[PropSet(0)].empty());
  EXPECT_TRUE(a[PropSet(0b11)].empty());
}

TEST(AmbiguityFromInterval, Fix3) {
  AmbiguityMap a = ambiguity_from_interval(fix3());
  EXPECT_EQ(a[PropSet(0b01)], w3().full());
  EXPECT_EQ(a[PropSet(0b10)], w3().full());
  EXPECT_TRUE(a[PropSet(0)].empty());
  EXPECT_TRUE(a[PropSet(0b11)].empty());
}

TEST(AmbiguityFromInterval, ZeroWhenBoundsMeet) {
  IncidenceMap i = select_incidence(BasicAssignment(fix1_j()), Selector::min_index());
  AmbiguityMap a = ambiguity_from_interval(make_interval_structure(i.map(), i.map()));
  EXPECT_EQ(a.map(), SetValuedMap(xy(), w3()));
}

TEST(AmbiguityAxioms, Fix1AndFix2Pass) {
  AxiomReport r1 = check_ambiguity_axioms(ambiguity_from_interval(fix1()).map());
  EXPECT_TRUE(r1.all_pass()) << r1.render();
  AxiomReport r2 = check_ambiguity_axioms(fix2_a());
  EXPECT_TRUE(r2.all_pass()) << r2.render();
  EXPECT_EQ(r2.find("a3.1")->cases, 64u);
  EXPECT_TRUE(r2.find("a4")->derived);
}

TEST(AmbiguityAxioms, AsymmetricMap) {
  SetValuedMap m = table(xy(), w2(), {{{"x"}, {"w1"}}});
  AxiomReport r = check_ambiguity_axioms(m);
  ASSERT_FALSE(r.passes("a2"));
  EXPECT_EQ(r.find("a2")->witness->subsets, std::vector<PropSet>{PropSet(0b01)});
  EXPECT_THROW(AmbiguityMap{m}, AmbiguityAxiomViolation);
}

TEST(AmbiguityAxioms, OracleAgreesOnFix2) {
  AxiomReport main = check_ambiguity_axioms(fix2_a());
  EXPECT_FALSE(oracle::disagreement(main, oracle::verify_ambiguity(fix2_a())));
  EXPECT_FALSE(oracle::disagreement(main, oracle::oracle_verify(AmbiguityMap(fix2_a()))));
}

class AmbiguityProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(AmbiguityProperties, ConstructedMapInvariants) {
  GenConfig cfg;
  cfg.seed = 1000 + GetParam();
  cfg.atoms = 1 + GetParam() % 5;
  cfg.situations = 1 + GetParam() % 10;
  IntervalStructure s = structure_from_assignment(gen_assignment(cfg));
  AmbiguityMap a = ambiguity_from_interval(s);
  EXPECT_TRUE(check_ambiguity_axioms(a.map()).all_pass());
  const Frame& f = s.frame();
  EXPECT_TRUE(a[PropSet(0)].empty());
  EXPECT_TRUE(a[f.full()].empty());
  for (std::uint32_t k = 0; k < f.subset_count(); ++k) {
    PropSet A(k);
    EXPECT_EQ(a[A], a[f.complement(A)]);
    EXPECT_TRUE((a[A] & s.lower()[A]).empty());
    EXPECT_EQ(a[A] | s.lower()[A], s.upper()[A]);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, AmbiguityProperties, ::testing::Range<std::uint64_t>(0, 60));

}  // namespace
