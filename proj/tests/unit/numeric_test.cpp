#include <gtest/gtest.h>

#include "ambig/generators.hpp"
#include "fixtures.hpp"

namespace {

using namespace fixtures;

const PropSet X(0b01), Y(0b10), XY(0b11);

ProbabilityAssignment uniform3() { return ProbabilityAssignment::uniform(w3()); }

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("2/6"), R(1, 3));
  EXPECT_EQ(parse_rational("3"), R(3));
  EXPECT_EQ(to_string(R(2, 6)), "1/3");
  EXPECT_EQ(to_string(R(4, 2)), "2");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Probability, Validation) {
  EXPECT_THROW(ProbabilityAssignment(w3(), {R(1), R(1), R(0)}), ValidationError);
  EXPECT_THROW(ProbabilityAssignment(w3(), {R(3, 2), R(-1, 2), R(0)}), ValidationError);
  EXPECT_THROW(ProbabilityAssignment(w3(), {R(1)}), ValidationError);
  ProbabilityAssignment p(w3(), {R(1, 2), R(1, 4), R(1, 4)});
  EXPECT_EQ(p.measure(S(w3(), {"w2", "w3"})), R(1, 2));
  EXPECT_EQ(p.measure(SitSet(0)), R(0));
}

TEST(Belief, Fix1Uniform) {
  BeliefReport b = belief_from_structure(fix1(), uniform3());
  EXPECT_EQ(b.bel(X), R(1, 3));
  EXPECT_EQ(b.pl(X), R(2, 3));
  EXPECT_EQ(b.alpha(X), R(1, 3));
  EXPECT_EQ(b.alpha(Y), R(1, 3));
  EXPECT_EQ(b.alpha(PropSet(0)) + b.alpha(XY), R(0));
}

TEST(Belief, Fix3AnyProbability) {
  ProbabilityAssignment p(w3(), {R(1, 7), R(2, 7), R(4, 7)});
  BeliefReport b = belief_from_structure(fix3(), p);
  for (PropSet a : {X, Y}) {
    EXPECT_EQ(b.bel(a), R(0));
    EXPECT_EQ(b.pl(a), R(1));
    EXPECT_EQ(b.alpha(a), R(1));
  }
}

TEST(Belief, PointMassIsBinary) {
  ProbabilityAssignment p(w3(), {R(0), R(0), R(1)});
  BeliefReport b = belief_from_structure(fix1(), p);
  for (std::uint32_t a = 0; a < 4; ++a) {
    EXPECT_TRUE(b.bel(PropSet(a)) == 0 || b.bel(PropSet(a)) == 1);
  }
}

TEST(Belief, SpaceMismatch) {
  EXPECT_THROW(belief_from_structure(fix1(), ProbabilityAssignment::uniform(w2())), SpaceMismatch);
}

TEST(Mass, Fix1Uniform) {
  MassFunction m = mass_from_structure(fix1(), uniform3());
  EXPECT_EQ(m(X), R(1, 3));
  EXPECT_EQ(m(Y), R(1, 3));
  EXPECT_EQ(m(XY), R(1, 3));
}

TEST(Mass, Fix3Vacuous) {
  MassFunction m = mass_from_structure(fix3(), uniform3());
  EXPECT_EQ(m.focal_elements(), std::vector<PropSet>{XY});
  EXPECT_EQ(m(XY), R(1));
}

TEST(Mass, ZeroCellDropped) {
  MassFunction m = mass_from_structure(fix1(), ProbabilityAssignment(w3(), {R(1, 2), R(1, 2), R(0)}));
  EXPECT_EQ(m(X), R(1, 2));
  EXPECT_EQ(m(Y), R(1, 2));
  EXPECT_EQ(m(XY), R(0));
  EXPECT_EQ(m.focal_elements(), (std::vector<PropSet>{X, Y}));
}

TEST(Mass, Validation) {
  EXPECT_THROW(MassFunction(xy(), {{X, R(0)}}), EmptyMass);
  EXPECT_THROW(MassFunction(xy(), {{X, R(3, 2)}, {Y, R(-1, 2)}}), ValidationError);
  EXPECT_THROW(MassFunction(xy(), {{PropSet(0), R(1, 2)}, {X, R(1, 2)}}), ValidationError);
  EXPECT_THROW(MassFunction(xy(), {{X, R(1, 2)}}), ValidationError);
}

TEST(BeliefIdentity, FixturesPass) {
  BeliefReport b1 = belief_from_structure(fix1(), uniform3());
  EXPECT_TRUE(check_belief_identity(b1, mass_from_structure(fix1(), uniform3())).all_pass());
  BeliefReport b3 = belief_from_structure(fix3(), uniform3());
  EXPECT_TRUE(check_belief_identity(b3, MassFunction(xy(), {{XY, R(1)}})).all_pass());
}

TEST(BeliefIdentity, PerturbedBelief) {
  BeliefReport b = belief_from_structure(fix1(), uniform3());
  b.set_bel(X, R(1, 2));
  AxiomReport r = check_belief_identity(b, mass_from_structure(fix1(), uniform3()));
  ASSERT_FALSE(r.passes("bel-mass"));
  EXPECT_EQ(r.find("bel-mass")->witness->subsets, std::vector<PropSet>{X});
}

TEST(FromMass, Fix1UpToRenaming) {
  MassRealization r = structure_from_mass(MassFunction(xy(), {{X, R(1, 3)}, {Y, R(1, 3)}, {XY, R(1, 3)}}));
  EXPECT_EQ(r.space.names(), (std::vector<std::string>{"w_x", "w_y", "w_x,y"}));
  SituationSpace renamed = w3();
  SetValuedMap lower(xy(), renamed, std::vector<SitSet>(r.structure.lower().table().begin(),
                                                        r.structure.lower().table().end()));
  EXPECT_EQ(lower, fix1_lower());
  BeliefReport b = belief_from_structure(r.structure, r.probability);
  EXPECT_EQ(b.bel(X), R(1, 3));
}

TEST(FromMass, VacuousSingleSituation) {
  MassRealization r = structure_from_mass(MassFunction(xy(), {{XY, R(1)}}));
  EXPECT_EQ(r.space.size(), 1u);
  EXPECT_EQ(r.assignment.map()[XY], r.space.full());
}

TEST(FromMass, SingletonIsProbabilistic) {
  MassRealization r = structure_from_mass(MassFunction(xy(), {{X, R(1)}}));
  for (std::uint32_t a = 0; a < 4; ++a) {
    PropSet A(a);
    SitSet expect = A.contains(0) ? r.space.full() : SitSet(0);
    EXPECT_EQ(r.structure.lower()[A], expect);
    EXPECT_EQ(r.structure.upper()[A], expect);
  }
  BeliefReport b = belief_from_structure(r.structure, r.probability);
  for (std::uint32_t a = 0; a < 4; ++a) EXPECT_EQ(b.bel(PropSet(a)), b.pl(PropSet(a)));
}

TEST(Fishburn, Fixtures) {
  EXPECT_TRUE(fishburn_report(belief_from_structure(fix1(), uniform3())).all_pass());
  EXPECT_TRUE(fishburn_report(belief_from_structure(fix3(), uniform3())).all_pass());
}

TEST(Fishburn, PerturbedBreaksSymmetry) {
  BeliefReport b = belief_from_structure(fix1(), uniform3());
  b.set_bel(X, R(1, 6));
  AxiomReport r = fishburn_report(b);
  EXPECT_FALSE(r.passes("alpha2"));
  EXPECT_TRUE(r.find("alpha-theta")->derived);
}

class NumericProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(NumericProperties, BeliefMassBridge) {
  GenConfig cfg;
  cfg.seed = 9000 + GetParam();
  cfg.atoms = 1 + GetParam() % 5;
  cfg.situations = 1 + GetParam() % 10;
  cfg.zero_inclusive = GetParam() % 3 == 0;
  IntervalStructure s = structure_from_assignment(gen_assignment(cfg));
  ProbabilityAssignment p = gen_probability(cfg);
  BeliefReport b = belief_from_structure(s, p);
  MassFunction m = mass_from_structure(s, p);
  EXPECT_TRUE(check_belief_identity(b, m).all_pass());
  AxiomReport fr = fishburn_report(b);
  EXPECT_TRUE(fr.all_pass()) << fr.render();

  MassRealization real = structure_from_mass(m);
  BeliefReport b2 = belief_from_structure(real.structure, real.probability);
  AmbiguityMap a = ambiguity_from_interval(s);
  const Frame& f = s.frame();
  for (std::uint32_t k = 0; k < f.subset_count(); ++k) {
    PropSet A(k);
    EXPECT_EQ(b2.bel(A), b.bel(A));
    EXPECT_EQ(b2.pl(A), b.pl(A));
    EXPECT_EQ(b.alpha(A), p.measure(a[A]));
    for (std::uint32_t sup = k; sup < f.subset_count(); sup = (sup + 1) | k) {
      EXPECT_LE(b.bel(A), b.bel(PropSet(sup)));
      EXPECT_LE(b.pl(A), b.pl(PropSet(sup)));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, NumericProperties, ::testing::Range<std::uint64_t>(0, 40));

}  // namespace
