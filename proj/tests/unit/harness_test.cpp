#include <gtest/gtest.h>

#include "ambig/fuzz.hpp"
#include "ambig/oracle.hpp"
#include "ambig/sweep.hpp"
#include "fixtures.hpp"

namespace {

using namespace fixtures;

TEST(Stream, SplitIgnoresParentDraws) {
  Stream a(11), b(11);
  for (int k = 0; k < 5; ++k) b.next();
  Stream ca = a.split(3), cb = b.split(3);
  EXPECT_EQ(ca.next(), cb.next());
  EXPECT_NE(Stream(11).split(3).next(), Stream(11).split(4).next());
}

TEST(Generators, SmallAssignmentIsValid) {
  GenConfig cfg;
  cfg.atoms = 2;
  cfg.situations = 3;
  cfg.seed = 17;
  BasicAssignment j = gen_assignment(cfg);
  EXPECT_TRUE(check_assignment(j.map()).all_pass());
  EXPECT_EQ(gen_assignment(cfg).map(), j.map());
}

TEST(Generators, SingleAtomForcesVacuous) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GenConfig cfg;
    cfg.atoms = 1;
    cfg.situations = 4;
    cfg.seed = seed;
    BasicAssignment j = gen_assignment(cfg);
    EXPECT_EQ(j.map()[PropSet(1)], j.space().full());
  }
}

TEST(Generators, ProbabilityAndPointMap) {
  GenConfig cfg;
  cfg.situations = 3;
  cfg.seed = 4;
  ProbabilityAssignment p = gen_probability(cfg);
  EXPECT_EQ(p.measure(p.space().full()), R(1));
  EXPECT_EQ(gen_probability(cfg), p);
  PointMap g = gen_pointmap(cfg);
  ASSERT_EQ(g.size(), 3u);
  for (std::size_t w = 0; w < g.size(); ++w) EXPECT_LT(g[w], cfg.atoms);
  EXPECT_EQ(gen_pointmap(cfg), g);
}

TEST(Generators, FocalBiasShapesSizes) {
  GenConfig small, large;
  small.atoms = large.atoms = 6;
  small.situations = large.situations = 60;
  small.focal_bias = 0.05;
  large.focal_bias = 20.0;
  auto mean_size = [](const GenConfig& cfg) {
    BasicAssignment j = gen_assignment(cfg);
    double total = 0;
    for (std::uint32_t a = 1; a < j.frame().subset_count(); ++a) {
      total += PropSet(a).count() * j.map()[PropSet(a)].count();
    }
    return total / static_cast<double>(cfg.situations);
  };
  EXPECT_LT(mean_size(small), 2.0);
  EXPECT_GT(mean_size(large), 5.0);
}

TEST(Generators, RejectsBadConfig) {
  GenConfig cfg;
  cfg.atoms = 0;
  EXPECT_THROW(gen_assignment(cfg), InvalidUniverse);
  cfg.atoms = 3;
  cfg.situations = 65;
  EXPECT_THROW(gen_assignment(cfg), InvalidUniverse);
  cfg.situations = 3;
  cfg.focal_bias = -1.0;
  EXPECT_THROW(gen_assignment(cfg), ValidationError);
}

TEST(Oracle, MatchesCheckersOnFixtures) {
  using oracle::disagreement;
  IntervalStructure s = fix1();
  EXPECT_FALSE(disagreement(check_interval_pair(s.lower(), s.upper()),
                            oracle::verify_interval(s.lower(), s.upper())));
  EXPECT_TRUE(oracle::oracle_verify(s).all_pass());
  EXPECT_FALSE(disagreement(check_assignment(fix1_j()), oracle::verify_assignment(fix1_j())));
  EXPECT_FALSE(disagreement(check_incidence_axioms(fix2_i().map()),
                            oracle::verify_incidence(fix2_i().map())));
  EXPECT_EQ(oracle::naive_extract(s.lower()), fix1_j());
  EXPECT_EQ(oracle::naive_lower(fix1_j()), fix1_lower());
}

TEST(Oracle, CorruptedTablesAgree) {
  SetValuedMap upper = fix1_upper();
  upper.set(PropSet(0b01), S(w3(), {"w1"}));
  AxiomReport main = check_interval_pair(fix1_lower(), upper);
  AxiomReport naive = oracle::verify_interval(fix1_lower(), upper);
  EXPECT_FALSE(main.all_pass());
  EXPECT_FALSE(oracle::disagreement(main, naive));
  EXPECT_EQ(main.first_failure()->axiom, naive.first_failure()->axiom);

  SetValuedMap j = fix1_j();
  j.set(PropSet(0b10), S(w3(), {"w2", "w3"}));
  main = check_assignment(j);
  naive = oracle::verify_assignment(j);
  EXPECT_FALSE(main.passes("j3"));
  EXPECT_FALSE(oracle::disagreement(main, naive));
}

TEST(Oracle, DisagreementIsReported) {
  AxiomReport a({{"j1", true, false, true, 1, std::nullopt}});
  AxiomReport b({{"j1", false, false, true, 1, Witness{{PropSet(0)}, ""}}});
  EXPECT_TRUE(oracle::disagreement(a, b).has_value());
  EXPECT_TRUE(oracle::disagreement(a, AxiomReport{}).has_value());
}

TEST(Fuzz, CleanRunHasNoFailures) {
  GenConfig cfg;
  cfg.atoms = 4;
  cfg.situations = 6;
  cfg.trials = 40;
  cfg.seed = 3;
  FuzzReport r = fuzz(cfg);
  EXPECT_TRUE(r.ok()) << r.render();
  ASSERT_EQ(r.properties.size(), fuzz_properties().size());
  for (const auto& p : r.properties) EXPECT_EQ(p.pass, 40u) << p.name;
}

TEST(Fuzz, SingleTrialIsReproducible) {
  GenConfig cfg;
  cfg.trials = 1;
  cfg.seed = 99;
  EXPECT_EQ(fuzz(cfg).render(), fuzz(cfg).render());
}

TEST(Fuzz, ThreadCountDoesNotChangeReport) {
  GenConfig cfg;
  cfg.atoms = 5;
  cfg.situations = 10;
  cfg.trials = 60;
  cfg.seed = 42;
  cfg.threads = 1;
  std::string one = fuzz(cfg).render();
  cfg.threads = 3;
  EXPECT_EQ(fuzz(cfg).render(), one);
  cfg.fault_injection = true;
  cfg.threads = 1;
  std::string faulty = fuzz(cfg).render();
  cfg.threads = 4;
  EXPECT_EQ(fuzz(cfg).render(), faulty);
}

TEST(Fuzz, FaultInjectionIsCaught) {
  GenConfig cfg;
  cfg.trials = 20;
  cfg.seed = 8;
  cfg.fault_injection = true;
  FuzzReport r = fuzz(cfg);
  EXPECT_FALSE(r.ok());
  ASSERT_FALSE(r.failures.empty());
  EXPECT_FALSE(r.failures.front().detail.empty());
  for (const auto& p : r.properties) {
    if (p.name == "oracle") EXPECT_EQ(p.fail, 0u);
  }
}

TEST(Fuzz, ShrinkKeepsFailing) {
  GenConfig cfg;
  cfg.atoms = 5;
  cfg.situations = 10;
  cfg.seed = 21;
  cfg.fault_injection = true;
  FuzzInstance inst = make_trial(cfg, 0);
  auto results = run_properties(inst);
  ASSERT_TRUE(results[0].has_value());
  FuzzInstance small = shrink(inst, 0);
  EXPECT_LE(small.space.size(), inst.space.size());
  EXPECT_LE(small.frame.size(), inst.frame.size());
  EXPECT_TRUE(run_properties(small)[0].has_value());
}

TEST(Sweep, WorkerOverride) {
  set_worker_count(2);
  EXPECT_EQ(worker_count(), 2u);
  set_worker_count(0);
  EXPECT_GE(worker_count(), 1u);
}

}  // namespace
