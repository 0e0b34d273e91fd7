#include <gtest/gtest.h>

#include "partopt/brute_force.hpp"
#include "support/reference.hpp"

using namespace partopt;
using partopt::testing::random_instance;
using partopt::testing::reference_optimum;
using partopt::testing::two_node_instance;

TEST(Enumerate, TwoNode) {
  const OptResult r = enumerate(two_node_instance());
  ASSERT_TRUE(r.solved());
  EXPECT_EQ(*r.optimum_hp, 7);
  EXPECT_EQ(r.probes, 4U);
  EXPECT_EQ(r.strategy, Strategy::Brute);
}

TEST(Enumerate, SingleNodeFitsInSoftware) {
  const OptResult r = enumerate(ProblemInstance(TaskGraph({9}, {3}, {}), 3));
  EXPECT_EQ(*r.optimum_hp, 0);
  EXPECT_EQ(r.witness->to_string(), "0");
}

TEST(Enumerate, SingleNodeMustGoHardware) {
  const OptResult r = enumerate(ProblemInstance(TaskGraph({9}, {3}, {}), 2));
  EXPECT_EQ(*r.optimum_hp, 9);
  EXPECT_EQ(r.witness->to_string(), "1");
}

TEST(Enumerate, RefusesOversizedInstances) {
  const auto inst = random_instance(1, 12, 12, 10);
  EXPECT_THROW(enumerate(inst, 11), SizeError);
  EXPECT_THROW(brute_feasible(inst, 5, 11), SizeError);
}

TEST(Enumerate, LexicographicallySmallestOptimum) {
  // Three zero-hardware-cost nodes and a budget that any assignment meets:
  // every partition is optimal and the referee must pick 000.
  const ProblemInstance tied(TaskGraph({0, 0, 0}, {1, 1, 1}, {}), 10);
  EXPECT_EQ(enumerate(tied).witness->to_string(), "000");
  // Nodes 1 and 2 are interchangeable; 001 precedes 010.
  const ProblemInstance pair(TaskGraph({5, 2, 2}, {1, 4, 4}, {}), 5);
  EXPECT_EQ(enumerate(pair).witness->to_string(), "001");
}

TEST(Enumerate, MatchesReferenceOptimumAndTieRule) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto inst = random_instance(seed, 1, 12, 30, 6);
    const auto expected = reference_optimum(inst);
    const OptResult r = enumerate(inst);
    ASSERT_EQ(r.optimum_hp, expected.hp);
    ASSERT_EQ(r.witness->bits(), expected.witness) << "seed " << seed;
    EXPECT_EQ(r.probes, std::uint64_t{1} << inst.graph().node_count());
    EXPECT_EQ(*r.sp_at_witness, software_cost(inst.graph(), *r.witness));
  }
}

TEST(Enumerate, HardwareCapCanMakeItInfeasible) {
  const auto inst = two_node_instance();
  EXPECT_EQ(enumerate(inst, kDefaultNodeLimit, 6).status, SolveStatus::InfeasibleInstance);
  EXPECT_EQ(enumerate(inst, kDefaultNodeLimit, 7).optimum_hp, 7);
}

TEST(BruteFeasible, Examples) {
  const auto inst = two_node_instance();
  EXPECT_FALSE(brute_feasible(inst, 6));
  EXPECT_TRUE(brute_feasible(inst, 7));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto r = random_instance(seed, 1, 12, 20);
    EXPECT_TRUE(brute_feasible(r, hmax(r.graph())));
  }
}

TEST(BruteFeasible, MatchesReference) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto inst = random_instance(seed, 1, 10, 20);
    const Cost opt = *reference_optimum(inst).hp;
    for (Cost k = 0; k <= hmax(inst.graph()); k += 3) {
      ASSERT_EQ(brute_feasible(inst, k), k >= opt);
    }
  }
}
