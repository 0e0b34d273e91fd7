#include <gtest/gtest.h>

#include <set>

#include "partopt/brute_force.hpp"
#include "partopt/generator.hpp"

using namespace partopt;

TEST(Generate, NoEdges) {
  GenSpec spec;
  spec.nodes = 5;
  spec.edges = 0;
  const auto inst = generate(spec);
  EXPECT_EQ(inst.graph().edge_count(), 0U);
  EXPECT_EQ(software_cost(inst.graph(), Partition::all_software(5)), inst.graph().total_sw());
}

TEST(Generate, SameSeedSameInstance) {
  GenSpec spec;
  spec.nodes = 20;
  spec.edges = 50;
  spec.seed = 77;
  EXPECT_EQ(generate(spec), generate(spec));
  GenSpec other = spec;
  other.seed = 78;
  EXPECT_FALSE(generate(spec) == generate(other));
}

TEST(Generate, FullBudgetMakesZeroOptimal) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GenSpec spec;
    spec.nodes = 10;
    spec.edges = 15;
    spec.s0 = 1.0;
    spec.seed = seed;
    const auto inst = generate(spec);
    EXPECT_EQ(inst.s0(), inst.graph().total_sw());
    EXPECT_EQ(enumerate(inst).optimum_hp, 0);
  }
}

TEST(Generate, BudgetPolicies) {
  GenSpec spec;
  spec.nodes = 8;
  spec.edges = 4;
  spec.s0 = Cost{42};
  EXPECT_EQ(generate(spec).s0(), 42);
  spec.s0 = 0.5;
  const auto inst = generate(spec);
  EXPECT_EQ(inst.s0(), inst.graph().total_sw() / 2);
}

TEST(Generate, EdgesAreDistinctAndCostsInRange) {
  GenSpec spec;
  spec.nodes = 12;
  spec.edges = 66;  // complete graph
  spec.hw = {3, 9};
  spec.sw = {1, 2};
  spec.comm = {5, 5};
  const auto inst = generate(spec);
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const Edge& e : inst.graph().edges()) {
    EXPECT_NE(e.u, e.v);
    EXPECT_TRUE(pairs.insert(std::minmax(e.u, e.v)).second);
    EXPECT_EQ(e.cost, 5);
  }
  for (std::size_t i = 0; i < 12; ++i) {
    EXPECT_GE(inst.graph().hw(i), 3);
    EXPECT_LE(inst.graph().hw(i), 9);
    EXPECT_GE(inst.graph().sw(i), 1);
    EXPECT_LE(inst.graph().sw(i), 2);
  }
}

TEST(Generate, SpecErrors) {
  GenSpec spec;
  spec.nodes = 4;
  spec.edges = 7;
  EXPECT_THROW(generate(spec), std::invalid_argument);
  spec.edges = 2;
  spec.hw = {5, 1};
  EXPECT_THROW(generate(spec), std::invalid_argument);
  spec.hw = {-1, 1};
  EXPECT_THROW(generate(spec), std::invalid_argument);
  spec.hw = {0, 1};
  spec.s0 = -0.5;
  EXPECT_THROW(generate(spec), std::invalid_argument);
  spec.nodes = 0;
  spec.edges = 0;
  spec.s0 = 0.5;
  EXPECT_THROW(generate(spec), std::invalid_argument);
}
