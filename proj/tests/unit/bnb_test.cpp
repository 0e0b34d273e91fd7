#include <gtest/gtest.h>

#include <random>

#include "partopt/bnb.hpp"
#include "partopt/sweep.hpp"
#include "support/reference.hpp"

using namespace partopt;
using partopt::testing::random_instance;
using partopt::testing::reference_hp;
using partopt::testing::reference_min_hp;
using partopt::testing::reference_sp;
using partopt::testing::two_node_instance;

TEST(BuildIlp, TwoNodeShape) {
  const IlpModel model = build_ilp(two_node_instance());
  EXPECT_EQ(model.variable_count(), 3U);
  EXPECT_EQ(model.row_count(), 3U);
  EXPECT_EQ(model.objective, (std::vector<Cost>{3, 4, 0}));
  // -5 x0 - 2 x1 + 6 y0 <= 5 - 7
  EXPECT_EQ(model.rows[0], (std::vector<Cost>{-5, -2, 6}));
  EXPECT_EQ(model.bounds[0], -2);
  EXPECT_EQ(model.rows[1], (std::vector<Cost>{1, -1, -1}));
  EXPECT_EQ(model.rows[2], (std::vector<Cost>{-1, 1, -1}));
}

TEST(BuildIlp, BudgetRowMatchesEnumeration) {
  const auto inst = two_node_instance();
  const IlpModel model = build_ilp(inst);
  for (const char* bits : {"00", "01", "10", "11"}) {
    const Partition p = Partition::from_string(bits);
    const auto z = ilp_assignment(inst.graph(), p);
    const Cost lhs = model.rows[0][0] * z[0] + model.rows[0][1] * z[1] + model.rows[0][2] * z[2];
    EXPECT_EQ(lhs <= model.bounds[0], evaluate(inst, p).feasible) << bits;
  }
}

TEST(BuildIlp, AllSoftwareSatisfiesSlackRows) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto inst = random_instance(seed, 1, 12, 30);
    const IlpModel model = build_ilp(inst);
    EXPECT_EQ(model.row_count(), 1 + 2 * inst.graph().edge_count());
    const std::vector<Cost> zero(model.variable_count(), 0);
    for (std::size_t r = 1; r < model.row_count(); ++r) {
      Cost lhs = 0;
      for (std::size_t j = 0; j < zero.size(); ++j) lhs += model.rows[r][j] * zero[j];
      EXPECT_LE(lhs, model.bounds[r]);
    }
  }
}

TEST(BuildIlp, ModelFaithfulness) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const auto inst = random_instance(static_cast<std::uint64_t>(trial), 1, 14, 40);
    const IlpModel model = build_ilp(inst);
    std::vector<bool> x(inst.graph().node_count());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = rng() & 1U;
    const Partition p(x);
    const auto z = ilp_assignment(inst.graph(), p);
    ASSERT_EQ(model.satisfied(z), reference_sp(inst.graph(), x) <= inst.s0());
    ASSERT_EQ(model.objective_value(z), reference_hp(inst.graph(), x));
  }
}

TEST(BuildIlp, LargerSlackNeverAddsFeasiblePoints) {
  const auto inst = two_node_instance();
  const IlpModel model = build_ilp(inst);
  // x = (0,0) is over budget; raising y cannot repair it.
  EXPECT_FALSE(model.satisfied({0, 0, 0}));
  EXPECT_FALSE(model.satisfied({0, 0, 1}));
  // x = (1,0) needs y = 1; y = 0 violates a slack row.
  EXPECT_FALSE(model.satisfied({1, 0, 0}));
  EXPECT_THROW(model.satisfied({1, 0}), DimensionError);
}

TEST(IlpListing, Format) {
  const std::string listing = write_ilp_listing(build_ilp(two_node_instance()));
  EXPECT_NE(listing.find("variables 3\n"), std::string::npos);
  EXPECT_NE(listing.find("constraints 3\n"), std::string::npos);
  EXPECT_NE(listing.find("objective 3 4 0\n"), std::string::npos);
  EXPECT_NE(listing.find("row -5 -2 6\nrow 1 -1 -1\nrow -1 1 -1\nbounds -2 0 0\n"),
            std::string::npos);
}

TEST(Minimize, TwoNode) {
  const OptResult r = minimize(two_node_instance());
  ASSERT_TRUE(r.solved());
  EXPECT_EQ(*r.optimum_hp, 7);
  EXPECT_EQ(r.witness->to_string(), "11");
  EXPECT_EQ(*r.sp_at_witness, 0);
  EXPECT_EQ(r.strategy, Strategy::Bnb);
}

TEST(Minimize, GenerousBudgetGivesZero) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto base = random_instance(seed, 1, 16, 40);
    const ProblemInstance inst(base.graph(), base.graph().total_sw() + 1);
    const OptResult r = minimize(inst);
    ASSERT_TRUE(r.solved());
    EXPECT_EQ(*r.optimum_hp, 0);
    EXPECT_TRUE(evaluate(inst, *r.witness).feasible);
  }
}

TEST(Minimize, AgreesWithEnumeration) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto inst = random_instance(seed, 1, 13, 40);
    const OptResult r = minimize(inst);
    ASSERT_TRUE(r.solved());
    ASSERT_EQ(*r.optimum_hp, reference_min_hp(inst)) << "seed " << seed;
    const CostReport report = evaluate(inst, *r.witness);
    EXPECT_TRUE(report.feasible);
    EXPECT_EQ(report.hp, *r.optimum_hp);
    EXPECT_EQ(report.sp, *r.sp_at_witness);
  }
}

TEST(Minimize, AgreesWithSweepUpToTwentyNodes) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto inst = random_instance(seed + 1000, 17, 20, 45);
    EXPECT_EQ(minimize(inst).optimum_hp, sweep_binary(inst).optimum_hp) << "seed " << seed;
  }
}

TEST(Minimize, IncumbentsStrictlyDecrease) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto inst = random_instance(seed, 4, 16, 40);
    std::vector<Cost> seen;
    BnbOptions options;
    options.on_incumbent = [&](Cost hp) { seen.push_back(hp); };
    const OptResult r = minimize(inst, options);
    ASSERT_FALSE(seen.empty());
    EXPECT_EQ(seen.front(), hmax(inst.graph()));
    EXPECT_EQ(seen.back(), *r.optimum_hp);
    for (std::size_t i = 1; i < seen.size(); ++i) EXPECT_LT(seen[i], seen[i - 1]);
  }
}

TEST(Minimize, CostScalingCovariance) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto inst = random_instance(seed, 1, 14, 35);
    const Cost k = 2 + static_cast<Cost>(seed % 5);
    std::vector<Cost> scaled = inst.graph().hw_costs();
    for (Cost& h : scaled) h *= k;
    const ProblemInstance big(TaskGraph(scaled, inst.graph().sw_costs(), inst.graph().edges()),
                              inst.s0());
    const OptResult base = minimize(inst);
    const OptResult grown = minimize(big);
    ASSERT_EQ(*grown.optimum_hp, k * *base.optimum_hp);
    const CostReport original = evaluate(inst, *grown.witness);
    EXPECT_TRUE(original.feasible);
    EXPECT_EQ(original.hp, *grown.optimum_hp / k);
  }
}

TEST(Minimize, TimeoutKeepsIncumbent) {
  const auto inst = random_instance(5, 16, 16, 40);
  const OptResult r = minimize(inst, Seconds(0.0));
  EXPECT_EQ(r.status, SolveStatus::Timeout);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(evaluate(inst, *r.witness).feasible);
  EXPECT_EQ(*r.optimum_hp, hmax(inst.graph()));
}

TEST(Minimize, MemoryCeilingGivesMemoryOut) {
  GenSpec spec;
  spec.nodes = 40;
  spec.edges = 80;
  spec.seed = 4;
  const auto inst = generate(spec);
  BnbOptions options;
  options.memory_limit_bytes = 256;
  const OptResult r = minimize(inst, options);
  EXPECT_EQ(r.status, SolveStatus::MemoryOut);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(evaluate(inst, *r.witness).feasible);
}
