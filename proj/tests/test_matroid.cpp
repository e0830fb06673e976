#include <gtest/gtest.h>

#include "support.hpp"

namespace qp {
namespace {

using testing::fixture_graph;

OrdinaryGraph loop_graph() { return {1, {{0, 0, 0}}}; }
OrdinaryGraph k2() { return {2, {{0, 1, 0}}}; }
OrdinaryGraph c3() { return {3, {{0, 1, 0}, {1, 2, 1}, {2, 0, 2}}}; }

TEST(CycleRank, Examples) {
  const OrdinaryGraph th = underlying_graph(fixture_graph("TH"));
  EXPECT_EQ(cycle_rank(th, 0b011), 1);
  EXPECT_EQ(cycle_rank(loop_graph(), 1), 0);
  EXPECT_EQ(cycle_rank(c3(), 0), 0);
  EXPECT_EQ(cycle_rank(c3(), 0b111), 2);
}

TEST(DualRank, Examples) {
  EXPECT_EQ(dual_rank(cycle_matroid(k2()), 1), 0);
  EXPECT_EQ(dual_rank(cycle_matroid(c3()), 0b011), 1);
  EXPECT_EQ(dual_rank(cycle_matroid(c3()), 0), 0);
}

TEST(Nullity, Examples) {
  EXPECT_EQ(nullity_of(cycle_matroid(loop_graph()), 1), 1);
  EXPECT_EQ(nullity_of(cycle_matroid(c3()), 0), 0);
  // The dual of the sphere's one-loop cellulation is K2.
  const OrdinaryGraph dual_b1 = underlying_graph(dual(fixture_graph("B1")));
  EXPECT_EQ(dual_b1.num_vertices, 2);
  EXPECT_EQ(nullity_of(bond_matroid(dual_b1), 1), 1);
}

TEST(UnderlyingGraph, KeepsLabels) {
  const RibbonGraph g = fixture_graph("K4_twisted");
  const OrdinaryGraph og = underlying_graph(g, 0b100110);
  ASSERT_EQ(og.edges.size(), 3u);
  EXPECT_EQ(og.edges[0].label, 1);
  EXPECT_EQ(og.edges[2].label, 5);
  EXPECT_EQ(og.num_vertices, 4);
}

TEST(RankAxioms, DetectsViolation) {
  EXPECT_TRUE(satisfies_rank_axioms(cycle_matroid(c3())));
  EXPECT_FALSE(satisfies_rank_axioms(RankFunction(2, [](EdgeSet s) { return 2 * popcount(s); })));
  EXPECT_FALSE(satisfies_rank_axioms(RankFunction(2, [](EdgeSet s) { return s == 0b11 ? 1 : 0; })));
}

}  // namespace
}  // namespace qp
