#include <gtest/gtest.h>

#include <map>
#include <set>

#include "support.hpp"

namespace qp {
namespace {

using testing::edges;
using testing::fixture_graph;

// Boundary walk on (half-edge, side) states kept deliberately separate from
// the library: from (h, s) step around the vertex (forward when s = 1,
// backward when s = 0) to the next half-edge of F, then cross its edge to the
// partner, keeping the side on a twisted edge and flipping it otherwise.
// Each boundary circle is walked once in each direction.
int oracle_boundary_components(const RibbonGraph& g, EdgeSet f) {
  std::map<int, std::vector<int>> kept;
  int bare = 0;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    auto& rot = kept[static_cast<int>(v)];
    for (int h : g.rotation(static_cast<int>(v))) {
      if (contains(f, g.edge_of(h))) rot.push_back(h);
    }
    if (rot.empty()) ++bare;
  }
  auto step = [&](std::pair<int, int> state) {
    const auto [h, side] = state;
    const auto& rot = kept[g.vertex_of(h)];
    const auto it = std::find(rot.begin(), rot.end(), h);
    const std::size_t i = static_cast<std::size_t>(it - rot.begin());
    const std::size_t n = rot.size();
    const int next = side == 1 ? rot[(i + 1) % n] : rot[(i + n - 1) % n];
    const int e = g.edge_of(next);
    const int arrive_side = side == 1 ? 0 : 1;
    const int partner = g.end(e, 0) == next ? g.end(e, 1) : g.end(e, 0);
    return std::pair{partner, g.twisted(e) ? arrive_side : 1 - arrive_side};
  };
  std::set<std::pair<int, int>> seen;
  int orbits = 0;
  for (const auto& [v, rot] : kept) {
    for (int h : rot) {
      for (int side : {0, 1}) {
        std::pair start{h, side};
        if (seen.count(start)) continue;
        ++orbits;
        auto cur = start;
        do {
          seen.insert(cur);
          cur = step(cur);
        } while (cur != start);
      }
    }
  }
  return orbits / 2 + bare;
}

TEST(Components, Examples) {
  EXPECT_EQ(components(fixture_graph("M1"), 1), 1);
  const RibbonGraph th = fixture_graph("TH");
  EXPECT_EQ(components(th, 0), 2);
  EXPECT_EQ(components(th, edges(th, "e1")), 1);
}

TEST(BoundaryComponents, Examples) {
  const RibbonGraph b1 = fixture_graph("B1");
  EXPECT_EQ(boundary_components(b1, b1.all_edges()), 2);
  const RibbonGraph m1 = fixture_graph("M1");
  EXPECT_EQ(boundary_components(m1, m1.all_edges()), 1);
  const RibbonGraph p2 = fixture_graph("P2");
  EXPECT_EQ(boundary_components(p2, p2.all_edges()), 3);
  const RibbonGraph t1 = fixture_graph("T1");
  EXPECT_EQ(boundary_components(t1, t1.all_edges()), 1);
  EXPECT_EQ(boundary_components(t1, edges(t1, "ea")), 2);
  const RibbonGraph th = fixture_graph("TH");
  EXPECT_EQ(boundary_components(th, th.all_edges()), 3);
  EXPECT_EQ(boundary_components(th, 0), 2);
}

TEST(BoundaryComponents, MatchesWalkOracle) {
  for (const char* name : {"B1", "M1", "T1", "P2", "TH", "K4_twisted", "two_parts", "point"}) {
    const RibbonGraph g = fixture_graph(name);
    for (EdgeSet f = 0; f <= g.all_edges(); ++f) {
      ASSERT_EQ(boundary_components(g, f), oracle_boundary_components(g, f)) << name << " F=" << f;
    }
  }
  for (std::uint64_t i = 0; i < 60; ++i) {
    const RibbonGraph g = testing::small_random(i, {1, 2});
    for (EdgeSet f = 0; f <= g.all_edges(); ++f) {
      ASSERT_EQ(boundary_components(g, f), oracle_boundary_components(g, f)) << "random " << i << " F=" << f;
    }
  }
}

TEST(GenusS, Examples) {
  for (auto [name, s] : {std::pair{"B1", 0}, std::pair{"M1", 1}, std::pair{"T1", 2}}) {
    const RibbonGraph g = fixture_graph(name);
    EXPECT_EQ(genus_s(g, g.all_edges()), s) << name;
  }
}

TEST(Orientable, Examples) {
  const RibbonGraph m1 = fixture_graph("M1");
  EXPECT_FALSE(is_orientable(m1));
  EXPECT_TRUE(is_orientable(m1, 0));
  EXPECT_TRUE(is_orientable(fixture_graph("T1")));
}

TEST(Orientable, TwistsCancelAroundACycle) {
  const RibbonGraph g({{"u", {"a1", "b1"}}, {"w", {"a2", "b2"}}},
                      {{"ea", "a1", "a2", true}, {"eb", "b1", "b2", true}});
  EXPECT_TRUE(is_orientable(g));
  const RibbonGraph h({{"u", {"a1", "b1"}}, {"w", {"a2", "b2"}}},
                      {{"ea", "a1", "a2", true}, {"eb", "b1", "b2", false}});
  EXPECT_FALSE(is_orientable(h));
}

TEST(Dual, Theta) {
  const RibbonGraph d = dual(fixture_graph("TH"));
  EXPECT_EQ(d.num_vertices(), 3u);
  EXPECT_EQ(d.num_edges(), 3u);
  EXPECT_EQ(boundary_components(d, d.all_edges()), 2);
}

TEST(Dual, ProjectivePlaneLoopIsSelfDual) {
  const RibbonGraph d = dual(fixture_graph("M1"));
  EXPECT_EQ(d.num_vertices(), 1u);
  EXPECT_EQ(d.num_edges(), 1u);
  EXPECT_EQ(boundary_components(d, d.all_edges()), 1);
  EXPECT_EQ(genus_s(d, d.all_edges()), 1);
}

TEST(Dual, Involution) {
  for (const char* name : {"B1", "M1", "T1", "P2", "TH", "K4_twisted", "two_parts", "point"}) {
    const RibbonGraph g = fixture_graph(name);
    EXPECT_EQ(subgraph_profile(dual(dual(g))), subgraph_profile(g)) << name;
  }
}

TEST(PartialDual, Examples) {
  const RibbonGraph t1 = fixture_graph("T1");
  EXPECT_EQ(partial_dual(t1, 0), t1);
  const RibbonGraph m1 = fixture_graph("M1");
  EXPECT_EQ(subgraph_profile(partial_dual(m1, 1)), subgraph_profile(dual(m1)));
  EXPECT_EQ(partial_dual(t1, edges(t1, "ea")).num_vertices(), 2u);
}

TEST(PartialDual, KeepsEdgeLabelsAndOrder) {
  const RibbonGraph g = fixture_graph("K4_twisted");
  const RibbonGraph d = partial_dual(g, edges(g, "ea,ec"));
  ASSERT_EQ(d.num_edges(), g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) EXPECT_EQ(d.edge_name(static_cast<int>(e)), g.edge_name(static_cast<int>(e)));
}

TEST(Minor, Theta) {
  const RibbonGraph th = fixture_graph("TH");
  const RibbonGraph del = delete_edge(th, 0);
  EXPECT_EQ(del.num_vertices(), 2u);
  EXPECT_EQ(del.num_edges(), 2u);
  EXPECT_EQ(components(del, del.all_edges()), 1);
  const RibbonGraph con = contract_edge(th, 0);
  EXPECT_EQ(con.num_vertices(), 1u);
  EXPECT_EQ(con.num_edges(), 2u);
  EXPECT_EQ(boundary_components(con, con.all_edges()), 3);
}

TEST(Minor, ContractingALoopFails) {
  EXPECT_THROW(contract_edge(fixture_graph("M1"), 0), std::invalid_argument);
}

TEST(Minor, ContractingATwistedEdgeKeepsTheSurface) {
  const RibbonGraph g = fixture_graph("K4_twisted");
  const int eb = *g.find_edge("eb");
  const RibbonGraph c = contract_edge(g, eb);
  EXPECT_EQ(c.num_vertices(), 3u);
  EXPECT_EQ(boundary_components(c, c.all_edges()), boundary_components(g, g.all_edges()));
  EXPECT_EQ(genus_s(c, c.all_edges()), genus_s(g, g.all_edges()));
  EXPECT_EQ(is_orientable(c), is_orientable(g));
}

TEST(DisjointUnion, PrimesClashingLabels) {
  const RibbonGraph t1 = fixture_graph("T1");
  const RibbonGraph u = disjoint_union(t1, t1);
  EXPECT_EQ(u.num_vertices(), 2u);
  EXPECT_EQ(u.num_edges(), 4u);
  EXPECT_EQ(components(u, u.all_edges()), 2);
  EXPECT_EQ(boundary_components(u, u.all_edges()), 2);
}

TEST(SplitComponents, MapsEdgesBack) {
  const ComponentSplit split = split_components(fixture_graph("two_parts"));
  ASSERT_EQ(split.parts.size(), 2u);
  EXPECT_EQ(split.edge_map[0], std::vector<int>{0});
  EXPECT_EQ(split.edge_map[1], (std::vector<int>{1, 2}));
  EXPECT_EQ(genus_s(split.parts[1], split.parts[1].all_edges()), 2);
}

TEST(Validation, RejectsBadGraphs) {
  EXPECT_THROW(RibbonGraph({{"v", {"a1", "a1"}}}, {{"e", "a1", "a1", false}}), std::invalid_argument);
  EXPECT_THROW(RibbonGraph({{"v", {"a1", "a2"}}}, {{"e", "a1", "zz", false}}), std::invalid_argument);
  EXPECT_THROW(RibbonGraph({{"v", {"a1", "a2"}}}, {}), std::invalid_argument);
  EXPECT_THROW(RibbonGraph({{"v", {"a1", "a2"}}, {"v", {}}}, {{"e", "a1", "a2", false}}), std::invalid_argument);
}

TEST(SubgraphProfile, EntriesSatisfyFormulas) {
  const RibbonGraph g = fixture_graph("K4_twisted");
  const SubgraphProfile p = subgraph_profile(g);
  const int v = static_cast<int>(g.num_vertices());
  for (EdgeSet f = 0; f < p.entries.size(); ++f) {
    const auto& x = p.entries[f];
    EXPECT_EQ(x.genus_s, 2 * x.components - v + popcount(f) - x.boundary_components);
    EXPECT_EQ(x.nullity, popcount(f) - v + x.components);
  }
}

}  // namespace
}  // namespace qp
