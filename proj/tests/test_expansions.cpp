#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "qp/expansions.hpp"
#include "support.hpp"

namespace qp {
namespace {

using testing::fixture;
using testing::poly;

LaurentPoly expand(PolyKind kind, const char* name) {
  const GraphDocument doc = fixture(name);
  switch (kind) {
    case PolyKind::krushkal:
      return expansion_krushkal(doc.graph, doc.order);
    case PolyKind::br:
      return expansion_br(doc.graph.cellulation(), doc.order);
    case PolyKind::lv:
      return expansion_lv(doc.graph, doc.order);
    case PolyKind::tutte:
      break;
  }
  throw std::logic_error("no direct tutte expansion");
}

TEST(ExpansionKrushkal, Examples) {
  EXPECT_EQ(expand(PolyKind::krushkal, "M1"), poly("A^(1/2) + B^(1/2)"));
  EXPECT_EQ(expand(PolyKind::krushkal, "T1"), poly("A + B + 2"));
  EXPECT_EQ(expand(PolyKind::krushkal, "point"), LaurentPoly(1));
}

TEST(ExpansionBR, Examples) {
  EXPECT_EQ(expand(PolyKind::br, "M1"), poly("1 + Y*Z"));
  EXPECT_EQ(expand(PolyKind::br, "B1"), poly("1 + Y"));
  EXPECT_EQ(expand(PolyKind::br, "T1"), poly("1 + 2*Y + Y^2*Z^2"));
}

TEST(ExpansionLV, Examples) {
  EXPECT_EQ(expand(PolyKind::lv, "M1"), poly("1 + Z"));
  EXPECT_EQ(expand(PolyKind::lv, "TH"), poly("X + Y + Y^2"));
  EXPECT_EQ(expand(PolyKind::lv, "point"), LaurentPoly(1));
  EXPECT_EQ(expand(PolyKind::lv, "T1"), poly("Z^2 + 2*Z + 1"));
}

TEST(Expansions, RejectDisconnectedOrNonCellular) {
  const GraphDocument parts = fixture("two_parts");
  EXPECT_THROW(expansion_krushkal(parts.graph, parts.order), std::invalid_argument);
  EXPECT_THROW(expansion_br(parts.graph.cellulation(), parts.order), std::invalid_argument);
  EXPECT_THROW(expansion_lv(parts.graph, parts.order), std::invalid_argument);
  const GraphDocument marked = fixture("T1_marked");
  EXPECT_THROW(expansion_krushkal(marked.graph, marked.order), std::invalid_argument);
  EXPECT_THROW(evaluate_quasitree(PolyKind::tutte, marked.graph, marked.order), std::invalid_argument);
}

TEST(Evaluate, MethodsAgreeOnFixtures) {
  for (const char* name : {"B1", "M1", "T1", "P2", "TH", "K4_twisted", "two_parts", "point"}) {
    const GraphDocument doc = fixture(name);
    for (PolyKind k : {PolyKind::krushkal, PolyKind::tutte, PolyKind::br, PolyKind::lv}) {
      EXPECT_EQ(evaluate_brute(k, doc.graph), evaluate_quasitree(k, doc.graph, doc.order)) << name << " " << to_string(k);
    }
  }
}

TEST(Evaluate, ProductOverComponents) {
  EXPECT_EQ(evaluate_quasitree(PolyKind::krushkal, fixture("two_parts").graph, fixture("two_parts").order),
            poly("A^(1/2) + B^(1/2)") * poly("A + B + 2"));
}

TEST(Evaluate, BruteTutteOnNonCellular) {
  EXPECT_EQ(evaluate_brute(PolyKind::tutte, fixture("T1_marked").graph), poly("1 + Y"));
  EXPECT_THROW(evaluate_brute(PolyKind::br, fixture("T1_marked").graph), std::invalid_argument);
}

TEST(Expansions, OrderIndependentTotals) {
  const GraphDocument doc = fixture("K4_twisted");
  const RibbonGraph& g = doc.graph.cellulation();
  std::vector<int> perm(g.num_edges());
  std::iota(perm.begin(), perm.end(), 0);
  const LaurentPoly k0 = expansion_krushkal(doc.graph, EdgeOrder(perm));
  const LaurentPoly b0 = expansion_br(g, EdgeOrder(perm));
  const LaurentPoly l0 = expansion_lv(doc.graph, EdgeOrder(perm));
  int tried = 0;
  while (std::next_permutation(perm.begin(), perm.end()) && tried < 60) {
    if (++tried % 7 != 0) continue;
    const EdgeOrder o(perm);
    EXPECT_EQ(expansion_krushkal(doc.graph, o), k0);
    EXPECT_EQ(expansion_br(g, o), b0);
    EXPECT_EQ(expansion_lv(doc.graph, o), l0);
  }
}

}  // namespace
}  // namespace qp
