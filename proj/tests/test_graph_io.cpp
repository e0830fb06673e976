#include <gtest/gtest.h>

#include "support.hpp"

namespace qp {
namespace {

using testing::fixture;

std::size_t error_line(std::string_view text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return 0;
}

std::string error_text(std::string_view text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

TEST(Parse, TwistedLoop) {
  const GraphDocument doc = parse_document("vertex v: a1 a2\nedge e1: a1 a2 -\n");
  const RibbonGraph& g = doc.graph.cellulation();
  EXPECT_EQ(g.num_vertices(), 1u);
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_TRUE(g.twisted(0));
  EXPECT_TRUE(doc.graph.is_cellular());
  EXPECT_EQ(doc.order, EdgeOrder::identity(1));
}

TEST(Parse, TorusBouquetWithCommentsAndBlankLines) {
  const GraphDocument doc = parse_document(
      "# torus\n\nvertex v: a1 b1 a2 b2   # rotation\nedge ea: a1 a2 +\nedge eb:b1 b2 +\norder: eb ea\n");
  const RibbonGraph& g = doc.graph.cellulation();
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_FALSE(g.twisted(1));
  EXPECT_EQ(doc.order.lowest_first(), (std::vector<int>{1, 0}));
  EXPECT_EQ(boundary_components(g, g.all_edges()), 1);
}

TEST(Parse, MarkedSubset) {
  const GraphDocument doc = fixture("T1_marked");
  EXPECT_EQ(doc.graph.marked(), 1u);
  EXPECT_FALSE(doc.graph.is_cellular());
  EXPECT_EQ(parse_document("vertex v: a b\nedge e: a b +\nmarked:\n").graph.marked(), 0u);
}

TEST(ParseErrors, DuplicateHalfEdgeNamesItAndTheLine) {
  const std::string text = "vertex v: a1 a2\nvertex w: a1\nedge e1: a1 a2 +\n";
  EXPECT_EQ(error_line(text), 2u);
  EXPECT_NE(error_text(text).find("a1"), std::string::npos);
}

TEST(ParseErrors, Lines) {
  EXPECT_EQ(error_line("vertex v: a b\nvertex v: c d\n"), 2u);
  EXPECT_EQ(error_line("vertex v: a b\nedge e: a b *\n"), 2u);
  EXPECT_EQ(error_line("vertex v: a b\nedge e: a +\n"), 2u);
  EXPECT_EQ(error_line("vertex v: a b\nedge e: a b +\nmarked: e\nmarked: e\n"), 4u);
  EXPECT_EQ(error_line("vertex v: a b\nface f: a\n"), 2u);
  EXPECT_EQ(error_line("vertex v: a b c d\nedge e: a b +\nedge e: c d +\n"), 3u);
  EXPECT_EQ(error_line("vertex v: a b\nedge e: a a +\n"), 2u);
  EXPECT_EQ(error_line("vertex v: a b\nedge e: a z +\n"), 2u);
  EXPECT_EQ(error_line("vertex v: a b c\nedge e: a b +\nedge f: b c +\n"), 3u);
  EXPECT_EQ(error_line("vertex v: a b c\nedge e: a b +\n"), 1u);
  EXPECT_EQ(error_line("vertex v: a b\nedge e: a b +\nmarked: f\n"), 3u);
  EXPECT_EQ(error_line("vertex v: a b\nedge e: a b +\norder: e e\n"), 3u);
  EXPECT_EQ(error_line("vertex v: a b c d\nedge e: a b +\nedge f: c d +\norder: f\n"), 4u);
  EXPECT_EQ(error_line("vertex v a b\n"), 1u);
  EXPECT_EQ(error_line("vertex v: a : b\n"), 1u);
}

TEST(ParseErrors, TooManyEdges) {
  std::string text = "vertex v:";
  for (int i = 0; i < 65; ++i) text += " a" + std::to_string(i) + " b" + std::to_string(i);
  text += "\n";
  for (int i = 0; i < 65; ++i) text += "edge e" + std::to_string(i) + ": a" + std::to_string(i) + " b" + std::to_string(i) + " +\n";
  EXPECT_EQ(error_line(text), 66u);
}

TEST(ParseErrors, MissingFile) {
  EXPECT_THROW(read_document("/nonexistent/graph.qp"), ParseError);
}

TEST(Serialize, RoundTripsEveryFixture) {
  for (const char* name : {"B1", "M1", "T1", "T1_marked", "P2", "TH", "K4_twisted", "two_parts", "point"}) {
    const GraphDocument doc = fixture(name);
    const std::string text = serialize(doc);
    const GraphDocument again = parse_document(text);
    EXPECT_EQ(again.graph.cellulation(), doc.graph.cellulation()) << name;
    EXPECT_EQ(again.graph.marked(), doc.graph.marked()) << name;
    EXPECT_EQ(again.order, doc.order) << name;
    EXPECT_EQ(serialize(again), text) << name;
  }
}

TEST(Serialize, CanonicalText) {
  EXPECT_EQ(serialize(fixture("M1")), "vertex v: a1 a2\nedge e1: a1 a2 -\n");
  EXPECT_EQ(serialize(fixture("T1_marked")),
            "vertex v: a1 b1 a2 b2\nedge ea: a1 a2 +\nedge eb: b1 b2 +\nmarked: ea\n");
  EXPECT_EQ(serialize(fixture("point")), "vertex v:\n");
  const std::string k4 = serialize(fixture("K4_twisted"));
  EXPECT_NE(k4.find("\norder: ec ea ef eb ee ed\n"), std::string::npos);
  EXPECT_EQ(k4.find("marked"), std::string::npos);
}

TEST(Serialize, EmptyMarkedLine) {
  const GraphDocument doc = parse_document("vertex v: a b\nedge e: a b +\nmarked:\n");
  EXPECT_EQ(serialize(doc), "vertex v: a b\nedge e: a b +\nmarked:\n");
}

TEST(EdgeLists, ParseAndFormat) {
  const RibbonGraph k4 = testing::fixture_graph("K4_twisted");
  EXPECT_EQ(parse_edge_list(k4, "ea,ec"), 0b101u);
  EXPECT_EQ(parse_edge_list(k4, "ef ea"), 0b100001u);
  EXPECT_EQ(parse_edge_list(k4, ""), 0u);
  EXPECT_THROW(parse_edge_list(k4, "ea,zz"), std::invalid_argument);
  EXPECT_EQ(format_edge_set(k4, 0b100001), "ea ef");
  EXPECT_EQ(format_edge_set(k4, 0), "");
}

}  // namespace
}  // namespace qp
