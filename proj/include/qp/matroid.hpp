#pragma once

// Ordinary (abstract) graphs and the graphic/cographic matroid rank functions
// built on them.

#include <functional>
#include <string>
#include <vector>

#include "qp/ribbon_graph.hpp"

namespace qp {

struct GraphEdge {
  int u;
  int v;
  int label;  // caller-defined tag, e.g. the ribbon-graph edge index
  bool operator==(const GraphEdge&) const = default;
};

struct OrdinaryGraph {
  int num_vertices = 0;
  std::vector<GraphEdge> edges;

  EdgeSet all_edges() const { return all_of(edges.size()); }
  bool operator==(const OrdinaryGraph&) const = default;
};

int components(const OrdinaryGraph& g, EdgeSet f);
int nullity(const OrdinaryGraph& g, EdgeSet f);

// The underlying graph of `rg` restricted to the edges in `keep`; labels are
// the ribbon-graph edge indices.
OrdinaryGraph underlying_graph(const RibbonGraph& rg, EdgeSet keep);
inline OrdinaryGraph underlying_graph(const RibbonGraph& rg) { return underlying_graph(rg, rg.all_edges()); }

class RankFunction {
 public:
  RankFunction(std::size_t ground_size, std::function<int(EdgeSet)> rank)
      : ground_size_(ground_size), rank_(std::move(rank)) {}

  std::size_t ground_size() const { return ground_size_; }
  EdgeSet ground() const { return all_of(ground_size_); }
  int operator()(EdgeSet s) const { return rank_(s); }

 private:
  std::size_t ground_size_;
  std::function<int(EdgeSet)> rank_;
};

// r(F) = v(G) - c(F)
int cycle_rank(const OrdinaryGraph& g, EdgeSet f);
RankFunction cycle_matroid(const OrdinaryGraph& g);

// r*(H) = |H| + r(M \ H) - r(M)
int dual_rank(const RankFunction& r, EdgeSet h);
RankFunction dual_matroid(const RankFunction& r);
inline RankFunction bond_matroid(const OrdinaryGraph& g) { return dual_matroid(cycle_matroid(g)); }

// n(H) = |H| - r(H)
int nullity_of(const RankFunction& r, EdgeSet h);

// Exhaustively checks the three rank axioms over every subset of the ground set.
bool satisfies_rank_axioms(const RankFunction& r);

}  // namespace qp
