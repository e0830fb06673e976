#pragma once

// A graph G embedded in a closed surface, possibly non-cellularly.
//
// The surface is described by a cellulation G~ (a ribbon graph), and G is the
// spanning subgraph on a marked subset of its edges. The Poincare dual of G~
// is computed once at construction; its edge i crosses edge i of G~.

#include "qp/ribbon_graph.hpp"

namespace qp {

struct SurfaceInvariants {
  int components;  // c(Sigma)
  int euler;       // chi(Sigma)
  int delta;       // 2c(Sigma) - chi(Sigma)
  bool operator==(const SurfaceInvariants&) const = default;
};

struct ComplementInvariants {
  int complement_components;  // c(Sigma \ F)
  int genus_s_perp;           // s-perp(F)
  int kernel_dim;             // c(Sigma \ F) - c(Sigma)
  bool operator==(const ComplementInvariants&) const = default;
};

class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;
  explicit EmbeddedGraph(RibbonGraph cellulation);
  // Throws std::invalid_argument if `marked` names edges outside the cellulation.
  EmbeddedGraph(RibbonGraph cellulation, EdgeSet marked);

  const RibbonGraph& cellulation() const { return cellulation_; }
  const RibbonGraph& dual_cellulation() const { return dual_; }
  EdgeSet marked() const { return marked_; }
  bool is_cellular() const { return marked_ == cellulation_.all_edges(); }

  SurfaceInvariants surface() const { return surface_; }
  // `f` must be a subset of the marked edges.
  ComplementInvariants complement(EdgeSet f) const;

 private:
  RibbonGraph cellulation_;
  RibbonGraph dual_;
  EdgeSet marked_ = 0;
  SurfaceInvariants surface_{};
};

SurfaceInvariants surface_invariants(const EmbeddedGraph& eg);
ComplementInvariants complement_invariants(const EmbeddedGraph& eg, EdgeSet f);

// e stays in the cellulation but is no longer marked.
EmbeddedGraph unmark_edge(const EmbeddedGraph& eg, int e);
// Contracts a non-loop edge in both G and G~.
EmbeddedGraph contract_edge(const EmbeddedGraph& eg, int e);
EmbeddedGraph disjoint_union(const EmbeddedGraph& a, const EmbeddedGraph& b);

// One embedded graph per component of the surface; marked edges follow along.
struct EmbeddedSplit {
  std::vector<EmbeddedGraph> parts;
  std::vector<std::vector<int>> edge_map;
};
EmbeddedSplit split_components(const EmbeddedGraph& eg);

}  // namespace qp
