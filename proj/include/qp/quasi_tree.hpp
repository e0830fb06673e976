#pragma once

// Quasi-trees (one-boundary spanning subgraphs), their edge activities with
// respect to a total edge order, the binary tree of partial resolutions, and
// the resulting partition of all spanning subgraphs.

#include <optional>
#include <string>
#include <vector>

#include "qp/embedded_graph.hpp"
#include "qp/matroid.hpp"

namespace qp {

// A total order on edge indices; position 0 is the lowest edge.
class EdgeOrder {
 public:
  EdgeOrder() = default;
  // Throws std::invalid_argument unless `lowest_first` is a permutation of 0..n-1.
  explicit EdgeOrder(std::vector<int> lowest_first);
  static EdgeOrder identity(std::size_t n);

  std::size_t size() const { return order_.size(); }
  int rank(int e) const { return rank_[e]; }
  // Edge at position `pos`, lowest first.
  int at(std::size_t pos) const { return order_[pos]; }
  const std::vector<int>& lowest_first() const { return order_; }
  // Restriction to a subset of edges, renumbered by `edge_map` (new -> old).
  EdgeOrder restricted(const std::vector<int>& edge_map) const;

  bool operator==(const EdgeOrder&) const = default;

 private:
  std::vector<int> order_;
  std::vector<int> rank_;
};

// All spanning subgraphs with one boundary component, in increasing bitmask
// order. Throws std::invalid_argument for a disconnected graph.
std::vector<EdgeSet> quasi_trees(const RibbonGraph& g);

// One letter per half-edge met around the single vertex of G^{E(Q)}.
struct WordLetter {
  int edge;
  int end;        // 1 or 2
  bool twisted;   // the edge is a twisted loop at this vertex
  bool operator==(const WordLetter&) const = default;
};

struct VertexWord {
  std::vector<WordLetter> letters;
};

// Throws std::invalid_argument unless Q has exactly one boundary component.
VertexWord one_vertex_word(const RibbonGraph& g, EdgeSet quasi_tree);
// Rebuilds the one-vertex ribbon graph a word describes (edge labels from `g`).
RibbonGraph word_to_ribbon_graph(const VertexWord& w, const RibbonGraph& g);

// True iff the two occurrences of e and of f alternate around the word.
bool links(const VertexWord& w, int e, int f);

struct ActivityPartition {
  EdgeSet dead_internal = 0;                 // DI
  EdgeSet live_internal_orientable = 0;      // I_o
  EdgeSet live_internal_nonorientable = 0;   // I_n
  EdgeSet dead_external = 0;                 // DE
  EdgeSet live_external_orientable = 0;      // E_o
  EdgeSet live_external_nonorientable = 0;   // E_n

  EdgeSet vi() const { return dead_internal | live_internal_nonorientable; }
  EdgeSet ve() const { return dead_external | live_external_nonorientable; }
  EdgeSet free_edges() const { return live_internal_orientable | live_external_orientable; }
  EdgeSet internal() const { return dead_internal | live_internal_orientable | live_internal_nonorientable; }
  bool operator==(const ActivityPartition&) const = default;
};

ActivityPartition activities(const RibbonGraph& g, const EdgeOrder& order, EdgeSet quasi_tree);

// Node of the resolution tree: edges in `zeros` resolve to 0, in `ones` to 1,
// everything else is unresolved.
struct ResolutionNode {
  EdgeSet zeros = 0;
  EdgeSet ones = 0;
  int branch_edge = -1;  // edge resolved by the children, -1 at a leaf
  int child0 = -1;
  int child1 = -1;
  std::optional<EdgeSet> quasi_tree;  // set at leaves

  bool is_leaf() const { return child0 < 0; }
  EdgeSet unresolved(EdgeSet all) const { return all & ~(zeros | ones); }
};

struct ResolutionTree {
  std::vector<ResolutionNode> nodes;  // nodes[0] is the root
  std::vector<int> leaves;            // depth-first order, 0-child first
};

// Edges are taken from the highest in `order` downwards; nugatory edges are
// left unresolved. Throws std::invalid_argument for a disconnected graph.
ResolutionTree resolution_tree(const RibbonGraph& g, const EdgeOrder& order);

// Activity partitions of every quasi-tree, used to place spanning subgraphs.
class QuasiTreeTable {
 public:
  QuasiTreeTable(const RibbonGraph& g, const EdgeOrder& order);

  struct Entry {
    EdgeSet quasi_tree;
    ActivityPartition partition;
  };
  const std::vector<Entry>& entries() const& { return entries_; }
  // Safe in a range-for over a temporary table.
  std::vector<Entry> entries() && { return std::move(entries_); }

 private:
  std::vector<Entry> entries_;
};

struct QuasiTreeMatch {
  EdgeSet quasi_tree;
  EdgeSet free_part;  // S, a subset of I_o(Q) | E_o(Q)
  bool operator==(const QuasiTreeMatch&) const = default;
};

// The unique (Q, S) with E(F) = VI(Q) | S. Throws std::logic_error if none exists.
QuasiTreeMatch subgraph_to_quasitree(const QuasiTreeTable& table, EdgeSet f);
QuasiTreeMatch subgraph_to_quasitree(const RibbonGraph& g, const EdgeOrder& order, EdgeSet f);

// Vertices are the components of the spanning subgraph on `contracted`,
// edges are those of `kept`.
OrdinaryGraph quotient_graph(const RibbonGraph& g, EdgeSet contracted, EdgeSet kept);

// G_Q: vertices are the components of F_{VI(Q)}, edges are I_o(Q).
// G*_{Q*}: vertices are the components of R_{VE(Q)} in G*, edges are E_o(Q).
// Edge labels are the ribbon-graph edge indices.
struct MinorGraphs {
  OrdinaryGraph primal;
  OrdinaryGraph dual;
};

MinorGraphs build_minor_graphs(const RibbonGraph& g, const RibbonGraph& g_dual, const ActivityPartition& part);
MinorGraphs build_minor_graphs(const RibbonGraph& g, const EdgeOrder& order, EdgeSet quasi_tree);

}  // namespace qp
