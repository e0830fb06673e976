#include "qp/embedded_graph.hpp"

#include <stdexcept>

namespace qp {

EmbeddedGraph::EmbeddedGraph(RibbonGraph cellulation)
    : EmbeddedGraph(cellulation, cellulation.all_edges()) {}

EmbeddedGraph::EmbeddedGraph(RibbonGraph cellulation, EdgeSet marked)
    : cellulation_(std::move(cellulation)), marked_(marked) {
  if ((marked_ & ~cellulation_.all_edges()) != 0) {
    throw std::invalid_argument("marked edge set exceeds the cellulation");
  }
  dual_ = dual(cellulation_);
  const RibbonGraph& g = cellulation_;
  surface_.components = components(g, g.all_edges());
  surface_.euler = static_cast<int>(g.num_vertices()) - static_cast<int>(g.num_edges()) +
                   boundary_components(g, g.all_edges());
  surface_.delta = 2 * surface_.components - surface_.euler;
}

ComplementInvariants EmbeddedGraph::complement(EdgeSet f) const {
  // F* lives in the dual cellulation on the edges that do not cross F.
  const EdgeSet dual_edges = cellulation_.all_edges() & ~f;
  const int c = components(dual_, dual_edges);
  return {c, genus_s(dual_, dual_edges), c - surface_.components};
}

SurfaceInvariants surface_invariants(const EmbeddedGraph& eg) { return eg.surface(); }

ComplementInvariants complement_invariants(const EmbeddedGraph& eg, EdgeSet f) { return eg.complement(f); }

EmbeddedGraph unmark_edge(const EmbeddedGraph& eg, int e) {
  return EmbeddedGraph(eg.cellulation(), eg.marked() & ~edge_bit(e));
}

EmbeddedGraph contract_edge(const EmbeddedGraph& eg, int e) {
  return EmbeddedGraph(contract_edge(eg.cellulation(), e), drop_edge_bit(eg.marked() & ~edge_bit(e), e));
}

EmbeddedGraph disjoint_union(const EmbeddedGraph& a, const EmbeddedGraph& b) {
  const RibbonGraph joined = disjoint_union(a.cellulation(), b.cellulation());
  const std::size_t shift = a.cellulation().num_edges();
  const EdgeSet marked = a.marked() | (shift >= 64 ? 0 : b.marked() << shift);
  return EmbeddedGraph(joined, marked);
}

EmbeddedSplit split_components(const EmbeddedGraph& eg) {
  ComponentSplit split = split_components(eg.cellulation());
  EmbeddedSplit out;
  for (std::size_t p = 0; p < split.parts.size(); ++p) {
    EdgeSet marked = 0;
    for (std::size_t i = 0; i < split.edge_map[p].size(); ++i) {
      if (contains(eg.marked(), split.edge_map[p][i])) marked |= edge_bit(static_cast<int>(i));
    }
    out.parts.emplace_back(std::move(split.parts[p]), marked);
  }
  out.edge_map = std::move(split.edge_map);
  return out;
}

}  // namespace qp
