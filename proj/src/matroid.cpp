#include "qp/matroid.hpp"

#include <numeric>
#include <stdexcept>

namespace qp {

int components(const OrdinaryGraph& g, EdgeSet f) {
  std::vector<int> parent(g.num_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int count = g.num_vertices;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (!contains(f, static_cast<int>(i))) continue;
    const int a = find(g.edges[i].u);
    const int b = find(g.edges[i].v);
    if (a != b) {
      parent[b] = a;
      --count;
    }
  }
  return count;
}

int nullity(const OrdinaryGraph& g, EdgeSet f) {
  return popcount(f & g.all_edges()) - g.num_vertices + components(g, f);
}

OrdinaryGraph underlying_graph(const RibbonGraph& rg, EdgeSet keep) {
  OrdinaryGraph g;
  g.num_vertices = static_cast<int>(rg.num_vertices());
  for (std::size_t e = 0; e < rg.num_edges(); ++e) {
    if (!contains(keep, static_cast<int>(e))) continue;
    g.edges.push_back({rg.vertex_of(rg.end(static_cast<int>(e), 0)), rg.vertex_of(rg.end(static_cast<int>(e), 1)),
                       static_cast<int>(e)});
  }
  return g;
}

int cycle_rank(const OrdinaryGraph& g, EdgeSet f) { return g.num_vertices - components(g, f); }

RankFunction cycle_matroid(const OrdinaryGraph& g) {
  if (g.edges.size() > kMaxEdges) throw std::invalid_argument("matroid ground set exceeds 64 elements");
  return RankFunction(g.edges.size(), [g](EdgeSet f) { return cycle_rank(g, f); });
}

int dual_rank(const RankFunction& r, EdgeSet h) {
  const EdgeSet m = r.ground();
  return popcount(h) + r(m & ~h) - r(m);
}

RankFunction dual_matroid(const RankFunction& r) {
  return RankFunction(r.ground_size(), [r](EdgeSet h) { return dual_rank(r, h); });
}

int nullity_of(const RankFunction& r, EdgeSet h) { return popcount(h) - r(h); }

bool satisfies_rank_axioms(const RankFunction& r) {
  if (r(0) != 0) return false;
  const std::size_t n = r.ground_size();
  const EdgeSet count = EdgeSet{1} << n;
  std::vector<int> rank(count);
  for (EdgeSet s = 0; s < count; ++s) rank[s] = r(s);
  for (EdgeSet s = 0; s < count; ++s) {
    for (std::size_t y = 0; y < n; ++y) {
      if (contains(s, static_cast<int>(y))) continue;
      const int step = rank[s | edge_bit(static_cast<int>(y))] - rank[s];
      if (step != 0 && step != 1) return false;
      if (step != 0) continue;
      for (std::size_t z = y + 1; z < n; ++z) {
        if (contains(s, static_cast<int>(z))) continue;
        if (rank[s | edge_bit(static_cast<int>(z))] == rank[s] &&
            rank[s | edge_bit(static_cast<int>(y)) | edge_bit(static_cast<int>(z))] != rank[s]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace qp
