#include "qp/quasi_tree.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace qp {

EdgeOrder::EdgeOrder(std::vector<int> lowest_first) : order_(std::move(lowest_first)), rank_(order_.size(), -1) {
  for (std::size_t pos = 0; pos < order_.size(); ++pos) {
    const int e = order_[pos];
    if (e < 0 || static_cast<std::size_t>(e) >= order_.size() || rank_[e] != -1) {
      throw std::invalid_argument("edge order is not a permutation");
    }
    rank_[e] = static_cast<int>(pos);
  }
}

EdgeOrder EdgeOrder::identity(std::size_t n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return EdgeOrder(std::move(order));
}

EdgeOrder EdgeOrder::restricted(const std::vector<int>& edge_map) const {
  std::vector<int> local(edge_map.size());
  std::iota(local.begin(), local.end(), 0);
  std::sort(local.begin(), local.end(), [&](int a, int b) { return rank_[edge_map[a]] < rank_[edge_map[b]]; });
  return EdgeOrder(std::move(local));
}

namespace {

void require_connected(const RibbonGraph& g) {
  if (components(g, g.all_edges()) != 1) {
    throw std::invalid_argument("quasi-tree methods need a connected ribbon graph");
  }
}

// Component index of every vertex of the spanning subgraph on `f`,
// numbered in order of first vertex.
std::vector<int> component_labels(const RibbonGraph& g, EdgeSet f, int& count) {
  std::vector<int> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (!contains(f, static_cast<int>(e))) continue;
    const int a = find(g.vertex_of(g.end(static_cast<int>(e), 0)));
    const int b = find(g.vertex_of(g.end(static_cast<int>(e), 1)));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> label(g.num_vertices(), -1);
  std::vector<int> root_label(g.num_vertices(), -1);
  count = 0;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const int r = find(static_cast<int>(v));
    if (root_label[r] < 0) root_label[r] = count++;
    label[v] = root_label[r];
  }
  return label;
}

}  // namespace

std::vector<EdgeSet> quasi_trees(const RibbonGraph& g) {
  require_connected(g);
  if (g.num_edges() >= 63) throw std::invalid_argument("too many edges to enumerate quasi-trees");
  std::vector<EdgeSet> out;
  const EdgeSet count = EdgeSet{1} << g.num_edges();
  for (EdgeSet f = 0; f < count; ++f) {
    if (boundary_components(g, f) == 1) out.push_back(f);
  }
  return out;
}

VertexWord one_vertex_word(const RibbonGraph& g, EdgeSet quasi_tree) {
  if (boundary_components(g, quasi_tree) != 1) {
    throw std::invalid_argument("edge set is not a quasi-tree");
  }
  const RibbonGraph pd = partial_dual(g, quasi_tree);
  VertexWord w;
  for (int h : pd.rotation(0)) {
    const int e = pd.edge_of(h);
    w.letters.push_back({e, pd.end(e, 0) == h ? 1 : 2, pd.twisted(e)});
  }
  return w;
}

RibbonGraph word_to_ribbon_graph(const VertexWord& w, const RibbonGraph& g) {
  auto label = [&](int e, int end) { return g.edge_name(e) + "." + std::to_string(end); };
  VertexSpec vertex{"v", {}};
  std::vector<EdgeSpec> edges(g.num_edges());
  for (const auto& letter : w.letters) {
    vertex.rotation.push_back(label(letter.edge, letter.end));
    edges[letter.edge] = {g.edge_name(letter.edge), label(letter.edge, 1), label(letter.edge, 2), letter.twisted};
  }
  return RibbonGraph({vertex}, std::move(edges));
}

bool links(const VertexWord& w, int e, int f) {
  int pe[2] = {-1, -1};
  int pf[2] = {-1, -1};
  int ne = 0;
  int nf = 0;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (w.letters[i].edge == e && ne < 2) pe[ne++] = static_cast<int>(i);
    if (w.letters[i].edge == f && nf < 2) pf[nf++] = static_cast<int>(i);
  }
  if (ne < 2 || nf < 2 || e == f) return false;
  auto inside = [&](int p) { return pe[0] < p && p < pe[1]; };
  return inside(pf[0]) != inside(pf[1]);
}

ActivityPartition activities(const RibbonGraph& g, const EdgeOrder& order, EdgeSet quasi_tree) {
  const VertexWord w = one_vertex_word(g, quasi_tree);
  const std::size_t n = g.num_edges();
  std::vector<std::array<int, 2>> pos(n, {-1, -1});
  std::vector<bool> twisted(n, false);
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const auto& l = w.letters[i];
    pos[l.edge][l.end - 1] = static_cast<int>(i);
    twisted[l.edge] = l.twisted;
  }
  for (auto& p : pos) {
    if (p[0] > p[1]) std::swap(p[0], p[1]);
  }
  auto linked = [&](int e, int f) {
    auto inside = [&](int p) { return pos[e][0] < p && p < pos[e][1]; };
    return inside(pos[f][0]) != inside(pos[f][1]);
  };

  ActivityPartition part;
  for (std::size_t e = 0; e < n; ++e) {
    const int ei = static_cast<int>(e);
    bool live = true;
    for (std::size_t f = 0; f < n && live; ++f) {
      if (order.rank(static_cast<int>(f)) < order.rank(ei) && linked(ei, static_cast<int>(f))) live = false;
    }
    const bool internal = contains(quasi_tree, ei);
    EdgeSet* target;
    if (!live) {
      target = internal ? &part.dead_internal : &part.dead_external;
    } else if (!twisted[e]) {
      target = internal ? &part.live_internal_orientable : &part.live_external_orientable;
    } else {
      target = internal ? &part.live_internal_nonorientable : &part.live_external_nonorientable;
    }
    *target |= edge_bit(ei);
  }
  return part;
}

ResolutionTree resolution_tree(const RibbonGraph& g, const EdgeOrder& order) {
  const std::vector<EdgeSet> qts = quasi_trees(g);
  auto admits = [&](EdgeSet zeros, EdgeSet ones) {
    for (EdgeSet q : qts) {
      if ((q & zeros) == 0 && (q & ones) == ones) return true;
    }
    return false;
  };

  ResolutionTree tree;
  // Explicit stack of (node, number of order positions still to examine),
  // pushed so that the 0-child is expanded before the 1-child.
  std::vector<std::pair<int, std::size_t>> pending;
  tree.nodes.push_back({});
  pending.emplace_back(0, order.size());
  while (!pending.empty()) {
    auto [id, level] = pending.back();
    pending.pop_back();
    const EdgeSet zeros = tree.nodes[id].zeros;
    const EdgeSet ones = tree.nodes[id].ones;
    bool branched = false;
    for (; level > 0; --level) {
      const int e = order.at(level - 1);
      const bool has0 = admits(zeros | edge_bit(e), ones);
      const bool has1 = admits(zeros, ones | edge_bit(e));
      if (!(has0 && has1)) continue;  // nugatory
      ResolutionNode zero_child;
      zero_child.zeros = zeros | edge_bit(e);
      zero_child.ones = ones;
      ResolutionNode one_child;
      one_child.zeros = zeros;
      one_child.ones = ones | edge_bit(e);
      const int c0 = static_cast<int>(tree.nodes.size());
      tree.nodes.push_back(zero_child);
      tree.nodes.push_back(one_child);
      tree.nodes[id].branch_edge = e;
      tree.nodes[id].child0 = c0;
      tree.nodes[id].child1 = c0 + 1;
      pending.emplace_back(c0 + 1, level - 1);
      pending.emplace_back(c0, level - 1);
      branched = true;
      break;
    }
    if (branched) continue;
    std::optional<EdgeSet> found;
    for (EdgeSet q : qts) {
      if ((q & zeros) != 0 || (q & ones) != ones) continue;
      if (found) throw std::logic_error("resolution tree leaf admits several quasi-trees");
      found = q;
    }
    if (!found) throw std::logic_error("resolution tree leaf admits no quasi-tree");
    tree.nodes[id].quasi_tree = found;
    tree.leaves.push_back(id);
  }
  return tree;
}

QuasiTreeTable::QuasiTreeTable(const RibbonGraph& g, const EdgeOrder& order) {
  for (EdgeSet q : quasi_trees(g)) entries_.push_back({q, activities(g, order, q)});
}

QuasiTreeMatch subgraph_to_quasitree(const QuasiTreeTable& table, EdgeSet f) {
  std::optional<QuasiTreeMatch> match;
  for (const auto& entry : table.entries()) {
    const EdgeSet free = entry.partition.free_edges();
    if ((f & ~free) != entry.partition.vi()) continue;
    if (match) throw std::logic_error("spanning subgraph matches several quasi-trees");
    match = QuasiTreeMatch{entry.quasi_tree, f & free};
  }
  if (!match) throw std::logic_error("spanning subgraph matches no quasi-tree");
  return *match;
}

QuasiTreeMatch subgraph_to_quasitree(const RibbonGraph& g, const EdgeOrder& order, EdgeSet f) {
  return subgraph_to_quasitree(QuasiTreeTable(g, order), f);
}

OrdinaryGraph quotient_graph(const RibbonGraph& g, EdgeSet contracted, EdgeSet kept) {
  OrdinaryGraph out;
  const std::vector<int> label = component_labels(g, contracted, out.num_vertices);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (!contains(kept, static_cast<int>(e))) continue;
    out.edges.push_back({label[g.vertex_of(g.end(static_cast<int>(e), 0))],
                         label[g.vertex_of(g.end(static_cast<int>(e), 1))], static_cast<int>(e)});
  }
  return out;
}

MinorGraphs build_minor_graphs(const RibbonGraph& g, const RibbonGraph& g_dual, const ActivityPartition& part) {
  return {quotient_graph(g, part.vi(), part.live_internal_orientable),
          quotient_graph(g_dual, part.ve(), part.live_external_orientable)};
}

MinorGraphs build_minor_graphs(const RibbonGraph& g, const EdgeOrder& order, EdgeSet quasi_tree) {
  return build_minor_graphs(g, dual(g), activities(g, order, quasi_tree));
}

}  // namespace qp
