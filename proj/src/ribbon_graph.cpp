#include "qp/ribbon_graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace qp {

int popcount(EdgeSet s) { return std::popcount(s); }

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Flags are (half-edge, side) pairs: flag 2h + s. Side 0 of a half-edge faces
// backwards along its vertex rotation, side 1 faces forwards, so the corner
// between consecutive half-edges h, h' joins (h, 1) with (h', 0).
inline int flag(int h, int side) { return 2 * h + side; }

// Partner of a flag along the long side of its edge ribbon.
inline int ribbon_flag(const RibbonGraph& g, int f) {
  const int h = f / 2;
  const int side = f % 2;
  const int other = g.partner(h);
  return flag(other, g.twisted(g.edge_of(h)) ? side : 1 - side);
}

}  // namespace

RibbonGraph::RibbonGraph(std::vector<VertexSpec> vertices, std::vector<EdgeSpec> edges) {
  if (edges.size() > kMaxEdges) {
    throw std::invalid_argument("ribbon graph has " + std::to_string(edges.size()) + " edges; at most " +
                                std::to_string(kMaxEdges) + " are supported");
  }
  std::unordered_map<std::string, int> he_index;
  std::unordered_set<std::string> seen_vertices;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (!seen_vertices.insert(vertices[v].name).second) {
      throw std::invalid_argument("duplicate vertex '" + vertices[v].name + "'");
    }
    vertex_names_.push_back(vertices[v].name);
    rotations_.emplace_back();
    for (const auto& label : vertices[v].rotation) {
      const int h = static_cast<int>(half_edge_names_.size());
      if (!he_index.emplace(label, h).second) {
        throw std::invalid_argument("half-edge '" + label + "' appears twice in vertex rotations");
      }
      half_edge_names_.push_back(label);
      he_vertex_.push_back(static_cast<int>(v));
      he_pos_.push_back(static_cast<int>(rotations_.back().size()));
      rotations_.back().push_back(h);
    }
  }
  he_edge_.assign(half_edge_names_.size(), -1);
  std::unordered_set<std::string> seen_edges;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& spec = edges[e];
    if (!seen_edges.insert(spec.name).second) {
      throw std::invalid_argument("duplicate edge '" + spec.name + "'");
    }
    std::array<int, 2> ends{};
    for (int which = 0; which < 2; ++which) {
      const std::string& label = which == 0 ? spec.first : spec.second;
      auto it = he_index.find(label);
      if (it == he_index.end()) {
        throw std::invalid_argument("edge '" + spec.name + "' uses unknown half-edge '" + label + "'");
      }
      if (he_edge_[it->second] != -1) {
        throw std::invalid_argument("half-edge '" + label + "' belongs to two edges");
      }
      he_edge_[it->second] = static_cast<int>(e);
      ends[which] = it->second;
    }
    edge_names_.push_back(spec.name);
    edge_ends_.push_back(ends);
    twisted_.push_back(spec.twisted);
  }
  for (std::size_t h = 0; h < half_edge_names_.size(); ++h) {
    if (he_edge_[h] == -1) {
      throw std::invalid_argument("half-edge '" + half_edge_names_[h] + "' belongs to no edge");
    }
  }
}

int RibbonGraph::partner(int h) const {
  const auto& ends = edge_ends_[he_edge_[h]];
  return ends[0] == h ? ends[1] : ends[0];
}

int RibbonGraph::next_in_rotation(int h) const {
  const auto& rot = rotations_[he_vertex_[h]];
  return rot[(he_pos_[h] + 1) % rot.size()];
}

std::optional<int> RibbonGraph::find_edge(const std::string& name) const {
  auto it = std::find(edge_names_.begin(), edge_names_.end(), name);
  if (it == edge_names_.end()) return std::nullopt;
  return static_cast<int>(it - edge_names_.begin());
}

std::optional<int> RibbonGraph::find_vertex(const std::string& name) const {
  auto it = std::find(vertex_names_.begin(), vertex_names_.end(), name);
  if (it == vertex_names_.end()) return std::nullopt;
  return static_cast<int>(it - vertex_names_.begin());
}

std::vector<VertexSpec> RibbonGraph::vertex_specs() const {
  std::vector<VertexSpec> out;
  out.reserve(num_vertices());
  for (std::size_t v = 0; v < num_vertices(); ++v) {
    VertexSpec spec{vertex_names_[v], {}};
    for (int h : rotations_[v]) spec.rotation.push_back(half_edge_names_[h]);
    out.push_back(std::move(spec));
  }
  return out;
}

std::vector<EdgeSpec> RibbonGraph::edge_specs() const {
  std::vector<EdgeSpec> out;
  out.reserve(num_edges());
  for (std::size_t e = 0; e < num_edges(); ++e) {
    out.push_back({edge_names_[e], half_edge_names_[edge_ends_[e][0]], half_edge_names_[edge_ends_[e][1]],
                   twisted_[e]});
  }
  return out;
}

bool operator==(const RibbonGraph& a, const RibbonGraph& b) {
  return a.vertex_names_ == b.vertex_names_ && a.edge_names_ == b.edge_names_ &&
         a.half_edge_names_ == b.half_edge_names_ && a.rotations_ == b.rotations_ &&
         a.edge_ends_ == b.edge_ends_ && a.twisted_ == b.twisted_;
}

int components(const RibbonGraph& g, EdgeSet f) {
  DisjointSets sets(g.num_vertices());
  int count = static_cast<int>(g.num_vertices());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (!contains(f, static_cast<int>(e))) continue;
    if (sets.unite(g.vertex_of(g.end(static_cast<int>(e), 0)), g.vertex_of(g.end(static_cast<int>(e), 1)))) {
      --count;
    }
  }
  return count;
}

int boundary_components(const RibbonGraph& g, EdgeSet f) {
  const std::size_t nflags = 2 * g.num_half_edges();
  // Scratch space reused across calls; subset sums call this millions of times.
  thread_local std::vector<int> corner;
  thread_local std::vector<char> visited;
  thread_local std::vector<int> kept;
  corner.assign(nflags, -1);
  visited.assign(nflags, 0);
  int count = 0;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    kept.clear();
    for (int h : g.rotation(static_cast<int>(v))) {
      if (contains(f, g.edge_of(h))) kept.push_back(h);
    }
    if (kept.empty()) {
      ++count;  // a bare vertex disc is bounded by one circle
      continue;
    }
    for (std::size_t i = 0; i < kept.size(); ++i) {
      const int a = flag(kept[i], 1);
      const int b = flag(kept[(i + 1) % kept.size()], 0);
      corner[a] = b;
      corner[b] = a;
    }
  }
  for (std::size_t start = 0; start < nflags; ++start) {
    if (corner[start] < 0 || visited[start]) continue;
    ++count;
    int cur = static_cast<int>(start);
    do {
      visited[cur] = 1;
      const int across = corner[cur];
      visited[across] = 1;
      cur = ribbon_flag(g, across);
    } while (cur != static_cast<int>(start));
  }
  return count;
}

int genus_s(const RibbonGraph& g, EdgeSet f) {
  return 2 * components(g, f) - static_cast<int>(g.num_vertices()) + popcount(f & g.all_edges()) -
         boundary_components(g, f);
}

int nullity(const RibbonGraph& g, EdgeSet f) {
  return popcount(f & g.all_edges()) - static_cast<int>(g.num_vertices()) + components(g, f);
}

bool is_orientable(const RibbonGraph& g, EdgeSet f) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<std::pair<int, bool>>> adj(n);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (!contains(f, static_cast<int>(e))) continue;
    const int u = g.vertex_of(g.end(static_cast<int>(e), 0));
    const int w = g.vertex_of(g.end(static_cast<int>(e), 1));
    const bool t = g.twisted(static_cast<int>(e));
    if (u == w) {
      if (t) return false;
      continue;
    }
    adj[u].emplace_back(w, t);
    adj[w].emplace_back(u, t);
  }
  // flip[v] records whether vertex v's rotation must be reversed.
  std::vector<int> flip(n, -1);
  std::vector<int> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (flip[root] != -1) continue;
    flip[root] = 0;
    stack.push_back(static_cast<int>(root));
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (auto [w, t] : adj[u]) {
        const int want = flip[u] ^ static_cast<int>(t);
        if (flip[w] == -1) {
          flip[w] = want;
          stack.push_back(w);
        } else if (flip[w] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

RibbonGraph partial_dual(const RibbonGraph& g, EdgeSet h) {
  // Work on the flag model: `corner` joins flags around a vertex, `ribbon`
  // joins flags along an edge side, `across` swaps the two sides of a
  // half-edge. Dualising an edge exchanges its ribbon and across maps.
  const int nh = static_cast<int>(g.num_half_edges());
  const int nflags = 2 * nh;
  std::vector<int> corner(nflags), ribbon(nflags), across(nflags);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    auto rot = g.rotation(static_cast<int>(v));
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const int a = flag(rot[i], 1);
      const int b = flag(rot[(i + 1) % rot.size()], 0);
      corner[a] = b;
      corner[b] = a;
    }
  }
  for (int f = 0; f < nflags; ++f) {
    const bool dualised = contains(h, g.edge_of(f / 2));
    const int along = ribbon_flag(g, f);
    const int side_swap = f ^ 1;
    ribbon[f] = dualised ? side_swap : along;
    across[f] = dualised ? along : side_swap;
  }

  // New half-edges reuse the old indices: for a dualised edge, the new
  // half-edge containing (end0, side 0) takes end0's index and label, the
  // one containing (end0, side 1) takes end1's.
  std::vector<int> new_he(nflags);
  for (int f = 0; f < nflags; ++f) new_he[f] = f / 2;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (!contains(h, static_cast<int>(e))) continue;
    const int h0 = g.end(static_cast<int>(e), 0);
    const int h1 = g.end(static_cast<int>(e), 1);
    for (int side = 0; side < 2; ++side) {
      const int f = flag(h0, side);
      const int id = side == 0 ? h0 : h1;
      new_he[f] = id;
      new_he[across[f]] = id;
    }
  }

  struct Orbit {
    std::vector<int> rotation;  // new half-edge ids
    int old_vertex = -1;        // set when this orbit reproduces an old vertex
  };
  std::vector<Orbit> orbits;
  std::vector<int> side0_flag(nh, -1);
  std::vector<char> visited(nflags, 0);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    auto rot = g.rotation(static_cast<int>(v));
    if (rot.empty()) {
      orbits.push_back({{}, static_cast<int>(v)});
      continue;
    }
    for (int he : rot) {
      for (int side = 0; side < 2; ++side) {
        const int start = flag(he, side);
        if (visited[start]) continue;
        Orbit orbit;
        int cur = start;
        do {
          const int other = across[cur];
          visited[cur] = visited[other] = 1;
          side0_flag[new_he[cur]] = cur;
          orbit.rotation.push_back(new_he[cur]);
          cur = corner[other];
        } while (cur != start);
        if (std::equal(orbit.rotation.begin(), orbit.rotation.end(), rot.begin(), rot.end())) {
          orbit.old_vertex = static_cast<int>(v);
        }
        orbits.push_back(std::move(orbit));
      }
    }
  }

  std::unordered_set<std::string> taken;
  for (const auto& o : orbits) {
    if (o.old_vertex >= 0) taken.insert(g.vertex_name(o.old_vertex));
  }
  int fresh = 0;
  std::vector<VertexSpec> vertices;
  for (const auto& o : orbits) {
    VertexSpec spec;
    if (o.old_vertex >= 0) {
      spec.name = g.vertex_name(o.old_vertex);
    } else {
      do {
        spec.name = "w" + std::to_string(++fresh);
      } while (taken.count(spec.name));
    }
    for (int id : o.rotation) spec.rotation.push_back(g.half_edge_name(id));
    vertices.push_back(std::move(spec));
  }

  std::vector<EdgeSpec> edges;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const int a = g.end(static_cast<int>(e), 0);
    const int b = g.end(static_cast<int>(e), 1);
    // Untwisted iff side 0 of one end runs along the edge to side 1 of the other.
    const bool twisted = ribbon[side0_flag[a]] == side0_flag[b];
    edges.push_back({g.edge_name(static_cast<int>(e)), g.half_edge_name(a), g.half_edge_name(b), twisted});
  }
  return RibbonGraph(std::move(vertices), std::move(edges));
}

EdgeSet drop_edge_bit(EdgeSet s, int e) {
  const EdgeSet low = s & (edge_bit(e) - 1);
  const EdgeSet high = e + 1 >= 64 ? 0 : (s >> (e + 1)) << e;
  return low | high;
}

RibbonGraph delete_edge(const RibbonGraph& g, int e) {
  auto vertices = g.vertex_specs();
  auto edges = g.edge_specs();
  const std::string a = edges[e].first;
  const std::string b = edges[e].second;
  for (auto& v : vertices) {
    std::erase_if(v.rotation, [&](const std::string& x) { return x == a || x == b; });
  }
  edges.erase(edges.begin() + e);
  return RibbonGraph(std::move(vertices), std::move(edges));
}

RibbonGraph contract_edge(const RibbonGraph& g, int e) {
  if (g.is_loop(e)) {
    throw std::invalid_argument("cannot contract loop '" + g.edge_name(e) + "'");
  }
  auto vertices = g.vertex_specs();
  auto edges = g.edge_specs();
  const int u = g.vertex_of(g.end(e, 0));
  const int w = g.vertex_of(g.end(e, 1));

  if (g.twisted(e)) {
    // Reverse w's local orientation; edges with exactly one end at w change twist.
    std::reverse(vertices[w].rotation.begin(), vertices[w].rotation.end());
    for (std::size_t k = 0; k < g.num_edges(); ++k) {
      const int ends_at_w = (g.vertex_of(g.end(static_cast<int>(k), 0)) == w) +
                            (g.vertex_of(g.end(static_cast<int>(k), 1)) == w);
      if (ends_at_w == 1) edges[k].twisted = !edges[k].twisted;
    }
  }

  auto after = [](const std::vector<std::string>& rot, const std::string& label) {
    auto it = std::find(rot.begin(), rot.end(), label);
    std::vector<std::string> out(it + 1, rot.end());
    out.insert(out.end(), rot.begin(), it);
    return out;
  };
  std::vector<std::string> merged = after(vertices[u].rotation, edges[e].first);
  const auto tail = after(vertices[w].rotation, edges[e].second);
  merged.insert(merged.end(), tail.begin(), tail.end());
  vertices[u].rotation = std::move(merged);
  vertices.erase(vertices.begin() + w);
  edges.erase(edges.begin() + e);
  return RibbonGraph(std::move(vertices), std::move(edges));
}

RibbonGraph disjoint_union(const RibbonGraph& a, const RibbonGraph& b) {
  auto vertices = a.vertex_specs();
  auto edges = a.edge_specs();
  std::unordered_set<std::string> vnames, enames, hnames;
  for (const auto& v : vertices) {
    vnames.insert(v.name);
    hnames.insert(v.rotation.begin(), v.rotation.end());
  }
  for (const auto& ed : edges) enames.insert(ed.name);
  auto fresh = [](std::unordered_set<std::string>& used, std::string name) {
    while (used.count(name)) name += '\'';
    used.insert(name);
    return name;
  };
  std::unordered_map<std::string, std::string> he_rename;
  for (auto v : b.vertex_specs()) {
    v.name = fresh(vnames, v.name);
    for (auto& label : v.rotation) {
      const std::string renamed = fresh(hnames, label);
      he_rename[label] = renamed;
      label = renamed;
    }
    vertices.push_back(std::move(v));
  }
  for (auto ed : b.edge_specs()) {
    ed.name = fresh(enames, ed.name);
    ed.first = he_rename.at(ed.first);
    ed.second = he_rename.at(ed.second);
    edges.push_back(std::move(ed));
  }
  return RibbonGraph(std::move(vertices), std::move(edges));
}

ComponentSplit split_components(const RibbonGraph& g) {
  DisjointSets sets(g.num_vertices());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    sets.unite(g.vertex_of(g.end(static_cast<int>(e), 0)), g.vertex_of(g.end(static_cast<int>(e), 1)));
  }
  std::unordered_map<int, int> part_of_root;
  std::vector<int> part_of_vertex(g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const int root = sets.find(static_cast<int>(v));
    auto [it, inserted] = part_of_root.emplace(root, static_cast<int>(part_of_root.size()));
    part_of_vertex[v] = it->second;
  }
  const std::size_t nparts = part_of_root.size();
  std::vector<std::vector<VertexSpec>> vspecs(nparts);
  std::vector<std::vector<EdgeSpec>> especs(nparts);
  ComponentSplit split;
  split.edge_map.resize(nparts);
  const auto all_v = g.vertex_specs();
  const auto all_e = g.edge_specs();
  for (std::size_t v = 0; v < g.num_vertices(); ++v) vspecs[part_of_vertex[v]].push_back(all_v[v]);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const int p = part_of_vertex[g.vertex_of(g.end(static_cast<int>(e), 0))];
    especs[p].push_back(all_e[e]);
    split.edge_map[p].push_back(static_cast<int>(e));
  }
  for (std::size_t p = 0; p < nparts; ++p) split.parts.emplace_back(std::move(vspecs[p]), std::move(especs[p]));
  return split;
}

SubgraphProfile subgraph_profile(const RibbonGraph& g) {
  if (g.num_edges() > kMaxProfileEdges) {
    throw std::invalid_argument("subgraph profile limited to " + std::to_string(kMaxProfileEdges) + " edges");
  }
  SubgraphProfile profile;
  profile.num_vertices = g.num_vertices();
  const EdgeSet count = EdgeSet{1} << g.num_edges();
  profile.entries.reserve(count);
  for (EdgeSet f = 0; f < count; ++f) {
    const int c = components(g, f);
    const int bc = boundary_components(g, f);
    const int v = static_cast<int>(g.num_vertices());
    const int e = popcount(f);
    profile.entries.push_back({c, bc, 2 * c - v + e - bc, e - v + c});
  }
  return profile;
}

}  // namespace qp
