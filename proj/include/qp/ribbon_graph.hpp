#pragma once

// Signed rotation systems and the topology of their spanning subgraphs.
//
// A ribbon graph is stored as half-edges grouped into per-vertex cyclic
// rotations, paired into edges, with one twist bit per edge. Edges are
// indexed in declaration order and edge subsets are 64-bit masks over those
// indices.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qp {

using EdgeSet = std::uint64_t;
inline constexpr std::size_t kMaxEdges = 64;

inline constexpr EdgeSet edge_bit(int e) { return EdgeSet{1} << e; }
inline constexpr bool contains(EdgeSet s, int e) { return (s >> e) & 1u; }
inline constexpr EdgeSet all_of(std::size_t n) { return n >= 64 ? ~EdgeSet{0} : (EdgeSet{1} << n) - 1; }
int popcount(EdgeSet s);

struct VertexSpec {
  std::string name;
  std::vector<std::string> rotation;  // half-edge labels, cyclic
};

struct EdgeSpec {
  std::string name;
  std::string first;   // half-edge label of end 1
  std::string second;  // half-edge label of end 2
  bool twisted = false;
};

class RibbonGraph {
 public:
  RibbonGraph() = default;
  // Validates labels, incidences and the 64-edge cap; throws std::invalid_argument.
  RibbonGraph(std::vector<VertexSpec> vertices, std::vector<EdgeSpec> edges);

  std::size_t num_vertices() const { return vertex_names_.size(); }
  std::size_t num_edges() const { return edge_names_.size(); }
  std::size_t num_half_edges() const { return half_edge_names_.size(); }
  EdgeSet all_edges() const { return all_of(num_edges()); }

  const std::string& vertex_name(int v) const { return vertex_names_[v]; }
  const std::string& edge_name(int e) const { return edge_names_[e]; }
  const std::string& half_edge_name(int h) const { return half_edge_names_[h]; }

  std::span<const int> rotation(int v) const { return rotations_[v]; }
  int vertex_of(int h) const { return he_vertex_[h]; }
  int edge_of(int h) const { return he_edge_[h]; }
  // Half-edge at end 0 or 1 of an edge.
  int end(int e, int which) const { return edge_ends_[e][which]; }
  int partner(int h) const;
  bool twisted(int e) const { return twisted_[e]; }
  bool is_loop(int e) const { return he_vertex_[edge_ends_[e][0]] == he_vertex_[edge_ends_[e][1]]; }
  int next_in_rotation(int h) const;

  std::optional<int> find_edge(const std::string& name) const;
  std::optional<int> find_vertex(const std::string& name) const;

  std::vector<VertexSpec> vertex_specs() const;
  std::vector<EdgeSpec> edge_specs() const;

  // Structural identity: labels, rotations (as written) and twists.
  friend bool operator==(const RibbonGraph&, const RibbonGraph&);

 private:
  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;
  std::vector<std::string> half_edge_names_;
  std::vector<std::vector<int>> rotations_;
  std::vector<int> he_vertex_;
  std::vector<int> he_pos_;
  std::vector<int> he_edge_;
  std::vector<std::array<int, 2>> edge_ends_;
  std::vector<bool> twisted_;
};

// Invariants of the spanning subgraph of `g` with edge set `f`.
int components(const RibbonGraph& g, EdgeSet f);
int boundary_components(const RibbonGraph& g, EdgeSet f);
// s(F) = 2c(F) - v(F) + e(F) - bc(F); twice the exponent of A in the Krushkal sum.
int genus_s(const RibbonGraph& g, EdgeSet f);
int nullity(const RibbonGraph& g, EdgeSet f);
bool is_orientable(const RibbonGraph& g, EdgeSet f);
inline bool is_orientable(const RibbonGraph& g) { return is_orientable(g, g.all_edges()); }

// Partial dual G^H. Edge labels and edge order are preserved; edges outside
// H keep their half-edge labels. Vertices that survive unchanged keep their
// names, new vertices are named w1, w2, ... avoiding clashes.
RibbonGraph partial_dual(const RibbonGraph& g, EdgeSet h);
inline RibbonGraph dual(const RibbonGraph& g) { return partial_dual(g, g.all_edges()); }

RibbonGraph delete_edge(const RibbonGraph& g, int e);
// Throws std::invalid_argument for a loop.
RibbonGraph contract_edge(const RibbonGraph& g, int e);
// Second graph's labels are primed until they no longer clash with the first.
RibbonGraph disjoint_union(const RibbonGraph& a, const RibbonGraph& b);

// Vertex-induced pieces, one per connected component, in order of first vertex.
// `edge_map[k][i]` is the index in `g` of edge i of component k.
struct ComponentSplit {
  std::vector<RibbonGraph> parts;
  std::vector<std::vector<int>> edge_map;
};
ComponentSplit split_components(const RibbonGraph& g);

// Remaps a subset of the edges of `g` after removing edge `e`.
EdgeSet drop_edge_bit(EdgeSet s, int e);

// Per-subset invariants (c, bc, s, nullity) over all 2^e edge subsets, used
// as a fingerprint for comparing constructed ribbon graphs without
// isomorphism testing.
struct SubgraphProfile {
  struct Entry {
    int components;
    int boundary_components;
    int genus_s;
    int nullity;
    bool operator==(const Entry&) const = default;
  };
  std::size_t num_vertices = 0;
  std::vector<Entry> entries;
  bool operator==(const SubgraphProfile&) const = default;
};
inline constexpr std::size_t kMaxProfileEdges = 20;
// Throws std::invalid_argument above kMaxProfileEdges edges.
SubgraphProfile subgraph_profile(const RibbonGraph& g);

}  // namespace qp
