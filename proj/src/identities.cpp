#include "qp/identities.hpp"

#include <exception>
#include <functional>
#include <optional>

#include "qp/expansions.hpp"
#include "qp/matroid.hpp"

namespace qp {

namespace {

using Failure = std::optional<std::string>;

Verdict skipped(std::string name, std::string why) { return {std::move(name), false, true, std::move(why)}; }

Verdict run(std::string name, const std::function<Failure()>& body) {
  Verdict v{std::move(name), true, true, {}};
  try {
    if (Failure f = body()) {
      v.passed = false;
      v.detail = *f;
    }
  } catch (const std::exception& ex) {
    v.passed = false;
    v.detail = std::string("exception: ") + ex.what();
  }
  return v;
}

std::string set_text(const RibbonGraph& g, EdgeSet s) {
  std::string out = "{";
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (!contains(s, static_cast<int>(e))) continue;
    if (out.size() > 1) out += ',';
    out += g.edge_name(static_cast<int>(e));
  }
  return out + "}";
}

std::string mismatch(const std::string& what, const LaurentPoly& a, const LaurentPoly& b) {
  return what + ": " + to_string(a) + " vs " + to_string(b);
}

// Calls fn(s) for every subset s of `mask`, including 0 and mask itself.
template <typename Fn>
void for_subsets(EdgeSet mask, Fn&& fn) {
  EdgeSet s = 0;
  while (true) {
    fn(s);
    if (s == mask) break;
    s = (s - mask) & mask;
  }
}

bool too_big(const EmbeddedGraph& eg) { return eg.cellulation().num_edges() > kExhaustiveEdges; }

// Applies `body` to each connected component of the cellulation, with the
// restricted edge order. Failures are reported with global edge names.
Failure per_component(const EmbeddedGraph& eg, const EdgeOrder& order,
                      const std::function<Failure(const RibbonGraph&, const EdgeOrder&)>& body) {
  const ComponentSplit split = split_components(eg.cellulation());
  for (std::size_t p = 0; p < split.parts.size(); ++p) {
    if (Failure f = body(split.parts[p], order.restricted(split.edge_map[p]))) return f;
  }
  return std::nullopt;
}

// Index mask in an ordinary graph of the edges whose labels lie in `s`.
EdgeSet labels_to_mask(const OrdinaryGraph& g, EdgeSet s) {
  EdgeSet out = 0;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (contains(s, g.edges[i].label)) out |= edge_bit(static_cast<int>(i));
  }
  return out;
}

}  // namespace

Verdict check_euler(const EmbeddedGraph& eg) {
  const std::string name = "euler_consistency";
  if (too_big(eg)) return skipped(name, "too many edges");
  return run(name, [&]() -> Failure {
    const RibbonGraph& g = eg.cellulation();
    const SurfaceInvariants surf = eg.surface();
    const int v = static_cast<int>(g.num_vertices());
    const int e = static_cast<int>(g.num_edges());
    if (surf.euler != v - e + boundary_components(g, g.all_edges())) return "chi differs from v - e + bc";
    if (surf.delta != genus_s(g, g.all_edges())) return "delta differs from s of the cellulation";
    Failure out;
    for_subsets(g.all_edges(), [&](EdgeSet f) {
      if (out) return;
      const int s = genus_s(g, f);
      if (v - popcount(f) + boundary_components(g, f) != 2 * components(g, f) - s) {
        out = "v - e + bc != 2c - s at " + set_text(g, f);
      } else if (s < 0) {
        out = "negative s at " + set_text(g, f);
      } else if (is_orientable(g, f) && s % 2 != 0) {
        out = "odd s on orientable " + set_text(g, f);
      }
    });
    return out;
  });
}

Verdict check_comb(const EmbeddedGraph& eg) {
  const std::string name = "comb_identity";
  if (too_big(eg)) return skipped(name, "too many edges");
  return run(name, [&]() -> Failure {
    const RibbonGraph& g = eg.cellulation();
    const int delta = eg.surface().delta;
    Failure out;
    for_subsets(eg.marked(), [&](EdgeSet f) {
      if (out) return;
      const ComplementInvariants comp = eg.complement(f);
      if (2 * nullity(g, f) != 2 * comp.kernel_dim + delta + genus_s(g, f) - comp.genus_s_perp) {
        out = "n(F) mismatch at " + set_text(g, f);
      }
    });
    return out;
  });
}

Verdict check_boundary_duality(const EmbeddedGraph& eg) {
  const std::string name = "boundary_duality";
  if (!eg.is_cellular()) return skipped(name, "not cellular");
  if (too_big(eg)) return skipped(name, "too many edges");
  return run(name, [&]() -> Failure {
    const RibbonGraph& g = eg.cellulation();
    const RibbonGraph& gd = eg.dual_cellulation();
    if (gd.num_vertices() != static_cast<std::size_t>(boundary_components(g, g.all_edges())) ||
        static_cast<std::size_t>(boundary_components(gd, gd.all_edges())) != g.num_vertices()) {
      return "v(G*) != bc(G) or bc(G*) != v(G)";
    }
    Failure out;
    for_subsets(g.all_edges(), [&](EdgeSet f) {
      if (!out && boundary_components(g, f) != boundary_components(gd, g.all_edges() & ~f)) {
        out = "bc(F) != bc(F*) at " + set_text(g, f);
      }
    });
    return out;
  });
}

Verdict check_dual_involution(const EmbeddedGraph& eg) {
  const std::string name = "dual_involution";
  if (too_big(eg)) return skipped(name, "too many edges");
  return run(name, [&]() -> Failure {
    const RibbonGraph& g = eg.cellulation();
    if (subgraph_profile(dual(eg.dual_cellulation())) != subgraph_profile(g)) return "profile of G** differs from G";
    return std::nullopt;
  });
}

Verdict check_partial_duality(const EmbeddedGraph& eg) {
  const std::string name = "partial_duality_properties";
  if (eg.cellulation().num_edges() > 10) return skipped(name, "too many edges");
  return run(name, [&]() -> Failure {
    const RibbonGraph& g = eg.cellulation();
    const EdgeSet all = g.all_edges();
    const std::size_t n = g.num_edges();
    if (!(partial_dual(g, 0) == g)) return "property 1: G^{} != G";
    if (subgraph_profile(partial_dual(g, all)) != subgraph_profile(eg.dual_cellulation())) {
      return "property 2: G^E differs from G*";
    }
    const bool orientable = is_orientable(g);
    const int c = components(g, all);
    // Second partial duals: every pair on small graphs; otherwise the full
    // set, one single edge and one scrambled subset per H.
    auto seconds = [&](EdgeSet h) {
      std::vector<EdgeSet> out;
      if (n <= 5) {
        for_subsets(all, [&](EdgeSet h2) { out.push_back(h2); });
      } else {
        out.push_back(all);
        out.push_back(edge_bit(static_cast<int>(h % n)));
        out.push_back((h * 0x9E3779B97F4A7C15ull >> 17) & all);
      }
      return out;
    };
    std::vector<SubgraphProfile> direct(EdgeSet{1} << n);
    for_subsets(all, [&](EdgeSet h) { direct[h] = subgraph_profile(partial_dual(g, h)); });
    Failure out;
    for_subsets(all, [&](EdgeSet h) {
      if (out) return;
      const RibbonGraph gh = partial_dual(g, h);
      if (is_orientable(gh) != orientable) {
        out = "property 4 at H = " + set_text(g, h);
      } else if (components(gh, all) != c) {
        out = "property 5 at H = " + set_text(g, h);
      } else if (static_cast<int>(gh.num_vertices()) != boundary_components(g, h)) {
        out = "property 6 at H = " + set_text(g, h);
      } else if (boundary_components(gh, all) != boundary_components(g, all & ~h)) {
        out = "property 7 at H = " + set_text(g, h);
      }
      for (EdgeSet h2 : seconds(h)) {
        if (out) return;
        if (subgraph_profile(partial_dual(gh, h2)) != direct[h ^ h2]) {
          out = "property 3 at H = " + set_text(g, h) + ", H' = " + set_text(g, h2);
        }
      }
    });
    return out;
  });
}

Verdict check_parconn(const EmbeddedGraph& eg) {
  const std::string name = "partial_dual_connectivity";
  if (too_big(eg)) return skipped(name, "too many edges");
  return run(name, [&]() -> Failure {
    const RibbonGraph& g = eg.cellulation();
    const EdgeSet all = g.all_edges();
    Failure out;
    for_subsets(all, [&](EdgeSet a) {
      if (out) return;
      const RibbonGraph ga = partial_dual(g, a);
      for_subsets(all & ~a, [&](EdgeSet b) {
        if (!out && components(g, all & ~b) != components(ga, all & ~b)) {
          out = "c(G\\B) != c(G^A\\B) at A = " + set_text(g, a) + ", B = " + set_text(g, b);
        }
      });
    });
    return out;
  });
}

Verdict check_matroid_axioms(const EmbeddedGraph& eg) {
  const std::string name = "matroid_axioms";
  if (popcount(eg.marked()) > 10) return skipped(name, "too many edges");
  return run(name, [&]() -> Failure {
    std::vector<OrdinaryGraph> graphs{underlying_graph(eg.cellulation(), eg.marked())};
    if (eg.is_cellular()) graphs.push_back(underlying_graph(eg.dual_cellulation()));
    for (const OrdinaryGraph& og : graphs) {
      const RankFunction r = cycle_matroid(og);
      const RankFunction rs = dual_matroid(r);
      if (!satisfies_rank_axioms(r)) return std::string("cycle matroid violates the rank axioms");
      if (!satisfies_rank_axioms(rs)) return std::string("bond matroid violates the rank axioms");
      Failure out;
      for_subsets(r.ground(), [&](EdgeSet s) {
        if (!out && dual_rank(rs, s) != r(s)) out = "dual rank is not an involution";
      });
      if (out) return out;
    }
    return std::nullopt;
  });
}

Verdict check_tutte_specialization(const EmbeddedGraph& eg, SumOptions opts) {
  return run("tutte_specialization", [&]() -> Failure {
    const LaurentPoly lhs = specialize(krushkal(eg, opts), PolyKind::tutte, specialization_context(eg));
    const LaurentPoly rhs = tutte(underlying_graph(eg.cellulation(), eg.marked()));
    if (lhs != rhs) return mismatch("specialized Krushkal vs Tutte", lhs, rhs);
    return std::nullopt;
  });
}

Verdict check_duality(const EmbeddedGraph& eg, SumOptions opts) {
  const std::string name = "duality";
  if (!eg.is_cellular()) return skipped(name, "not cellular");
  return run(name, [&]() -> Failure {
    const LaurentPoly lhs = swap_dual_variables(krushkal(eg, opts));
    const LaurentPoly rhs = krushkal(EmbeddedGraph(eg.dual_cellulation()), opts);
    if (lhs != rhs) return mismatch("swapped P(G) vs P(G*)", lhs, rhs);
    return std::nullopt;
  });
}

Verdict check_krushkal_expansion(const EmbeddedGraph& eg, const EdgeOrder& order, SumOptions opts) {
  const std::string name = "krushkal_expansion";
  if (!eg.is_cellular()) return skipped(name, "not cellular");
  return run(name, [&]() -> Failure {
    const LaurentPoly brute = krushkal(eg, opts);
    const LaurentPoly expanded = evaluate_quasitree(PolyKind::krushkal, eg, order);
    if (brute != expanded) return mismatch("brute vs expansion", brute, expanded);
    return std::nullopt;
  });
}

Verdict check_br_chain(const EmbeddedGraph& eg, const EdgeOrder& order, SumOptions opts) {
  const std::string name = "br_chain";
  if (!eg.is_cellular()) return skipped(name, "not cellular");
  return run(name, [&]() -> Failure {
    const LaurentPoly brute = bollobas_riordan(eg.cellulation(), opts);
    const LaurentPoly special = specialize(krushkal(eg, opts), PolyKind::br, specialization_context(eg));
    const LaurentPoly expanded = evaluate_quasitree(PolyKind::br, eg, order);
    if (brute != special) return mismatch("brute vs specialized Krushkal", brute, special);
    if (brute != expanded) return mismatch("brute vs expansion", brute, expanded);
    return std::nullopt;
  });
}

Verdict check_lv_chain(const EmbeddedGraph& eg, const EdgeOrder& order, SumOptions opts) {
  const std::string name = "lv_chain";
  if (!eg.is_cellular()) return skipped(name, "not cellular");
  return run(name, [&]() -> Failure {
    const LaurentPoly brute = las_vergnas(eg);
    const LaurentPoly special = specialize(krushkal(eg, opts), PolyKind::lv, specialization_context(eg));
    const LaurentPoly expanded = evaluate_quasitree(PolyKind::lv, eg, order);
    if (brute != special) return mismatch("brute vs specialized Krushkal", brute, special);
    if (brute != expanded) return mismatch("brute vs expansion", brute, expanded);
    return std::nullopt;
  });
}

Verdict check_deletion_contraction(const EmbeddedGraph& eg, SumOptions opts) {
  return run("deletion_contraction", [&]() -> Failure {
    const RibbonGraph& g = eg.cellulation();
    const LaurentPoly p = krushkal(eg, opts);
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
      const int e = static_cast<int>(i);
      if (!contains(eg.marked(), e)) continue;
      const std::string at = " at " + g.edge_name(e);

      const RibbonGraph deleted = delete_edge(g, e);
      if (deleted.num_edges() + 1 != g.num_edges()) return "delete_edge edge count" + at;
      if (!g.is_loop(e)) {
        const RibbonGraph contracted = contract_edge(g, e);
        if (contracted.num_edges() + 1 != g.num_edges() || contracted.num_vertices() + 1 != g.num_vertices()) {
          return "contract_edge counts" + at;
        }
        if (boundary_components(contracted, contracted.all_edges()) != boundary_components(g, g.all_edges())) {
          return "contract_edge changes bc" + at;
        }
      }

      const bool bridge = components(g, eg.marked() & ~edge_bit(e)) > components(g, eg.marked());
      if (g.is_loop(e)) {
        if (eg.complement(edge_bit(e)).kernel_dim != 1) continue;
        const LaurentPoly rhs = (Y() + 1) * krushkal(unmark_edge(eg, e), opts);
        if (p != rhs) return mismatch("separating loop" + at, p, rhs);
      } else if (bridge) {
        const LaurentPoly rhs = (X() + 1) * krushkal(contract_edge(eg, e), opts);
        if (p != rhs) return mismatch("bridge" + at, p, rhs);
      } else {
        const LaurentPoly rhs = krushkal(unmark_edge(eg, e), opts) + krushkal(contract_edge(eg, e), opts);
        if (p != rhs) return mismatch("deletion-contraction" + at, p, rhs);
      }
    }
    return std::nullopt;
  });
}

Verdict check_multiplicativity(const EmbeddedGraph& eg, SumOptions opts) {
  const std::string name = "multiplicativity";
  if (2 * popcount(eg.marked()) > 20 || 2 * eg.cellulation().num_edges() > kMaxEdges) {
    return skipped(name, "too many edges");
  }
  return run(name, [&]() -> Failure {
    const LaurentPoly p = krushkal(eg, opts);
    const LaurentPoly both = krushkal(disjoint_union(eg, eg), opts);
    if (both != p * p) return mismatch("P(G + G) vs P(G)^2", both, p * p);
    return std::nullopt;
  });
}

Verdict check_partition(const EmbeddedGraph& eg, const EdgeOrder& order) {
  const std::string name = "partition_exactness";
  if (too_big(eg)) return skipped(name, "too many edges");
  return run(name, [&]() -> Failure {
    return per_component(eg, order, [](const RibbonGraph& g, const EdgeOrder& o) -> Failure {
      const QuasiTreeTable table(g, o);
      const EdgeSet all = g.all_edges();
      std::vector<int> hits(EdgeSet{1} << g.num_edges(), 0);
      for (const auto& [q, part] : table.entries()) {
        const EdgeSet sets[] = {part.dead_internal, part.live_internal_orientable, part.live_internal_nonorientable,
                                part.dead_external, part.live_external_orientable, part.live_external_nonorientable};
        EdgeSet seen = 0;
        for (EdgeSet s : sets) {
          if (s & seen) return "activity sets overlap for Q = " + set_text(g, q);
          seen |= s;
        }
        if (seen != all) return "activity sets do not cover E for Q = " + set_text(g, q);
        if (part.internal() != q) return "internal edges differ from Q = " + set_text(g, q);
        Failure out;
        for_subsets(part.free_edges(), [&](EdgeSet s) {
          const EdgeSet f = part.vi() | s;
          ++hits[f];
          if (!out && subgraph_to_quasitree(table, f) != QuasiTreeMatch{q, s}) {
            out = "subgraph_to_quasitree disagrees at " + set_text(g, f);
          }
        });
        if (out) return out;
      }
      for (EdgeSet f = 0; f < hits.size(); ++f) {
        if (hits[f] != 1) return "subgraph " + set_text(g, f) + " covered " + std::to_string(hits[f]) + " times";
      }
      return std::nullopt;
    });
  });
}

Verdict check_live(const EmbeddedGraph& eg, const EdgeOrder& order) {
  const std::string name = "resolution_tree";
  if (too_big(eg)) return skipped(name, "too many edges");
  return run(name, [&]() -> Failure {
    return per_component(eg, order, [](const RibbonGraph& g, const EdgeOrder& o) -> Failure {
      const ResolutionTree tree = resolution_tree(g, o);
      const std::vector<EdgeSet> qts = quasi_trees(g);
      if (tree.leaves.size() != qts.size()) {
        return "leaf count " + std::to_string(tree.leaves.size()) + " != quasi-tree count " +
               std::to_string(qts.size());
      }
      std::vector<EdgeSet> found;
      for (int id : tree.leaves) {
        const ResolutionNode& leaf = tree.nodes[id];
        const EdgeSet q = *leaf.quasi_tree;
        if (leaf.unresolved(g.all_edges()) != activities(g, o, q).free_edges()) {
          return "unresolved edges at leaf " + set_text(g, q) + " are not the live orientable ones";
        }
        found.push_back(q);
      }
      std::sort(found.begin(), found.end());
      if (found != qts) return std::string("leaves do not biject with quasi-trees");
      return std::nullopt;
    });
  });
}

Verdict check_lemma_conn(const EmbeddedGraph& eg, const EdgeOrder& order) {
  const std::string name = "lemma_conn";
  if (too_big(eg)) return skipped(name, "too many edges");
  return run(name, [&]() -> Failure {
    return per_component(eg, order, [](const RibbonGraph& g, const EdgeOrder& o) -> Failure {
      for (const auto& [q, part] : QuasiTreeTable(g, o).entries()) {
        Failure out;
        for_subsets(part.live_internal_orientable, [&](EdgeSet s1) {
          const int c1 = components(g, part.vi() | s1);
          for_subsets(part.live_external_orientable, [&](EdgeSet s2) {
            if (!out && components(g, part.vi() | s1 | s2) != c1) {
              out = "c changes when adding " + set_text(g, s2) + " for Q = " + set_text(g, q);
            }
          });
        });
        if (out) return out;
      }
      return std::nullopt;
    });
  });
}

Verdict check_lemma_bc(const EmbeddedGraph& eg, const EdgeOrder& order) {
  const std::string name = "lemma_bc";
  if (too_big(eg)) return skipped(name, "too many edges");
  return run(name, [&]() -> Failure {
    return per_component(eg, order, [](const RibbonGraph& g, const EdgeOrder& o) -> Failure {
      for (const auto& [q, part] : QuasiTreeTable(g, o).entries()) {
        const int base = boundary_components(g, part.vi());
        if (base != 1 + popcount(part.live_internal_orientable)) {
          return "bc(F_VI) != 1 + |I_o| for Q = " + set_text(g, q);
        }
        Failure out;
        for_subsets(part.free_edges(), [&](EdgeSet s) {
          const int expected = base - popcount(s & part.live_internal_orientable) +
                               popcount(s & part.live_external_orientable);
          if (!out && boundary_components(g, part.vi() | s) != expected) {
            out = "bc mismatch at S = " + set_text(g, s) + " for Q = " + set_text(g, q);
          }
        });
        if (out) return out;
      }
      return std::nullopt;
    });
  });
}

Verdict check_lemma_dualactiv(const EmbeddedGraph& eg, const EdgeOrder& order) {
  const std::string name = "lemma_dualactiv";
  if (too_big(eg)) return skipped(name, "too many edges");
  return run(name, [&]() -> Failure {
    return per_component(eg, order, [](const RibbonGraph& g, const EdgeOrder& o) -> Failure {
      const RibbonGraph gd = dual(g);
      for (const auto& [q, part] : QuasiTreeTable(g, o).entries()) {
        const EdgeSet q_dual = g.all_edges() & ~q;
        if (boundary_components(gd, q_dual) != 1) return "E \\ Q is not a quasi-tree of G* for Q = " + set_text(g, q);
        const ActivityPartition d = activities(gd, o, q_dual);
        const bool ok = d.dead_internal == part.dead_external && d.dead_external == part.dead_internal &&
                        d.live_internal_orientable == part.live_external_orientable &&
                        d.live_external_orientable == part.live_internal_orientable &&
                        d.live_internal_nonorientable == part.live_external_nonorientable &&
                        d.live_external_nonorientable == part.live_internal_nonorientable;
        if (!ok) return "dual activities differ for Q = " + set_text(g, q);
      }
      return std::nullopt;
    });
  });
}

Verdict check_genus_shift(const EmbeddedGraph& eg, const EdgeOrder& order) {
  const std::string name = "genus_shift";
  if (too_big(eg)) return skipped(name, "too many edges");
  return run(name, [&]() -> Failure {
    return per_component(eg, order, [](const RibbonGraph& g, const EdgeOrder& o) -> Failure {
      for (const auto& [q, part] : QuasiTreeTable(g, o).entries()) {
        const OrdinaryGraph gq = quotient_graph(g, part.vi(), part.live_internal_orientable);
        const int base = genus_s(g, part.vi());
        Failure out;
        for_subsets(part.free_edges(), [&](EdgeSet s) {
          const int expected = base + 2 * nullity(gq, labels_to_mask(gq, s & part.live_internal_orientable));
          if (!out && genus_s(g, part.vi() | s) != expected) {
            out = "s(F_VI + S) != s(F_VI) + 2n(W) at S = " + set_text(g, s) + " for Q = " + set_text(g, q);
          }
        });
        if (out) return out;
      }
      return std::nullopt;
    });
  });
}

std::vector<Verdict> run_identity_suite(const EmbeddedGraph& eg, const EdgeOrder& order, SumOptions opts) {
  return {
      check_euler(eg),
      check_comb(eg),
      check_boundary_duality(eg),
      check_dual_involution(eg),
      check_partial_duality(eg),
      check_parconn(eg),
      check_matroid_axioms(eg),
      check_tutte_specialization(eg, opts),
      check_duality(eg, opts),
      check_krushkal_expansion(eg, order, opts),
      check_br_chain(eg, order, opts),
      check_lv_chain(eg, order, opts),
      check_deletion_contraction(eg, opts),
      check_multiplicativity(eg, opts),
      check_partition(eg, order),
      check_live(eg, order),
      check_lemma_conn(eg, order),
      check_lemma_bc(eg, order),
      check_lemma_dualactiv(eg, order),
      check_genus_shift(eg, order),
  };
}

}  // namespace qp
