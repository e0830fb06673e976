#pragma once

// Identity checks relating the invariants, polynomials and quasi-tree
// machinery. Each check returns a verdict rather than throwing; checks that
// do not apply to the input (wrong embedding type, too many edges for an
// exhaustive pass) come back with applicable = false.

#include <string>
#include <vector>

#include "qp/embedded_graph.hpp"
#include "qp/graph_polys.hpp"
#include "qp/quasi_tree.hpp"

namespace qp {

struct Verdict {
  std::string name;
  bool applicable = true;
  bool passed = true;
  std::string detail;  // first counterexample, or why the check was skipped
};

// Exhaustive per-subset checks are skipped above this many edges.
inline constexpr std::size_t kExhaustiveEdges = 12;

// Surface and subgraph invariants.
Verdict check_euler(const EmbeddedGraph& eg);
Verdict check_comb(const EmbeddedGraph& eg);
Verdict check_boundary_duality(const EmbeddedGraph& eg);
Verdict check_dual_involution(const EmbeddedGraph& eg);
Verdict check_partial_duality(const EmbeddedGraph& eg);
Verdict check_parconn(const EmbeddedGraph& eg);
Verdict check_matroid_axioms(const EmbeddedGraph& eg);

// Polynomial identities.
Verdict check_tutte_specialization(const EmbeddedGraph& eg, SumOptions opts = {});
Verdict check_duality(const EmbeddedGraph& eg, SumOptions opts = {});
Verdict check_krushkal_expansion(const EmbeddedGraph& eg, const EdgeOrder& order, SumOptions opts = {});
Verdict check_br_chain(const EmbeddedGraph& eg, const EdgeOrder& order, SumOptions opts = {});
Verdict check_lv_chain(const EmbeddedGraph& eg, const EdgeOrder& order, SumOptions opts = {});
Verdict check_deletion_contraction(const EmbeddedGraph& eg, SumOptions opts = {});
Verdict check_multiplicativity(const EmbeddedGraph& eg, SumOptions opts = {});

// Quasi-tree structure, applied to each component of the cellulation.
Verdict check_partition(const EmbeddedGraph& eg, const EdgeOrder& order);
Verdict check_live(const EmbeddedGraph& eg, const EdgeOrder& order);
Verdict check_lemma_conn(const EmbeddedGraph& eg, const EdgeOrder& order);
Verdict check_lemma_bc(const EmbeddedGraph& eg, const EdgeOrder& order);
Verdict check_lemma_dualactiv(const EmbeddedGraph& eg, const EdgeOrder& order);
Verdict check_genus_shift(const EmbeddedGraph& eg, const EdgeOrder& order);

// Every check above, in a fixed order.
std::vector<Verdict> run_identity_suite(const EmbeddedGraph& eg, const EdgeOrder& order, SumOptions opts = {});

}  // namespace qp
