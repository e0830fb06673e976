#pragma once

// Quasi-tree expansions: each polynomial is rebuilt as a sum over quasi-trees
// of products of Tutte polynomials of the minor graphs G_Q and G*_{Q*}.

#include "qp/graph_polys.hpp"
#include "qp/quasi_tree.hpp"

namespace qp {

// Sum over quasi-trees Q of
//   T_{G_Q}(X, A) T_{G*_{Q*}}(Y, B) A^{s(F_VI)/2} B^{s(R_VE)/2}.
// Needs a connected cellulation; throws std::invalid_argument otherwise.
LaurentPoly expansion_krushkal(const EmbeddedGraph& eg, const EdgeOrder& order);

// Sum over Q of Y^{n(F_VI)} Z^{s(F_VI)} (1+Y)^{|E_o|} T_{G_Q}(X, Y Z^2).
LaurentPoly expansion_br(const RibbonGraph& g, const EdgeOrder& order);

// Sum over Q of T_{G_Q}(X-1, 1/Z) T_{G*_{Q*}}(Y-1, Z) Z^{n(R_VE) + n(G_Q)}.
LaurentPoly expansion_lv(const EmbeddedGraph& eg, const EdgeOrder& order);

// Whole-document evaluation used by the CLI. The quasi-tree route needs a
// cellular embedding and multiplies the per-component expansions; the brute
// route sums over subsets directly. `br` and `lv` need a cellular embedding
// for either route. Violations throw std::invalid_argument.
LaurentPoly evaluate_brute(PolyKind kind, const EmbeddedGraph& eg, SumOptions opts = {});
LaurentPoly evaluate_quasitree(PolyKind kind, const EmbeddedGraph& eg, const EdgeOrder& order);

}  // namespace qp
