#pragma once

// Definitional evaluators: each polynomial is summed term by term over all
// spanning subgraphs, plus the substitutions relating them.

#include <string_view>

#include "qp/embedded_graph.hpp"
#include "qp/laurent_poly.hpp"
#include "qp/matroid.hpp"

namespace qp {

enum class PolyKind { krushkal, tutte, br, lv };

std::string_view to_string(PolyKind kind);
// Accepts the CLI spellings krushkal, tutte, br, lv; throws std::invalid_argument.
PolyKind parse_poly_kind(std::string_view name);

struct SumOptions {
  // Subset ranges are split across this many threads; the result is
  // identical to the sequential sum.
  unsigned threads = 1;
};

// Generalized Krushkal polynomial over subsets of the marked edges:
//   sum_F X^{c(F)-c(G)} Y^{c(Sigma\F)-c(Sigma)} A^{s(F)/2} B^{s_perp(F)/2}
LaurentPoly krushkal(const EmbeddedGraph& eg, SumOptions opts = {});

// T_G(X,Y) = sum_F X^{c(F)-c(G)} Y^{n(F)}, a shift of the classical Tutte
// polynomial: T_G(X,Y) = T_classical(X+1, Y+1).
LaurentPoly tutte(const OrdinaryGraph& g);

// BR_G(X,Y,Z) = sum_F X^{c(F)-c(G)} Y^{n(F)} Z^{s(F)}
LaurentPoly bollobas_riordan(const RibbonGraph& g, SumOptions opts = {});

// Las Vergnas polynomial of a cellulation, from the cycle matroid of G and the
// bond matroid of G*. Throws std::invalid_argument for non-cellular input.
LaurentPoly las_vergnas(const EmbeddedGraph& eg);

struct SpecializationContext {
  int delta = 0;    // 2c(Sigma) - chi(Sigma)
  int genus_s = 0;  // s(G) of the full graph
};

SpecializationContext specialization_context(const EmbeddedGraph& eg);

// From a Krushkal polynomial p:
//   tutte: Y^{delta/2} p(X, Y, Y, 1/Y)
//   br:    Y^{s(G)/2} p(X, Y, Y Z^2, 1/Y)
//   lv:    Z^{delta/2} p(X-1, Y-1, 1/Z, Z)
//   krushkal: p unchanged
LaurentPoly specialize(const LaurentPoly& p, PolyKind target, SpecializationContext ctx);

// p(X, Y, A, B) -> p(Y, X, B, A)
LaurentPoly swap_dual_variables(const LaurentPoly& p);

}  // namespace qp
