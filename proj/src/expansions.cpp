#include "qp/expansions.hpp"

#include <stdexcept>

namespace qp {

namespace {

void require_connected_cellulation(const EmbeddedGraph& eg) {
  if (!eg.is_cellular()) throw std::invalid_argument("quasi-tree expansion needs a cellular embedding");
  if (components(eg.cellulation(), eg.cellulation().all_edges()) != 1) {
    throw std::invalid_argument("quasi-tree expansion needs a connected graph");
  }
}

// T(image_x, image_y) for an ordinary graph's Tutte polynomial in X, Y.
LaurentPoly tutte_at(const OrdinaryGraph& g, LaurentPoly image_x, LaurentPoly image_y) {
  Bindings b;
  b[static_cast<int>(Var::X)] = std::move(image_x);
  b[static_cast<int>(Var::Y)] = std::move(image_y);
  return substitute(tutte(g), b);
}

}  // namespace

LaurentPoly expansion_krushkal(const EmbeddedGraph& eg, const EdgeOrder& order) {
  require_connected_cellulation(eg);
  const RibbonGraph& g = eg.cellulation();
  const RibbonGraph& gd = eg.dual_cellulation();
  LaurentPoly total;
  for (const auto& [q, part] : QuasiTreeTable(g, order).entries()) {
    const MinorGraphs minors = build_minor_graphs(g, gd, part);
    total += tutte_at(minors.primal, X(), A()) * tutte_at(minors.dual, Y(), B()) *
             A(HalfExp{genus_s(g, part.vi())}) * B(HalfExp{genus_s(gd, part.ve())});
  }
  return total;
}

LaurentPoly expansion_br(const RibbonGraph& g, const EdgeOrder& order) {
  if (components(g, g.all_edges()) != 1) throw std::invalid_argument("quasi-tree expansion needs a connected graph");
  const LaurentPoly one_plus_y = Y() + 1;
  LaurentPoly total;
  for (const auto& [q, part] : QuasiTreeTable(g, order).entries()) {
    const OrdinaryGraph gq = quotient_graph(g, part.vi(), part.live_internal_orientable);
    const EdgeSet vi = part.vi();
    total += Y(HalfExp::whole(nullity(g, vi))) * Z(HalfExp::whole(genus_s(g, vi))) *
             one_plus_y.pow(popcount(part.live_external_orientable)) *
             tutte_at(gq, X(), Y() * Z(HalfExp::whole(2)));
  }
  return total;
}

LaurentPoly expansion_lv(const EmbeddedGraph& eg, const EdgeOrder& order) {
  require_connected_cellulation(eg);
  const RibbonGraph& g = eg.cellulation();
  const RibbonGraph& gd = eg.dual_cellulation();
  LaurentPoly total;
  for (const auto& [q, part] : QuasiTreeTable(g, order).entries()) {
    const MinorGraphs minors = build_minor_graphs(g, gd, part);
    const int z_exp = nullity(gd, part.ve()) + nullity(minors.primal, minors.primal.all_edges());
    total += tutte_at(minors.primal, X() - 1, Z(HalfExp::whole(-1))) * tutte_at(minors.dual, Y() - 1, Z()) *
             Z(HalfExp::whole(z_exp));
  }
  return total;
}

LaurentPoly evaluate_brute(PolyKind kind, const EmbeddedGraph& eg, SumOptions opts) {
  switch (kind) {
    case PolyKind::krushkal:
      return krushkal(eg, opts);
    case PolyKind::tutte:
      return tutte(underlying_graph(eg.cellulation(), eg.marked()));
    case PolyKind::br:
      if (!eg.is_cellular()) throw std::invalid_argument("Bollobas-Riordan polynomial needs a cellular embedding");
      return bollobas_riordan(eg.cellulation(), opts);
    case PolyKind::lv:
      return las_vergnas(eg);
  }
  throw std::invalid_argument("unknown polynomial kind");
}

LaurentPoly evaluate_quasitree(PolyKind kind, const EmbeddedGraph& eg, const EdgeOrder& order) {
  if (!eg.is_cellular()) throw std::invalid_argument("quasi-tree method needs a cellular embedding");
  // Per-component results multiply; every polynomial here is multiplicative
  // over disjoint unions of surfaces.
  const EmbeddedSplit split = split_components(eg);
  LaurentPoly product(1);
  LaurentPoly krushkal_product(1);
  for (std::size_t p = 0; p < split.parts.size(); ++p) {
    const EmbeddedGraph& part = split.parts[p];
    const EdgeOrder local = order.restricted(split.edge_map[p]);
    switch (kind) {
      case PolyKind::br:
        product *= expansion_br(part.cellulation(), local);
        break;
      case PolyKind::lv:
        product *= expansion_lv(part, local);
        break;
      case PolyKind::krushkal:
      case PolyKind::tutte:
        krushkal_product *= expansion_krushkal(part, local);
        break;
    }
  }
  if (kind == PolyKind::krushkal) return krushkal_product;
  if (kind == PolyKind::tutte) return specialize(krushkal_product, PolyKind::tutte, specialization_context(eg));
  return product;
}

}  // namespace qp
