#include "qp/graph_polys.hpp"

#include <stdexcept>
#include <thread>

namespace qp {

std::string_view to_string(PolyKind kind) {
  switch (kind) {
    case PolyKind::krushkal: return "krushkal";
    case PolyKind::tutte: return "tutte";
    case PolyKind::br: return "br";
    case PolyKind::lv: return "lv";
  }
  return "?";
}

PolyKind parse_poly_kind(std::string_view name) {
  for (PolyKind k : {PolyKind::krushkal, PolyKind::tutte, PolyKind::br, PolyKind::lv}) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown polynomial '" + std::string(name) + "'");
}

namespace {

// Scatters the low bits of `index` onto the set bits of `mask`.
EdgeSet deposit(EdgeSet index, EdgeSet mask) {
  EdgeSet out = 0;
  for (EdgeSet bit = 1; mask != 0; bit <<= 1) {
    const EdgeSet low = mask & (~mask + 1);
    if (index & bit) out |= low;
    mask &= mask - 1;
  }
  return out;
}

template <typename Term>
LaurentPoly sum_over_subsets(EdgeSet ground, SumOptions opts, Term term) {
  const int k = popcount(ground);
  if (k >= 63) throw std::invalid_argument("too many edges for a subset sum");
  const EdgeSet count = EdgeSet{1} << k;
  const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(count)));
  std::vector<LaurentPoly> partial(threads);
  auto run = [&](unsigned t) {
    const EdgeSet lo = count * t / threads;
    const EdgeSet hi = count * (t + 1) / threads;
    for (EdgeSet i = lo; i < hi; ++i) partial[t] += term(deposit(i, ground));
  };
  if (threads == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run, t);
    for (auto& th : pool) th.join();
  }
  LaurentPoly total;
  for (const auto& p : partial) total += p;
  return total;
}

Exponents exps(std::int64_t x, std::int64_t y, HalfExp a, HalfExp b, std::int64_t z) {
  return {HalfExp::whole(x), HalfExp::whole(y), a, b, HalfExp::whole(z)};
}

}  // namespace

LaurentPoly krushkal(const EmbeddedGraph& eg, SumOptions opts) {
  const RibbonGraph& g = eg.cellulation();
  const int base_components = components(g, eg.marked());
  return sum_over_subsets(eg.marked(), opts, [&](EdgeSet f) {
    const ComplementInvariants comp = eg.complement(f);
    return LaurentPoly::monomial(exps(components(g, f) - base_components, comp.kernel_dim, HalfExp{genus_s(g, f)},
                                      HalfExp{comp.genus_s_perp}, 0));
  });
}

LaurentPoly tutte(const OrdinaryGraph& g) {
  const int base = components(g, g.all_edges());
  return sum_over_subsets(g.all_edges(), {}, [&](EdgeSet f) {
    return LaurentPoly::monomial(exps(components(g, f) - base, nullity(g, f), {}, {}, 0));
  });
}

LaurentPoly bollobas_riordan(const RibbonGraph& g, SumOptions opts) {
  const int base = components(g, g.all_edges());
  return sum_over_subsets(g.all_edges(), opts, [&](EdgeSet f) {
    return LaurentPoly::monomial(exps(components(g, f) - base, nullity(g, f), {}, {}, genus_s(g, f)));
  });
}

LaurentPoly las_vergnas(const EmbeddedGraph& eg) {
  if (!eg.is_cellular()) throw std::invalid_argument("Las Vergnas polynomial needs a cellular embedding");
  const RankFunction r = cycle_matroid(underlying_graph(eg.cellulation()));
  const RankFunction rbar = bond_matroid(underlying_graph(eg.dual_cellulation()));
  const EdgeSet all = eg.cellulation().all_edges();
  const int r_all = r(all);
  const int rbar_all = rbar(all);
  const LaurentPoly x1 = X() - 1;
  const LaurentPoly y1 = Y() - 1;
  return sum_over_subsets(all, {}, [&](EdgeSet f) {
    const int x_exp = r_all - r(f);
    const int z_exp = (rbar_all - rbar(f)) - x_exp;
    return x1.pow(x_exp) * y1.pow(nullity_of(rbar, f)) * Z(HalfExp::whole(z_exp));
  });
}

SpecializationContext specialization_context(const EmbeddedGraph& eg) {
  return {eg.surface().delta, genus_s(eg.cellulation(), eg.marked())};
}

LaurentPoly specialize(const LaurentPoly& p, PolyKind target, SpecializationContext ctx) {
  Bindings b;
  switch (target) {
    case PolyKind::krushkal:
      return p;
    case PolyKind::tutte:
      b[static_cast<int>(Var::A)] = Y();
      b[static_cast<int>(Var::B)] = Y(HalfExp::whole(-1));
      return Y(HalfExp{ctx.delta}) * substitute(p, b);
    case PolyKind::br:
      b[static_cast<int>(Var::A)] = Y() * Z(HalfExp::whole(2));
      b[static_cast<int>(Var::B)] = Y(HalfExp::whole(-1));
      return Y(HalfExp{ctx.genus_s}) * substitute(p, b);
    case PolyKind::lv:
      b[static_cast<int>(Var::X)] = X() - 1;
      b[static_cast<int>(Var::Y)] = Y() - 1;
      b[static_cast<int>(Var::A)] = Z(HalfExp::whole(-1));
      b[static_cast<int>(Var::B)] = Z();
      return Z(HalfExp{ctx.delta}) * substitute(p, b);
  }
  throw std::invalid_argument("unknown specialization target");
}

LaurentPoly swap_dual_variables(const LaurentPoly& p) {
  Bindings b;
  b[static_cast<int>(Var::X)] = Y();
  b[static_cast<int>(Var::Y)] = X();
  b[static_cast<int>(Var::A)] = B();
  b[static_cast<int>(Var::B)] = A();
  return substitute(p, b);
}

}  // namespace qp
