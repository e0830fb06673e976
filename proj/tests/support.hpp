#pragma once

#include <string>

#include "qp/expansions.hpp"
#include "qp/graph_io.hpp"
#include "qp/graph_polys.hpp"
#include "qp/random_graph.hpp"

namespace qp::testing {

inline GraphDocument fixture(const std::string& name) {
  return read_document(std::string(QP_FIXTURE_DIR) + "/" + name + ".qp");
}

inline RibbonGraph fixture_graph(const std::string& name) { return fixture(name).graph.cellulation(); }

inline EdgeSet edges(const RibbonGraph& g, const std::string& names) { return parse_edge_list(g, names); }

inline LaurentPoly poly(const std::string& text) { return parse_poly(text); }

// Small random connected cellulations, reproducible by index.
inline RibbonGraph small_random(std::uint64_t index, Rational twist = {3, 10}) {
  const std::size_t v = 1 + index % 4;
  const std::size_t e = v - 1 + (index / 4) % (8 - (v - 1) + 1);
  return random_graph(v, e, twist, 1000 + index);
}

}  // namespace qp::testing
