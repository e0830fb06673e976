#pragma once

// Seeded random connected ribbon graphs.
//
// The generator is std::mt19937_64 seeded with the given seed; a draw in
// [0, n) is next() % n. Steps, in this order:
//   1. a Pruefer sequence of length v-2 (one draw in [0, v) per entry),
//      decoded into a spanning tree on v1..vn (smallest leaf first);
//   2. for each remaining edge, two endpoint draws in [0, v);
//   3. for edges e1, e2, ... in order: half-edge h<k>a is inserted into its
//      vertex's rotation at a position drawn in [0, len], then h<k>b likewise,
//      then the edge is twisted iff a draw in [0, den) is below num.

#include <cstdint>
#include <string_view>

#include "qp/ribbon_graph.hpp"

namespace qp {

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
};

// "0.3", "3/10", "1" and so on; throws std::invalid_argument outside [0, 1].
Rational parse_probability(std::string_view text);

// Throws std::invalid_argument unless v >= 1, v - 1 <= e <= 64.
RibbonGraph random_graph(std::size_t v, std::size_t e, Rational twist_prob, std::uint64_t seed);

}  // namespace qp
