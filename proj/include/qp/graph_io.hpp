#pragma once

// Line-oriented text format for embedded ribbon graphs:
//
//   # comment
//   vertex <vid>: <hid> <hid> ...     cyclic rotation, as written
//   edge <eid>: <hid> <hid> <+|->     '-' marks a twisted edge
//   marked: <eid> ...                 optional, default all edges
//   order: <eid> ...                  optional, lowest first, default declaration order

#include <stdexcept>
#include <string>
#include <string_view>

#include "qp/embedded_graph.hpp"
#include "qp/quasi_tree.hpp"

namespace qp {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct GraphDocument {
  EmbeddedGraph graph;
  EdgeOrder order;
};

GraphDocument parse_document(std::string_view text);
// Throws ParseError with line 0 when the file cannot be read.
GraphDocument read_document(const std::string& path);

// Canonical text; the marked line is omitted iff every edge is marked and the
// order line iff the order is the declaration order.
std::string serialize(const EmbeddedGraph& eg, const EdgeOrder& order);
inline std::string serialize(const GraphDocument& doc) { return serialize(doc.graph, doc.order); }

// Comma- or space-separated edge names to an edge set; throws std::invalid_argument.
EdgeSet parse_edge_list(const RibbonGraph& g, std::string_view names);
std::string format_edge_set(const RibbonGraph& g, EdgeSet s);

}  // namespace qp
