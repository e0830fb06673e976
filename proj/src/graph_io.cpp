#include "qp/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace qp {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::string spaced;
  for (char ch : line) {
    if (ch == ':') {
      spaced += " : ";
    } else {
      spaced += ch;
    }
  }
  std::istringstream in(spaced);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  return tokens;
}

struct EdgeLine {
  std::size_t line;
  EdgeSpec spec;
};

struct NameList {
  std::size_t line = 0;
  std::vector<std::string> names;
};

}  // namespace

GraphDocument parse_document(std::string_view text) {
  std::vector<VertexSpec> vertices;
  std::vector<std::size_t> vertex_lines;
  std::vector<EdgeLine> edges;
  std::optional<NameList> marked;
  std::optional<NameList> order;
  std::unordered_map<std::string, std::size_t> half_edge_line;
  std::unordered_set<std::string> vertex_names;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view line = text.substr(start, stop - start);
    start = stop + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    const std::string& keyword = tokens[0];
    if (keyword == "vertex" || keyword == "edge") {
      if (tokens.size() < 3 || tokens[2] != ":") throw ParseError(line_no, "expected '" + keyword + " <name>: ...'");
      const std::string& name = tokens[1];
      std::vector<std::string> rest(tokens.begin() + 3, tokens.end());
      for (const auto& t : rest) {
        if (t == ":") throw ParseError(line_no, "unexpected ':'");
      }
      if (keyword == "vertex") {
        if (!vertex_names.insert(name).second) throw ParseError(line_no, "duplicate vertex '" + name + "'");
        for (const auto& h : rest) {
          if (!half_edge_line.emplace(h, line_no).second) {
            throw ParseError(line_no, "duplicate half-edge '" + h + "'");
          }
        }
        vertices.push_back({name, std::move(rest)});
        vertex_lines.push_back(line_no);
      } else {
        if (rest.size() != 3) throw ParseError(line_no, "edge '" + name + "' needs two half-edges and a sign");
        if (rest[2] != "+" && rest[2] != "-") {
          throw ParseError(line_no, "bad sign '" + rest[2] + "' on edge '" + name + "'");
        }
        edges.push_back({line_no, {name, rest[0], rest[1], rest[2] == "-"}});
      }
    } else if (keyword == "marked" || keyword == "order") {
      if (tokens.size() < 2 || tokens[1] != ":") throw ParseError(line_no, "expected '" + keyword + ": ...'");
      auto& slot = keyword == "marked" ? marked : order;
      if (slot) throw ParseError(line_no, "repeated '" + keyword + "' line");
      slot = NameList{line_no, std::vector<std::string>(tokens.begin() + 2, tokens.end())};
    } else {
      throw ParseError(line_no, "unknown record '" + keyword + "'");
    }
  }

  if (edges.size() > kMaxEdges) {
    throw ParseError(edges[kMaxEdges].line, "more than " + std::to_string(kMaxEdges) + " edges");
  }
  std::unordered_map<std::string, int> edge_index;
  std::unordered_map<std::string, std::string> owner;
  for (const auto& [line, spec] : edges) {
    if (!edge_index.emplace(spec.name, static_cast<int>(edge_index.size())).second) {
      throw ParseError(line, "duplicate edge '" + spec.name + "'");
    }
    if (spec.first == spec.second) throw ParseError(line, "edge '" + spec.name + "' repeats half-edge '" + spec.first + "'");
    for (const auto& h : {spec.first, spec.second}) {
      if (!half_edge_line.count(h)) throw ParseError(line, "unknown half-edge '" + h + "'");
      auto [it, fresh] = owner.emplace(h, spec.name);
      if (!fresh) throw ParseError(line, "duplicate half-edge '" + h + "' (already in edge '" + it->second + "')");
    }
  }
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    for (const auto& h : vertices[v].rotation) {
      if (!owner.count(h)) throw ParseError(vertex_lines[v], "half-edge '" + h + "' belongs to no edge");
    }
  }

  auto resolve = [&](const NameList& list, const char* what) {
    std::vector<int> out;
    std::unordered_set<int> seen;
    for (const auto& name : list.names) {
      auto it = edge_index.find(name);
      if (it == edge_index.end()) throw ParseError(list.line, std::string(what) + " names unknown edge '" + name + "'");
      if (!seen.insert(it->second).second) {
        throw ParseError(list.line, std::string(what) + " repeats edge '" + name + "'");
      }
      out.push_back(it->second);
    }
    return out;
  };

  std::vector<EdgeSpec> specs;
  for (auto& e : edges) specs.push_back(std::move(e.spec));
  RibbonGraph g(std::move(vertices), std::move(specs));

  EdgeSet marked_set = g.all_edges();
  if (marked) {
    marked_set = 0;
    for (int e : resolve(*marked, "marked")) marked_set |= edge_bit(e);
  }
  EdgeOrder edge_order = EdgeOrder::identity(g.num_edges());
  if (order) {
    std::vector<int> lowest_first = resolve(*order, "order");
    if (lowest_first.size() != g.num_edges()) {
      for (std::size_t e = 0; e < g.num_edges(); ++e) {
        if (std::find(lowest_first.begin(), lowest_first.end(), static_cast<int>(e)) == lowest_first.end()) {
          throw ParseError(order->line, "order omits edge '" + g.edge_name(static_cast<int>(e)) + "'");
        }
      }
    }
    edge_order = EdgeOrder(std::move(lowest_first));
  }
  return {EmbeddedGraph(std::move(g), marked_set), std::move(edge_order)};
}

GraphDocument read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

std::string serialize(const EmbeddedGraph& eg, const EdgeOrder& order) {
  const RibbonGraph& g = eg.cellulation();
  std::ostringstream out;
  for (const auto& v : g.vertex_specs()) {
    out << "vertex " << v.name << ':';
    for (const auto& h : v.rotation) out << ' ' << h;
    out << '\n';
  }
  for (const auto& e : g.edge_specs()) {
    out << "edge " << e.name << ": " << e.first << ' ' << e.second << ' ' << (e.twisted ? '-' : '+') << '\n';
  }
  if (!eg.is_cellular()) out << "marked:" << (eg.marked() ? " " : "") << format_edge_set(g, eg.marked()) << '\n';
  if (order != EdgeOrder::identity(g.num_edges())) {
    out << "order:";
    for (int e : order.lowest_first()) out << ' ' << g.edge_name(e);
    out << '\n';
  }
  return out.str();
}

EdgeSet parse_edge_list(const RibbonGraph& g, std::string_view names) {
  std::string spaced(names);
  for (char& ch : spaced) {
    if (ch == ',') ch = ' ';
  }
  std::istringstream in(spaced);
  EdgeSet out = 0;
  for (std::string name; in >> name;) {
    auto e = g.find_edge(name);
    if (!e) throw std::invalid_argument("unknown edge '" + name + "'");
    out |= edge_bit(*e);
  }
  return out;
}

std::string format_edge_set(const RibbonGraph& g, EdgeSet s) {
  std::string out;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (!contains(s, static_cast<int>(e))) continue;
    if (!out.empty()) out += ' ';
    out += g.edge_name(static_cast<int>(e));
  }
  return out;
}

}  // namespace qp
