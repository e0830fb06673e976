#include <CLI11.hpp>

#include <iostream>
#include <stdexcept>
#include <string>

#include "qp/expansions.hpp"
#include "qp/graph_io.hpp"
#include "qp/identities.hpp"
#include "qp/random_graph.hpp"

namespace {

enum Exit { kOk = 0, kParseError = 1, kInvalidInput = 2, kCheckFailed = 3 };

std::string braces(const qp::RibbonGraph& g, qp::EdgeSet s) {
  std::string out = "{";
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (!qp::contains(s, static_cast<int>(e))) continue;
    if (out.size() > 1) out += ',';
    out += g.edge_name(static_cast<int>(e));
  }
  return out + "}";
}

int cmd_compute(const std::string& path, const std::string& poly, const std::string& method, unsigned threads) {
  const qp::GraphDocument doc = qp::read_document(path);
  const qp::PolyKind kind = qp::parse_poly_kind(poly);
  const qp::LaurentPoly p = method == "brute" ? qp::evaluate_brute(kind, doc.graph, {threads})
                                              : qp::evaluate_quasitree(kind, doc.graph, doc.order);
  std::cout << qp::to_string(p) << '\n';
  return kOk;
}

int cmd_check(const std::string& path, unsigned threads) {
  const qp::GraphDocument doc = qp::read_document(path);
  bool ok = true;
  for (const qp::Verdict& v : qp::run_identity_suite(doc.graph, doc.order, {threads})) {
    if (!v.applicable) continue;
    if (v.passed) {
      std::cout << "PASS " << v.name << '\n';
    } else {
      std::cout << "FAIL " << v.name << ": " << v.detail << '\n';
      ok = false;
    }
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_quasitrees(const std::string& path) {
  const qp::GraphDocument doc = qp::read_document(path);
  const qp::RibbonGraph& g = doc.graph.cellulation();
  for (const auto& [q, part] : qp::QuasiTreeTable(g, doc.order).entries()) {
    std::cout << braces(g, q) << " DI=" << braces(g, part.dead_internal)
              << " I_o=" << braces(g, part.live_internal_orientable)
              << " I_n=" << braces(g, part.live_internal_nonorientable) << " DE=" << braces(g, part.dead_external)
              << " E_o=" << braces(g, part.live_external_orientable)
              << " E_n=" << braces(g, part.live_external_nonorientable) << '\n';
  }
  return kOk;
}

int cmd_dual(const std::string& path, const std::optional<std::string>& edges) {
  const qp::GraphDocument doc = qp::read_document(path);
  const qp::RibbonGraph& g = doc.graph.cellulation();
  const qp::EdgeSet h = edges ? qp::parse_edge_list(g, *edges) : g.all_edges();
  std::cout << qp::serialize(qp::EmbeddedGraph(qp::partial_dual(g, h)), doc.order);
  return kOk;
}

int cmd_random(std::size_t v, std::size_t e, const std::string& prob, std::uint64_t seed) {
  const qp::RibbonGraph g = qp::random_graph(v, e, qp::parse_probability(prob), seed);
  std::cout << qp::serialize(qp::EmbeddedGraph(g), qp::EdgeOrder::identity(g.num_edges()));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Krushkal, Tutte, Bollobas-Riordan and Las Vergnas polynomials of embedded graphs"};
  app.require_subcommand(1);

  std::string input;
  std::string poly;
  std::string method = "brute";
  unsigned threads = 1;

  auto* compute = app.add_subcommand("compute", "print a polynomial in canonical form");
  compute->add_option("-i,--input", input, "graph document")->required();
  compute->add_option("-p,--poly", poly, "polynomial")
      ->required()
      ->check(CLI::IsMember({"krushkal", "tutte", "br", "lv"}));
  compute->add_option("-m,--method", method, "evaluation method")->check(CLI::IsMember({"brute", "quasitree"}));
  compute->add_option("--threads", threads, "threads for subset sums")->check(CLI::Range(1u, 256u));

  auto* check = app.add_subcommand("check", "run the identity suite");
  check->add_option("-i,--input", input, "graph document")->required();
  check->add_option("--threads", threads, "threads for subset sums")->check(CLI::Range(1u, 256u));

  auto* quasitrees = app.add_subcommand("quasitrees", "list quasi-trees with their activity partitions");
  quasitrees->add_option("-i,--input", input, "graph document")->required();

  std::optional<std::string> edges;
  auto* dual = app.add_subcommand("dual", "print the (partial) dual");
  dual->add_option("-i,--input", input, "graph document")->required();
  dual->add_option("-H,--edges", edges, "comma-separated edges to dualize (default all)");

  std::size_t num_vertices = 0;
  std::size_t num_edges = 0;
  std::string twist = "0";
  std::uint64_t seed = 0;
  auto* random = app.add_subcommand("random", "print a random connected ribbon graph");
  random->add_option("-v,--vertices", num_vertices, "vertex count")->required();
  random->add_option("-e,--edges", num_edges, "edge count")->required();
  random->add_option("-t,--twist", twist, "twist probability, e.g. 0.3 or 3/10");
  random->add_option("-s,--seed", seed, "seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*compute) return cmd_compute(input, poly, method, threads);
    if (*check) return cmd_check(input, threads);
    if (*quasitrees) return cmd_quasitrees(input);
    if (*dual) return cmd_dual(input, edges);
    if (*random) return cmd_random(num_vertices, num_edges, twist, seed);
  } catch (const qp::ParseError& e) {
    std::cerr << "qp: " << input << ": " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    std::cerr << "qp: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kOk;
}
