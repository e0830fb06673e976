#include "qp/random_graph.hpp"

#include <charconv>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace qp {

namespace {

std::uint64_t parse_uint(std::string_view s) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad number '" + std::string(s) + "'");
  }
  return out;
}

}  // namespace

Rational parse_probability(std::string_view text) {
  Rational r;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    r = {parse_uint(text.substr(0, slash)), parse_uint(text.substr(slash + 1))};
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 18) throw std::invalid_argument("too many decimal places in '" + std::string(text) + "'");
    r.den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) r.den *= 10;
    r.num = (whole.empty() ? 0 : parse_uint(whole)) * r.den + (frac.empty() ? 0 : parse_uint(frac));
  } else {
    r = {parse_uint(text), 1};
  }
  if (r.den == 0 || r.num > r.den) throw std::invalid_argument("probability '" + std::string(text) + "' not in [0, 1]");
  return r;
}

RibbonGraph random_graph(std::size_t v, std::size_t e, Rational twist_prob, std::uint64_t seed) {
  if (v == 0) throw std::invalid_argument("need at least one vertex");
  if (e + 1 < v) throw std::invalid_argument("too few edges for a connected graph");
  if (e > kMaxEdges) throw std::invalid_argument("at most 64 edges");
  if (twist_prob.den == 0 || twist_prob.num > twist_prob.den) throw std::invalid_argument("twist probability not in [0, 1]");

  std::mt19937_64 rng(seed);
  auto draw = [&](std::uint64_t n) { return rng() % n; };

  std::vector<std::pair<std::size_t, std::size_t>> ends;
  if (v >= 2) {
    std::vector<std::size_t> prufer(v - 2);
    for (auto& x : prufer) x = draw(v);
    std::vector<std::size_t> degree(v, 1);
    for (auto x : prufer) ++degree[x];
    std::set<std::size_t> leaves;
    for (std::size_t i = 0; i < v; ++i) {
      if (degree[i] == 1) leaves.insert(i);
    }
    for (auto x : prufer) {
      const std::size_t leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      ends.emplace_back(leaf, x);
      if (--degree[x] == 1) leaves.insert(x);
    }
    const std::size_t a = *leaves.begin();
    const std::size_t b = *std::next(leaves.begin());
    ends.emplace_back(a, b);
  }
  while (ends.size() < e) {
    const std::size_t a = draw(v);
    const std::size_t b = draw(v);
    ends.emplace_back(a, b);
  }

  std::vector<VertexSpec> vertices(v);
  for (std::size_t i = 0; i < v; ++i) vertices[i].name = "v" + std::to_string(i + 1);
  std::vector<EdgeSpec> edges;
  for (std::size_t k = 0; k < e; ++k) {
    const std::string id = std::to_string(k + 1);
    EdgeSpec spec{"e" + id, "h" + id + "a", "h" + id + "b", false};
    for (auto [vertex, label] : {std::pair{ends[k].first, spec.first}, std::pair{ends[k].second, spec.second}}) {
      auto& rot = vertices[vertex].rotation;
      rot.insert(rot.begin() + static_cast<std::ptrdiff_t>(draw(rot.size() + 1)), label);
    }
    spec.twisted = draw(twist_prob.den) < twist_prob.num;
    edges.push_back(std::move(spec));
  }
  return RibbonGraph(std::move(vertices), std::move(edges));
}

}  // namespace qp
