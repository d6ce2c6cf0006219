#include "stepup/construction.hpp"

#include <sstream>

namespace stepup {

const char* rule_name(Rule rule) {
  switch (rule) {
    case Rule::I: return "I";
    case Rule::II: return "II";
    case Rule::III: return "III";
  }
  return "?";
}

HypergraphView::HypergraphView(int width, PairColoring phi)
    : width_(width), phi_(std::move(phi)) {
  if (width < 1 || width > 63)
    fail(Errc::bad_parameters, "HypergraphView: width must be in [1, 63]");
  if (phi_.universe() < width)
    fail(Errc::width_mismatch,
         "HypergraphView: coloring universe smaller than vertex width");
}

std::optional<Rule> edge_rule(const PairColoring& phi, DeltaValue d1,
                              DeltaValue d2, DeltaValue d3) {
  if ((d1 < d2 && d2 < d3) || (d1 > d2 && d2 > d3)) {
    const Color a = phi.color_of(d1, d2);
    if (a == phi.color_of(d2, d3) && a != phi.color_of(d1, d3))
      return Rule::I;
    return std::nullopt;
  }
  if (d1 > d2 && d2 < d3) {
    if (d1 > d3) {
      if (phi.color_of(d1, d2) != phi.color_of(d2, d3)) return Rule::II;
      return std::nullopt;
    }
    // d1 == d3 cannot happen in a valley (a delta profile obeys property C).
    const Color a = phi.color_of(d1, d2);
    if (a == phi.color_of(d1, d3) && a == phi.color_of(d2, d3))
      return Rule::III;
    return std::nullopt;
  }
  return std::nullopt;  // peak
}

std::optional<Rule> edge_predicate(const HypergraphView& hypergraph,
                                   std::span<const Vertex> quad) {
  if (quad.size() != 4)
    fail(Errc::wrong_arity, "edge_predicate: need exactly four vertices");
  require_strictly_increasing(quad);
  for (Vertex v : quad)
    if (!hypergraph.fits(v))
      fail(Errc::width_mismatch, "edge_predicate: vertex outside 2^width");
  return edge_rule(hypergraph.phi(), delta(quad[0], quad[1]),
                   delta(quad[1], quad[2]), delta(quad[2], quad[3]));
}

void for_each_edge(const HypergraphView& hypergraph,
                   const std::function<void(const Edge4&)>& sink,
                   std::uint64_t vertex_cap) {
  const std::uint64_t count = hypergraph.vertex_count();
  if (count > vertex_cap)
    fail(Errc::too_large, "edge enumeration: vertex count exceeds cap");
  const PairColoring& phi = hypergraph.phi();
  for (Vertex a = 0; a + 3 < count; ++a)
    for (Vertex b = a + 1; b + 2 < count; ++b) {
      const DeltaValue d1 = delta(a, b);
      for (Vertex c = b + 1; c + 1 < count; ++c) {
        const DeltaValue d2 = delta(b, c);
        for (Vertex d = c + 1; d < count; ++d) {
          if (auto rule = edge_rule(phi, d1, d2, delta(c, d)))
            sink(Edge4{{a, b, c, d}, *rule});
        }
      }
    }
}

std::vector<Edge4> materialize(const HypergraphView& hypergraph,
                               std::uint64_t vertex_cap) {
  std::vector<Edge4> edges;
  for_each_edge(
      hypergraph, [&edges](const Edge4& e) { edges.push_back(e); },
      vertex_cap);
  return edges;
}

RuleCounts edge_counts_by_rule(const HypergraphView& hypergraph,
                               std::uint64_t vertex_cap) {
  RuleCounts counts;
  for_each_edge(
      hypergraph,
      [&counts](const Edge4& e) {
        switch (e.rule) {
          case Rule::I: ++counts.rule_i; break;
          case Rule::II: ++counts.rule_ii; break;
          case Rule::III: ++counts.rule_iii; break;
        }
      },
      vertex_cap);
  return counts;
}

std::string format_edge_list(std::span<const Edge4> edges) {
  std::ostringstream os;
  for (const Edge4& e : edges) {
    os << e.quad[0] << ' ' << e.quad[1] << ' ' << e.quad[2] << ' '
       << e.quad[3] << '\t' << rule_name(e.rule) << '\n';
  }
  return os.str();
}

}  // namespace stepup
