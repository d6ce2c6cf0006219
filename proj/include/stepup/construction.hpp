#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stepup/coloring.hpp"
#include "stepup/delta.hpp"

namespace stepup {

enum class Rule { I, II, III };

const char* rule_name(Rule rule);

struct Edge4 {
  std::array<Vertex, 4> quad;
  Rule rule;

  friend bool operator==(const Edge4&, const Edge4&) = default;
};

// The 4-graph on {0, ..., 2^width - 1} whose edges are decided by the delta
// profile of each quadruple together with a pair coloring of the delta
// universe. Immutable once constructed.
class HypergraphView {
 public:
  HypergraphView(int width, PairColoring phi);

  int width() const noexcept { return width_; }
  std::uint64_t vertex_count() const noexcept {
    return std::uint64_t{1} << width_;
  }
  const PairColoring& phi() const noexcept { return phi_; }

  bool fits(Vertex v) const noexcept {
    return width_ >= 64 || v < (std::uint64_t{1} << width_);
  }

 private:
  int width_;
  PairColoring phi_;
};

// Rule decision from a precomputed profile (d1,d2,d3); no validation.
// Patterns: monotone with a two-color split fires I; a valley with the high
// side left fires II on unequal arm colors; a valley with the high side
// right fires III on all-equal colors; peaks never fire.
std::optional<Rule> edge_rule(const PairColoring& phi, DeltaValue d1,
                              DeltaValue d2, DeltaValue d3);

// Validating form: quad must be strictly increasing, length 4, inside the
// vertex range. At most one rule can fire for any quad.
std::optional<Rule> edge_predicate(const HypergraphView& hypergraph,
                                   std::span<const Vertex> quad);

inline constexpr std::uint64_t kDefaultMaterializeCap = 4096;

// Every edge in lexicographic quad order. Guarded by a vertex-count cap
// because the quad space grows as C(2^width, 4); use for_each_edge to stream
// larger instances.
std::vector<Edge4> materialize(
    const HypergraphView& hypergraph,
    std::uint64_t vertex_cap = kDefaultMaterializeCap);

// Streaming evaluation in lexicographic quad order.
void for_each_edge(const HypergraphView& hypergraph,
                   const std::function<void(const Edge4&)>& sink,
                   std::uint64_t vertex_cap = kDefaultMaterializeCap);

struct RuleCounts {
  std::uint64_t rule_i = 0;
  std::uint64_t rule_ii = 0;
  std::uint64_t rule_iii = 0;

  std::uint64_t total() const { return rule_i + rule_ii + rule_iii; }

  friend bool operator==(const RuleCounts&, const RuleCounts&) = default;
};

RuleCounts edge_counts_by_rule(
    const HypergraphView& hypergraph,
    std::uint64_t vertex_cap = kDefaultMaterializeCap);

// One edge per line: four ascending base-10 vertices separated by single
// spaces, a tab, then the rule tag (I, II, III). Lines come out sorted
// because materialize is lexicographic.
std::string format_edge_list(std::span<const Edge4> edges);

}  // namespace stepup
