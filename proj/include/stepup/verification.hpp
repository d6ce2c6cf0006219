#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stepup/construction.hpp"

namespace stepup {

struct K5Violation {
  std::array<Vertex, 5> five;

  friend bool operator==(const K5Violation&, const K5Violation&) = default;
};

struct AlphaResult {
  int alpha = 0;
  std::vector<Vertex> witness;
};

// True iff no 4-subset of the strictly increasing set S is an edge.
bool is_independent(const HypergraphView& hypergraph,
                    std::span<const Vertex> S);

inline constexpr std::uint64_t kDefaultK5Cap = 64;

// Generic complete-5-subgraph scanner over vertices {0,...,count-1}; returns
// the lexicographically first 5-set whose five 4-subsets all satisfy the
// predicate. Sharded across workers with early exit.
std::optional<std::array<Vertex, 5>> find_clique5(
    std::uint64_t vertex_count,
    const std::function<bool(std::span<const Vertex>)>& is_edge,
    int workers = 1);

// Scans all 5-subsets of the vertex set for an induced complete 4-graph on
// five vertices. The construction makes this come out empty for every
// coloring; the scan is the check of that claim.
std::optional<K5Violation> find_k5(const HypergraphView& hypergraph,
                                   std::uint64_t vertex_cap = kDefaultK5Cap,
                                   int workers = 1);

// Exact maximum independent set by depth-first branch and bound: vertices
// tried in ascending order, pruning when the remaining vertices cannot beat
// the incumbent. Requires 2^width <= vertex_cap <= 64.
AlphaResult independence_number(const HypergraphView& hypergraph,
                                std::uint64_t vertex_cap);

// Seeded greedy pass over a deterministic candidate stream; the result is
// independent and at least a lower bound for alpha.
std::vector<Vertex> greedy_independent_lower_bound(
    const HypergraphView& hypergraph, std::uint64_t seed);

// One line of the all-colorings sweep report.
struct SweepLine {
  std::string coloring_hex;
  bool k5_free = false;
  int alpha = 0;
};

struct SweepReport {
  std::vector<SweepLine> lines;  // ordered by coloring bit pattern
  int min_alpha = 0;
  int max_alpha = 0;
  std::uint64_t k5_violations = 0;
};

// Structural sweep over all 2^C(width,2) colorings of a width-D vertex set:
// K5 scan per coloring, plus exact alpha when with_alpha is set. Only sane
// for width <= 5 (1024 colorings).
SweepReport sweep_all_colorings(int width, int workers = 1,
                                bool with_alpha = true);

// "<hex> k5free=<bool> alpha=<int>"
std::string format_sweep_line(const SweepLine& line);

}  // namespace stepup
