#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "stepup/coloring.hpp"
#include "stepup/construction.hpp"
#include "stepup/delta.hpp"

namespace stepup {

// Nested local-maxima index layers over the delta profile of a vertex set.
// Layer 0 holds every profile index; layer t holds the first beta_t strict
// local maxima of layer t-1. Between consecutive members of any layer, all
// intermediate profile values stay below the larger endpoint and the two
// endpoint values differ.
struct LayerStack {
  std::vector<Vertex> tuple;
  std::vector<DeltaValue> profile;
  int factor = 2;
  int depth = 0;
  std::vector<std::vector<int>> layers;
};

// At least n consecutive members of one layer whose profile values are
// strictly monotone. Indices are profile positions.
struct MonotoneRun {
  std::vector<int> indices;
};

using BuildResult = std::variant<LayerStack, MonotoneRun>;

// Per-level layer sizes: beta_0 = beta0, beta_t = beta_{t-1} / factor
// (integer division). With beta0 = 64 n^5 and factor 2n this lands on
// beta_5 = 2 exactly.
std::vector<std::int64_t> layer_size_schedule(std::int64_t beta0, int factor,
                                              int depth);

// Greedy layer construction. Before building each level the previous layer
// is scanned for a monotone consecutive run of length n, which is returned
// instead when present (it short-circuits extraction). strict_paper demands
// factor == 2n and exact divisibility at every level.
BuildResult build_layers(std::span<const Vertex> tuple,
                         const PairColoring& phi, int n, int factor,
                         int depth, bool strict_paper = false);

// Closest members of layer `level - 1` on either side of `index`, which must
// belong to layer `level`. Both neighbours carry strictly smaller profile
// values.
std::pair<int, int> neighbor_indices(const LayerStack& stack, int level,
                                     int index);

// profile[x] < profile[index] for every raw x strictly inside the neighbour
// window returned by neighbor_indices (and for the neighbours themselves).
bool check_observation(const LayerStack& stack, int level, int index);

// Turns a monotone run into an explicit edge: a good triple among the run
// values pins three profile positions whose spanning quad is monotone with
// exactly that profile, so it fires rule I. Increasing runs anchor the quad
// on the left, decreasing runs on the right. nullopt when the run values
// contain no good triple.
std::optional<Edge4> monotone_witness(std::span<const Vertex> tuple,
                                      const MonotoneRun& run,
                                      const PairColoring& phi);

enum class ExtractionCase { A1LessA2, A1GreaterA2, MonotoneRunCase };

const char* extraction_case_name(ExtractionCase kind);

struct TraceStep {
  std::string relation;
  bool held = false;
  std::optional<std::array<Vertex, 4>> quad;  // set when the relation failed
};

struct ExtractionTrace {
  ExtractionCase kind = ExtractionCase::MonotoneRunCase;
  int branch = 0;  // pigeonhole branch for A1LessA2, 0 otherwise
  std::vector<TraceStep> steps;
  Edge4 edge{};
};

// Runs the layered independence argument as an algorithm on the given set:
// builds depth layers (default 5), then walks the relation chains of the
// final two-element layer. Each asserted color relation either holds, or its
// associated quad is itself an edge and is returned. Every candidate is
// re-verified with edge_predicate; a chain that completes without yielding a
// verified edge raises internal_inconsistency.
ExtractionTrace extract_edge(std::span<const Vertex> tuple,
                             const PairColoring& phi, int n, int factor,
                             int depth = 5);

// Text form: case/branch header, one line per relation check, final EDGE
// line. Profile positions are reported 1-based.
std::string format_trace(const ExtractionTrace& trace);

}  // namespace stepup
