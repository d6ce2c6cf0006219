#include "stepup/certificate.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace stepup {

namespace {

std::string position_pair(int x, int y) {
  // 1-based positions in report text.
  std::ostringstream os;
  os << "phi(d" << x + 1 << ",d" << y + 1 << ")";
  return os.str();
}

std::string relation_text(int x1, int y1, int x2, int y2, bool equality) {
  return position_pair(x1, y1) + (equality ? " == " : " != ") +
         position_pair(x2, y2);
}

// First maximal monotone segment of at least n consecutive layer members,
// scanning left to right. Returns profile indices.
std::optional<MonotoneRun> find_monotone_run(
    const std::vector<int>& layer, const std::vector<DeltaValue>& profile,
    int n) {
  if (layer.size() < 2) return std::nullopt;
  std::size_t start = 0;
  int direction = 0;  // +1 ascending, -1 descending
  const auto close = [&](std::size_t end) -> std::optional<MonotoneRun> {
    if (end - start + 1 < static_cast<std::size_t>(n)) return std::nullopt;
    MonotoneRun run;
    run.indices.assign(layer.begin() + start, layer.begin() + end + 1);
    return run;
  };
  for (std::size_t k = 1; k < layer.size(); ++k) {
    const int d = profile[layer[k]] > profile[layer[k - 1]] ? 1 : -1;
    if (d != direction) {
      if (direction != 0) {
        if (auto run = close(k - 1)) return run;
        start = k - 1;
      }
      direction = d;
    }
  }
  return close(layer.size() - 1);
}

// Strict local maxima of the layer sequence, left to right, at most `limit`.
std::vector<int> collect_local_maxima(const std::vector<int>& layer,
                                      const std::vector<DeltaValue>& profile,
                                      std::size_t limit) {
  std::vector<int> maxima;
  maxima.reserve(limit);
  for (std::size_t k = 1; k + 1 < layer.size(); ++k) {
    if (profile[layer[k]] > profile[layer[k - 1]] &&
        profile[layer[k]] > profile[layer[k + 1]]) {
      maxima.push_back(layer[k]);
      if (maxima.size() == limit) break;
    }
  }
  return maxima;
}

void verify_star_property(const std::vector<int>& layer,
                          const std::vector<DeltaValue>& profile) {
  for (std::size_t k = 1; k < layer.size(); ++k) {
    const int a = layer[k - 1];
    const int b = layer[k];
    if (profile[a] == profile[b])
      fail(Errc::internal_inconsistency,
           "layer construction: consecutive members with equal values");
    const DeltaValue bound = std::max(profile[a], profile[b]);
    for (int x = a + 1; x < b; ++x)
      if (profile[x] >= bound)
        fail(Errc::internal_inconsistency,
             "layer construction: intermediate value not dominated");
  }
}

int position_in(const std::vector<int>& layer, int index) {
  const auto it = std::lower_bound(layer.begin(), layer.end(), index);
  if (it == layer.end() || *it != index) return -1;
  return static_cast<int>(it - layer.begin());
}

int pred_in(const std::vector<int>& layer, int index) {
  const int pos = position_in(layer, index);
  if (pos <= 0)
    fail(Errc::internal_inconsistency, "extraction: missing left neighbour");
  return layer[pos - 1];
}

int succ_in(const std::vector<int>& layer, int index) {
  const int pos = position_in(layer, index);
  if (pos < 0 || pos + 1 >= static_cast<int>(layer.size()))
    fail(Errc::internal_inconsistency, "extraction: missing right neighbour");
  return layer[pos + 1];
}

// Extends phi so a verification view over `width` bits can be built; the
// packed triangular layout keeps existing pair indices stable.
PairColoring widen(const PairColoring& phi, int width) {
  if (phi.universe() >= width) return phi;
  PairColoring wide(width);
  for (std::size_t k = 0; k < phi.pair_count(); ++k)
    wide.set_bit(k, phi.bit(k));
  return wide;
}

HypergraphView make_view(std::span<const Vertex> tuple,
                         const PairColoring& phi) {
  const int width =
      std::max(1, static_cast<int>(std::bit_width(tuple.back())));
  if (width > 63)
    fail(Errc::bad_parameters, "vertices above 2^63 are not supported");
  return HypergraphView(width, widen(phi, width));
}

}  // namespace

std::vector<std::int64_t> layer_size_schedule(std::int64_t beta0, int factor,
                                              int depth) {
  if (beta0 < 0 || factor < 2 || depth < 0)
    fail(Errc::bad_parameters, "layer_size_schedule: invalid parameters");
  std::vector<std::int64_t> sizes(depth + 1);
  sizes[0] = beta0;
  for (int t = 1; t <= depth; ++t) sizes[t] = sizes[t - 1] / factor;
  return sizes;
}

BuildResult build_layers(std::span<const Vertex> tuple,
                         const PairColoring& phi, int n, int factor,
                         int depth, bool strict_paper) {
  if (factor < 2 || depth < 1 || n < 3)
    fail(Errc::bad_parameters,
         "build_layers: need factor >= 2, depth >= 1, n >= 3");
  if (tuple.size() < 2)
    fail(Errc::bad_parameters, "build_layers: need at least two vertices");
  if (strict_paper && factor != 2 * n)
    fail(Errc::bad_parameters, "build_layers: strict mode fixes factor = 2n");

  LayerStack stack;
  stack.tuple.assign(tuple.begin(), tuple.end());
  stack.profile = delta_profile(tuple);
  stack.factor = factor;
  stack.depth = depth;

  for (DeltaValue d : stack.profile)
    if (d >= phi.universe())
      fail(Errc::bad_parameters,
           "build_layers: coloring universe cannot color the profile");

  std::vector<int> base(stack.profile.size());
  for (std::size_t i = 0; i < base.size(); ++i) base[i] = static_cast<int>(i);
  stack.layers.push_back(std::move(base));

  std::int64_t beta = static_cast<std::int64_t>(stack.profile.size());
  for (int t = 1; t <= depth; ++t) {
    const std::vector<int>& prev = stack.layers.back();
    if (auto run = find_monotone_run(prev, stack.profile, n)) return *run;
    if (strict_paper && beta % factor != 0)
      fail(Errc::bad_parameters,
           "build_layers: strict mode needs exact divisibility at level " +
               std::to_string(t));
    beta /= factor;
    if (beta < 1)
      fail(Errc::insufficient_maxima,
           "build_layers: level " + std::to_string(t) +
               " has no room for local maxima",
           t);
    auto maxima = collect_local_maxima(prev, stack.profile,
                                       static_cast<std::size_t>(beta));
    if (maxima.size() < static_cast<std::size_t>(beta))
      fail(Errc::insufficient_maxima,
           "build_layers: fewer than " + std::to_string(beta) +
               " local maxima at level " + std::to_string(t),
           t);
    verify_star_property(maxima, stack.profile);
    stack.layers.push_back(std::move(maxima));
  }
  return stack;
}

std::pair<int, int> neighbor_indices(const LayerStack& stack, int level,
                                     int index) {
  if (level < 1 || level > stack.depth)
    fail(Errc::bad_parameters, "neighbor_indices: level out of range");
  if (position_in(stack.layers[level], index) < 0)
    fail(Errc::not_in_layer, "neighbor_indices: index not in layer");
  const std::vector<int>& prev = stack.layers[level - 1];
  const int pos = position_in(prev, index);
  if (pos < 0)
    fail(Errc::internal_inconsistency, "neighbor_indices: layers not nested");
  if (pos == 0 || pos + 1 == static_cast<int>(prev.size()))
    fail(Errc::boundary_element,
         "neighbor_indices: index is a boundary element of the layer below");
  return {prev[pos - 1], prev[pos + 1]};
}

bool check_observation(const LayerStack& stack, int level, int index) {
  const auto [left, right] = neighbor_indices(stack, level, index);
  for (int x = left; x <= right; ++x) {
    if (x == index) continue;
    if (stack.profile[x] >= stack.profile[index]) return false;
  }
  return true;
}

std::optional<Edge4> monotone_witness(std::span<const Vertex> tuple,
                                      const MonotoneRun& run,
                                      const PairColoring& phi) {
  if (run.indices.size() < 3)
    fail(Errc::not_monotone, "monotone_witness: run needs three members");
  require_strictly_increasing(tuple);
  std::vector<DeltaValue> values;
  values.reserve(run.indices.size());
  for (std::size_t k = 0; k < run.indices.size(); ++k) {
    const int idx = run.indices[k];
    if (idx < 0 || idx + 1 >= static_cast<int>(tuple.size()))
      fail(Errc::bad_parameters, "monotone_witness: index out of range");
    if (k > 0 && run.indices[k - 1] >= idx)
      fail(Errc::bad_parameters, "monotone_witness: indices not increasing");
    values.push_back(delta(tuple[idx], tuple[idx + 1]));
  }

  bool ascending = true;
  bool descending = true;
  for (std::size_t k = 1; k < values.size(); ++k) {
    ascending = ascending && values[k - 1] < values[k];
    descending = descending && values[k - 1] > values[k];
  }
  if (!ascending && !descending)
    fail(Errc::not_monotone, "monotone_witness: values are not monotone");

  std::vector<DeltaValue> sorted = values;
  if (descending) std::reverse(sorted.begin(), sorted.end());
  const auto triple = find_good_triple(phi, sorted);
  if (!triple) return std::nullopt;

  const auto slot = [&values](DeltaValue v) {
    return static_cast<std::size_t>(
        std::find(values.begin(), values.end(), v) - values.begin());
  };
  std::array<Vertex, 4> quad;
  if (ascending) {
    const std::size_t j1 = static_cast<std::size_t>(run.indices[slot((*triple)[0])]);
    const std::size_t j2 = static_cast<std::size_t>(run.indices[slot((*triple)[1])]);
    const std::size_t j3 = static_cast<std::size_t>(run.indices[slot((*triple)[2])]);
    quad = {tuple[j1], tuple[j1 + 1], tuple[j2 + 1], tuple[j3 + 1]};
  } else {
    // Descending runs anchor on the right: the largest value leads.
    const std::size_t j1 = static_cast<std::size_t>(run.indices[slot((*triple)[2])]);
    const std::size_t j2 = static_cast<std::size_t>(run.indices[slot((*triple)[1])]);
    const std::size_t j3 = static_cast<std::size_t>(run.indices[slot((*triple)[0])]);
    quad = {tuple[j1], tuple[j2], tuple[j3], tuple[j3 + 1]};
  }

  const HypergraphView view = make_view(tuple, phi);
  const auto fired = edge_predicate(view, quad);
  if (!fired || *fired != Rule::I)
    fail(Errc::internal_inconsistency,
         "monotone_witness: derived quad does not fire rule I");
  return Edge4{quad, Rule::I};
}

const char* extraction_case_name(ExtractionCase kind) {
  switch (kind) {
    case ExtractionCase::A1LessA2: return "A1LessA2";
    case ExtractionCase::A1GreaterA2: return "A1GreaterA2";
    case ExtractionCase::MonotoneRunCase: return "MonotoneRunCase";
  }
  return "?";
}

namespace {

// Shared state of one extraction walk.
struct Extraction {
  const std::vector<Vertex>& tuple;
  const std::vector<DeltaValue>& profile;
  const PairColoring& phi;
  const HypergraphView& view;
  ExtractionTrace trace;

  Color color(int x, int y) const {
    return phi.color_of(profile[x], profile[y]);
  }

  Edge4 verified(const std::array<Vertex, 4>& quad, Rule expected) const {
    const auto fired = edge_predicate(view, quad);
    if (!fired || *fired != expected)
      fail(Errc::internal_inconsistency,
           "extraction: derived quad does not fire the expected rule");
    return Edge4{quad, expected};
  }

  std::array<Vertex, 4> quad_of(int i, int j, int k, int l) const {
    return {tuple[i], tuple[j], tuple[k], tuple[l]};
  }

  void held(std::string relation) {
    trace.steps.push_back({std::move(relation), true, std::nullopt});
  }

  void failed(std::string relation, const Edge4& edge) {
    trace.steps.push_back({std::move(relation), false, edge.quad});
    trace.edge = edge;
  }
};

// Relation chain for the ascending final pair: outer anchor A, pivot P,
// far element FAR, then the descent c > d > e below the pivot.
void walk_less(Extraction& ex, int A, int P, int FAR, int c, int d, int e) {
  for (int x = c; x < P; ++x) {
    const std::string rel = relation_text(x, P, P, FAR, false);
    if (ex.color(x, P) != ex.color(P, FAR)) {
      ex.held(rel);
      continue;
    }
    Edge4 edge{};
    if (ex.color(x, FAR) != ex.color(P, FAR))
      edge = ex.verified(ex.quad_of(x, x + 1, P + 1, FAR + 1), Rule::I);
    else if (ex.color(A, x) != ex.color(x, P))
      edge = ex.verified(ex.quad_of(A, x, x + 1, P + 1), Rule::II);
    else
      edge = ex.verified(ex.quad_of(A, x, x + 1, FAR + 1), Rule::III);
    ex.failed(rel, edge);
    return;
  }
  for (int x = e; x < d; ++x) {
    const std::string rel = relation_text(x, d, d, P, false);
    if (ex.color(x, d) != ex.color(d, P)) {
      ex.held(rel);
      continue;
    }
    Edge4 edge{};
    if (ex.color(x, P) != ex.color(d, P))
      edge = ex.verified(ex.quad_of(x, x + 1, d + 1, P + 1), Rule::I);
    else if (ex.color(c, x) != ex.color(x, d))
      edge = ex.verified(ex.quad_of(c, x, x + 1, d + 1), Rule::II);
    else
      edge = ex.verified(ex.quad_of(c, x, x + 1, P + 1), Rule::III);
    ex.failed(rel, edge);
    return;
  }
  const std::string rel = relation_text(A, e, e, d, true);
  if (ex.color(A, e) != ex.color(e, d)) {
    const Edge4 edge =
        ex.verified(ex.quad_of(A, e, e + 1, d + 1), Rule::II);
    ex.failed(rel, edge);
    return;
  }
  ex.held(rel);
  ex.trace.edge = ex.verified(ex.quad_of(A, e, e + 1, P + 1), Rule::II);
}

// Relation chain for the descending final pair.
void walk_greater(Extraction& ex, int a1, int a2, int b, int c, int d, int e,
                  int f) {
  for (int x = b + 1; x <= c; ++x) {
    const std::string rel = relation_text(b, x, a1, b, false);
    if (ex.color(b, x) != ex.color(a1, b)) {
      ex.held(rel);
      continue;
    }
    Edge4 edge{};
    if (ex.color(a1, x) != ex.color(a1, b))
      edge = ex.verified(ex.quad_of(a1, b, x, x + 1), Rule::I);
    else if (ex.color(a1, b) != ex.color(b, a2))
      edge = ex.verified(ex.quad_of(a1, b, b + 1, a2 + 1), Rule::II);
    else if (ex.color(a1, x) != ex.color(x, a2))
      edge = ex.verified(ex.quad_of(a1, x, x + 1, a2 + 1), Rule::II);
    else
      edge = ex.verified(ex.quad_of(b, x, x + 1, a2 + 1), Rule::III);
    ex.failed(rel, edge);
    return;
  }
  for (int x = d + 1; x <= e; ++x) {
    const std::string rel = relation_text(d, x, b, d, false);
    if (ex.color(d, x) != ex.color(b, d)) {
      ex.held(rel);
      continue;
    }
    Edge4 edge{};
    if (ex.color(b, x) != ex.color(b, d))
      edge = ex.verified(ex.quad_of(b, d, x, x + 1), Rule::I);
    else if (ex.color(b, d) != ex.color(d, c))
      edge = ex.verified(ex.quad_of(b, d, d + 1, c + 1), Rule::II);
    else if (ex.color(b, x) != ex.color(x, c))
      edge = ex.verified(ex.quad_of(b, x, x + 1, c + 1), Rule::II);
    else
      edge = ex.verified(ex.quad_of(d, x, x + 1, c + 1), Rule::III);
    ex.failed(rel, edge);
    return;
  }
  const std::string rel = relation_text(d, f, f, e, true);
  if (ex.color(d, f) != ex.color(f, e)) {
    const Edge4 edge =
        ex.verified(ex.quad_of(d, f, f + 1, e + 1), Rule::II);
    ex.failed(rel, edge);
    return;
  }
  ex.held(rel);
  ex.trace.edge = ex.verified(ex.quad_of(b, f, f + 1, e + 1), Rule::II);
}

}  // namespace

ExtractionTrace extract_edge(std::span<const Vertex> tuple,
                             const PairColoring& phi, int n, int factor,
                             int depth) {
  if (depth < 5)
    fail(Errc::bad_parameters,
         "extract_edge: the relation walk spans six layers, need depth >= 5");

  BuildResult built = [&] {
    try {
      return build_layers(tuple, phi, n, factor, depth);
    } catch (const Error& e) {
      if (e.code() == Errc::insufficient_maxima)
        fail(Errc::insufficient_size, e.what());
      throw;
    }
  }();

  if (std::holds_alternative<MonotoneRun>(built)) {
    const MonotoneRun& run = std::get<MonotoneRun>(built);
    const auto edge = monotone_witness(tuple, run, phi);
    if (!edge)
      fail(Errc::insufficient_size,
           "extract_edge: monotone run without a good triple");
    ExtractionTrace trace;
    trace.kind = ExtractionCase::MonotoneRunCase;
    std::ostringstream os;
    os << "monotone run of length " << run.indices.size() << " at d"
       << run.indices.front() + 1 << "..d" << run.indices.back() + 1
       << " contains a good triple";
    trace.steps.push_back({os.str(), true, std::nullopt});
    trace.edge = *edge;
    return trace;
  }

  const LayerStack stack = std::get<LayerStack>(std::move(built));
  const int T = stack.depth;
  const auto& top = stack.layers[T];
  if (top.size() < 2)
    fail(Errc::insufficient_size,
         "extract_edge: final layer holds fewer than two members");

  const HypergraphView view = make_view(tuple, phi);
  Extraction ex{stack.tuple, stack.profile, phi, view, {}};

  const int a1 = top[0];
  const int a2 = top[1];
  if (stack.profile[a1] == stack.profile[a2])
    fail(Errc::internal_inconsistency,
         "extract_edge: equal values on the final layer");

  if (stack.profile[a1] < stack.profile[a2]) {
    ex.trace.kind = ExtractionCase::A1LessA2;
    const int b1 = succ_in(stack.layers[T - 1], a1);
    const int b2 = succ_in(stack.layers[T - 2], b1);
    const Color anchor = ex.color(a1, a2);
    int pivot = 0, outer = a1, c = 0, d = 0, e = 0;
    if (anchor == ex.color(b1, a2)) {
      ex.trace.branch = 1;
      pivot = b1;
      c = pred_in(stack.layers[T - 2], pivot);
      d = succ_in(stack.layers[T - 3], c);
      e = pred_in(stack.layers[T - 4], d);
    } else if (anchor == ex.color(b2, a2)) {
      ex.trace.branch = 2;
      pivot = b2;
      c = pred_in(stack.layers[T - 3], pivot);
      d = succ_in(stack.layers[T - 4], c);
      e = pred_in(stack.layers[T - 5], d);
    } else {
      // Two colors force the remaining coincidence.
      ex.trace.branch = 3;
      pivot = b2;
      outer = b1;
      c = pred_in(stack.layers[T - 3], pivot);
      d = succ_in(stack.layers[T - 4], c);
      e = pred_in(stack.layers[T - 5], d);
    }
    walk_less(ex, outer, pivot, a2, c, d, e);
  } else {
    ex.trace.kind = ExtractionCase::A1GreaterA2;
    const int b = pred_in(stack.layers[T - 1], a2);
    const int c = succ_in(stack.layers[T - 2], b);
    const int d = pred_in(stack.layers[T - 3], c);
    const int e = succ_in(stack.layers[T - 4], d);
    const int f = pred_in(stack.layers[T - 5], e);
    walk_greater(ex, a1, a2, b, c, d, e, f);
  }
  return ex.trace;
}

std::string format_trace(const ExtractionTrace& trace) {
  std::ostringstream os;
  os << "case=" << extraction_case_name(trace.kind)
     << " branch=" << trace.branch << '\n';
  for (const TraceStep& step : trace.steps) {
    os << step.relation;
    if (step.held) {
      os << " HELD\n";
    } else {
      os << " FAILED quad=" << (*step.quad)[0] << ' ' << (*step.quad)[1]
         << ' ' << (*step.quad)[2] << ' ' << (*step.quad)[3] << '\n';
    }
  }
  os << "EDGE " << trace.edge.quad[0] << ' ' << trace.edge.quad[1] << ' '
     << trace.edge.quad[2] << ' ' << trace.edge.quad[3]
     << " rule=" << rule_name(trace.edge.rule) << '\n';
  return os.str();
}

}  // namespace stepup
