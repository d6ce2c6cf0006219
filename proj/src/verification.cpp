#include "stepup/verification.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

#include "stepup/coloring.hpp"

namespace stepup {

namespace {

// C(n,k) for n <= 64, k <= 5.
struct Binomials {
  std::uint64_t c[65][6] = {};
  constexpr Binomials() {
    for (int n = 0; n <= 64; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= 5; ++k)
        c[n][k] = n == 0 ? 0 : c[n - 1][k - 1] + c[n - 1][k];
    }
  }
};
constexpr Binomials kBinom;

inline std::uint64_t binom(std::uint64_t n, int k) {
  return kBinom.c[n][k];
}

// Colex rank of {a<b<c<d} within all 4-subsets of {0,...,count-1}.
inline std::size_t quad_rank(Vertex a, Vertex b, Vertex c, Vertex d) {
  return static_cast<std::size_t>(binom(a, 1) + binom(b, 2) + binom(c, 3) +
                                  binom(d, 4));
}

enum class PatternKind : std::uint8_t {
  Peak,
  Monotone,
  ValleyHighLeft,   // d1 > d2 < d3 with d1 > d3
  ValleyHighRight,  // d1 > d2 < d3 with d1 < d3
};

struct QuadPattern {
  PatternKind kind = PatternKind::Peak;
  std::uint16_t p12 = 0, p23 = 0, p13 = 0;  // pair indices of (d1,d2) etc.
};

// Coloring-independent view of every quad of a width-D vertex set: the
// profile pattern plus the three pair indices its colors are read from.
std::vector<QuadPattern> build_quad_patterns(std::uint64_t count) {
  std::vector<QuadPattern> table(
      static_cast<std::size_t>(binom(count, 4)));
  for (Vertex a = 0; a + 3 < count; ++a)
    for (Vertex b = a + 1; b + 2 < count; ++b) {
      const DeltaValue d1 = delta(a, b);
      for (Vertex c = b + 1; c + 1 < count; ++c) {
        const DeltaValue d2 = delta(b, c);
        for (Vertex d = c + 1; d < count; ++d) {
          const DeltaValue d3 = delta(c, d);
          QuadPattern& q = table[quad_rank(a, b, c, d)];
          if ((d1 < d2 && d2 < d3) || (d1 > d2 && d2 > d3))
            q.kind = PatternKind::Monotone;
          else if (d1 > d2 && d2 < d3)
            q.kind = d1 > d3 ? PatternKind::ValleyHighLeft
                             : PatternKind::ValleyHighRight;
          else
            continue;  // peak, colors never read
          q.p12 = static_cast<std::uint16_t>(PairColoring::pair_index(d1, d2));
          q.p23 = static_cast<std::uint16_t>(PairColoring::pair_index(d2, d3));
          q.p13 = static_cast<std::uint16_t>(PairColoring::pair_index(d1, d3));
        }
      }
    }
  return table;
}

inline bool edge_bit(const QuadPattern& q, std::uint32_t coloring_mask) {
  const bool b12 = (coloring_mask >> q.p12) & 1u;
  const bool b23 = (coloring_mask >> q.p23) & 1u;
  const bool b13 = (coloring_mask >> q.p13) & 1u;
  switch (q.kind) {
    case PatternKind::Monotone: return b12 == b23 && b12 != b13;
    case PatternKind::ValleyHighLeft: return b12 != b23;
    case PatternKind::ValleyHighRight: return b12 == b23 && b12 == b13;
    case PatternKind::Peak: return false;
  }
  return false;
}

// Edge flags by colex quad rank for an arbitrary coloring.
std::vector<std::uint8_t> build_edge_flags(const HypergraphView& hypergraph) {
  const std::uint64_t count = hypergraph.vertex_count();
  const PairColoring& phi = hypergraph.phi();
  std::vector<std::uint8_t> flags(static_cast<std::size_t>(binom(count, 4)),
                                  0);
  for (Vertex a = 0; a + 3 < count; ++a)
    for (Vertex b = a + 1; b + 2 < count; ++b) {
      const DeltaValue d1 = delta(a, b);
      for (Vertex c = b + 1; c + 1 < count; ++c) {
        const DeltaValue d2 = delta(b, c);
        for (Vertex d = c + 1; d < count; ++d)
          if (edge_rule(phi, d1, d2, delta(c, d)))
            flags[quad_rank(a, b, c, d)] = 1;
      }
    }
  return flags;
}

// The five quad ranks of every 5-subset, flattened.
std::vector<std::uint32_t> build_subset5_ranks(std::uint64_t count) {
  std::vector<std::uint32_t> ranks;
  ranks.reserve(static_cast<std::size_t>(binom(count, 5)) * 5);
  for (Vertex a = 0; a + 4 < count; ++a)
    for (Vertex b = a + 1; b + 3 < count; ++b)
      for (Vertex c = b + 1; c + 2 < count; ++c)
        for (Vertex d = c + 1; d + 1 < count; ++d)
          for (Vertex e = d + 1; e < count; ++e) {
            ranks.push_back(static_cast<std::uint32_t>(quad_rank(a, b, c, d)));
            ranks.push_back(static_cast<std::uint32_t>(quad_rank(a, b, c, e)));
            ranks.push_back(static_cast<std::uint32_t>(quad_rank(a, b, d, e)));
            ranks.push_back(static_cast<std::uint32_t>(quad_rank(a, c, d, e)));
            ranks.push_back(static_cast<std::uint32_t>(quad_rank(b, c, d, e)));
          }
  return ranks;
}

bool k5_free_from_flags(const std::vector<std::uint8_t>& flags,
                        const std::vector<std::uint32_t>& subset_ranks) {
  for (std::size_t i = 0; i + 4 < subset_ranks.size(); i += 5) {
    if (flags[subset_ranks[i]] && flags[subset_ranks[i + 1]] &&
        flags[subset_ranks[i + 2]] && flags[subset_ranks[i + 3]] &&
        flags[subset_ranks[i + 4]])
      return false;
  }
  return true;
}

// Depth-first branch and bound over ascending vertices.
struct IndependentSetSearch {
  std::uint64_t count;
  const std::vector<std::uint8_t>& edge_flags;
  std::vector<Vertex> current;
  std::vector<Vertex> best_set;
  std::size_t best = 0;

  bool compatible(Vertex v) const {
    const std::size_t s = current.size();
    for (std::size_t i = 0; i + 2 < s; ++i)
      for (std::size_t j = i + 1; j + 1 < s; ++j)
        for (std::size_t k = j + 1; k < s; ++k)
          if (edge_flags[quad_rank(current[i], current[j], current[k], v)])
            return false;
    return true;
  }

  void run(Vertex next) {
    if (current.size() + (count - next) <= best) return;
    if (next == count) return;
    if (compatible(next)) {
      current.push_back(next);
      if (current.size() > best) {
        best = current.size();
        best_set = current;
      }
      run(next + 1);
      current.pop_back();
    }
    run(next + 1);
  }
};

}  // namespace

bool is_independent(const HypergraphView& hypergraph,
                    std::span<const Vertex> S) {
  require_strictly_increasing(S);
  for (Vertex v : S)
    if (!hypergraph.fits(v))
      fail(Errc::width_mismatch, "is_independent: vertex outside 2^width");
  const std::size_t n = S.size();
  if (n < 4) return true;
  std::array<Vertex, 4> quad;
  for (std::size_t i = 0; i + 3 < n; ++i)
    for (std::size_t j = i + 1; j + 2 < n; ++j)
      for (std::size_t k = j + 1; k + 1 < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
          quad = {S[i], S[j], S[k], S[l]};
          if (edge_predicate(hypergraph, quad)) return false;
        }
  return true;
}

std::optional<std::array<Vertex, 5>> find_clique5(
    std::uint64_t vertex_count,
    const std::function<bool(std::span<const Vertex>)>& is_edge,
    int workers) {
  if (vertex_count < 5) return std::nullopt;
  if (workers < 1) workers = 1;

  std::atomic<std::uint64_t> best_a{vertex_count};
  std::vector<std::optional<std::array<Vertex, 5>>> found(workers);

  auto scan = [&](int w) {
    std::array<Vertex, 4> quad;
    for (Vertex a = static_cast<Vertex>(w); a + 4 < vertex_count;
         a += static_cast<Vertex>(workers)) {
      if (a > best_a.load(std::memory_order_relaxed)) return;
      for (Vertex b = a + 1; b + 3 < vertex_count; ++b)
        for (Vertex c = b + 1; c + 2 < vertex_count; ++c)
          for (Vertex d = c + 1; d + 1 < vertex_count; ++d)
            for (Vertex e = d + 1; e < vertex_count; ++e) {
              const std::array<Vertex, 5> five{a, b, c, d, e};
              bool complete = true;
              for (int skip = 4; skip >= 0 && complete; --skip) {
                int t = 0;
                for (int s = 0; s < 5; ++s)
                  if (s != skip) quad[t++] = five[s];
                complete = is_edge(quad);
              }
              if (complete) {
                found[w] = five;
                std::uint64_t cur = best_a.load(std::memory_order_relaxed);
                while (a < cur && !best_a.compare_exchange_weak(
                                      cur, a, std::memory_order_relaxed))
                  ;
                return;  // later subsets of this worker are lex-greater
              }
            }
    }
  };

  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    for (auto& th : pool) th.join();
  }

  std::optional<std::array<Vertex, 5>> first;
  for (const auto& f : found)
    if (f && (!first || *f < *first)) first = f;
  return first;
}

std::optional<K5Violation> find_k5(const HypergraphView& hypergraph,
                                   std::uint64_t vertex_cap, int workers) {
  if (hypergraph.vertex_count() > vertex_cap)
    fail(Errc::too_large, "find_k5: vertex count exceeds cap");
  auto pred = [&hypergraph](std::span<const Vertex> quad) {
    return edge_predicate(hypergraph, quad).has_value();
  };
  if (auto five = find_clique5(hypergraph.vertex_count(), pred, workers))
    return K5Violation{*five};
  return std::nullopt;
}

AlphaResult independence_number(const HypergraphView& hypergraph,
                                std::uint64_t vertex_cap) {
  if (vertex_cap > 64)
    fail(Errc::too_large,
         "independence_number: exact mode is limited to 64 vertices; use "
         "greedy_independent_lower_bound beyond that");
  if (hypergraph.vertex_count() > vertex_cap)
    fail(Errc::too_large, "independence_number: vertex count exceeds cap");

  const auto flags = build_edge_flags(hypergraph);
  IndependentSetSearch search{hypergraph.vertex_count(), flags, {}, {}, 0};
  search.run(0);
  return AlphaResult{static_cast<int>(search.best),
                     std::move(search.best_set)};
}

std::vector<Vertex> greedy_independent_lower_bound(
    const HypergraphView& hypergraph, std::uint64_t seed) {
  const std::uint64_t count = hypergraph.vertex_count();
  std::mt19937_64 gen(mix_seed(seed, 0));

  // Deterministic candidate stream: a hand-rolled shuffle of the full range
  // when it is small, uniform draws otherwise.
  std::vector<Vertex> candidates;
  const std::uint64_t attempts = std::min<std::uint64_t>(count, 256);
  if (count <= 256) {
    candidates.resize(count);
    for (std::uint64_t v = 0; v < count; ++v) candidates[v] = v;
    for (std::uint64_t i = count; i > 1; --i)
      std::swap(candidates[i - 1], candidates[gen() % i]);
  } else {
    candidates.reserve(attempts);
    for (std::uint64_t i = 0; i < attempts; ++i)
      candidates.push_back(gen() % count);
  }

  std::vector<Vertex> chosen;
  std::array<Vertex, 4> quad;
  for (Vertex v : candidates) {
    if (std::binary_search(chosen.begin(), chosen.end(), v)) continue;
    bool ok = true;
    const std::size_t s = chosen.size();
    for (std::size_t i = 0; i + 2 < s && ok; ++i)
      for (std::size_t j = i + 1; j + 1 < s && ok; ++j)
        for (std::size_t k = j + 1; k < s && ok; ++k) {
          quad = {chosen[i], chosen[j], chosen[k], v};
          std::sort(quad.begin(), quad.end());
          if (edge_predicate(hypergraph, quad)) ok = false;
        }
    if (ok) chosen.insert(
        std::lower_bound(chosen.begin(), chosen.end(), v), v);
  }
  return chosen;
}

SweepReport sweep_all_colorings(int width, int workers, bool with_alpha) {
  if (width < 1 || width > 5)
    fail(Errc::bad_parameters,
         "sweep_all_colorings: exhaustive sweep is limited to width <= 5");
  if (workers < 1) workers = 1;

  const std::uint64_t count = std::uint64_t{1} << width;
  const auto patterns = build_quad_patterns(count);
  const auto subset_ranks = build_subset5_ranks(count);
  const std::size_t pairs =
      static_cast<std::size_t>(width) * (width - 1) / 2;
  const std::uint32_t total = std::uint32_t{1} << pairs;

  SweepReport report;
  report.lines.resize(total);

  auto run_range = [&](std::uint32_t begin, std::uint32_t stride) {
    std::vector<std::uint8_t> flags(patterns.size());
    for (std::uint32_t mask = begin; mask < total; mask += stride) {
      for (std::size_t q = 0; q < patterns.size(); ++q)
        flags[q] = edge_bit(patterns[q], mask);
      SweepLine& line = report.lines[mask];
      PairColoring phi(width);
      for (std::size_t k = 0; k < pairs; ++k)
        phi.set_bit(k, (mask >> k) & 1u);
      line.coloring_hex = phi.to_hex();
      line.k5_free = k5_free_from_flags(flags, subset_ranks);
      if (with_alpha) {
        IndependentSetSearch search{count, flags, {}, {}, 0};
        search.run(0);
        line.alpha = static_cast<int>(search.best);
      }
    }
  };

  if (workers == 1 || total < 2 * static_cast<std::uint32_t>(workers)) {
    run_range(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back(run_range, static_cast<std::uint32_t>(w),
                        static_cast<std::uint32_t>(workers));
    for (auto& th : pool) th.join();
  }

  report.min_alpha = report.max_alpha = report.lines.empty()
                                            ? 0
                                            : report.lines.front().alpha;
  for (const SweepLine& line : report.lines) {
    report.min_alpha = std::min(report.min_alpha, line.alpha);
    report.max_alpha = std::max(report.max_alpha, line.alpha);
    if (!line.k5_free) ++report.k5_violations;
  }
  return report;
}

std::string format_sweep_line(const SweepLine& line) {
  std::ostringstream os;
  os << line.coloring_hex << " k5free=" << (line.k5_free ? "true" : "false")
     << " alpha=" << line.alpha;
  return os.str();
}

}  // namespace stepup
