#include "stepup/coloring.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <thread>

namespace stepup {

namespace {

constexpr std::size_t kWordBits = 64;

int hex_digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

PairColoring::PairColoring(int universe) : universe_(universe) {
  if (universe < 1)
    fail(Errc::bad_parameters, "PairColoring: universe must be positive");
  words_.assign((pair_count() + kWordBits - 1) / kWordBits, 0);
}

std::size_t PairColoring::pair_index(DeltaValue x, DeltaValue y) {
  if (x > y) std::swap(x, y);
  return static_cast<std::size_t>(y) * (y - 1) / 2 + x;
}

void PairColoring::check_args(DeltaValue x, DeltaValue y) const {
  if (x == y) fail(Errc::equal_arguments, "pair coloring: equal arguments");
  if (x < 0 || y < 0 || x >= universe_ || y >= universe_)
    fail(Errc::out_of_range, "pair coloring: value outside universe");
}

Color PairColoring::color_of(DeltaValue x, DeltaValue y) const {
  check_args(x, y);
  return bit(pair_index(x, y)) ? Color::Blue : Color::Red;
}

void PairColoring::set_color(DeltaValue x, DeltaValue y, Color c) {
  check_args(x, y);
  set_bit(pair_index(x, y), c == Color::Blue);
}

bool PairColoring::bit(std::size_t k) const {
  if (k >= pair_count()) fail(Errc::out_of_range, "pair index out of range");
  return (words_[k / kWordBits] >> (k % kWordBits)) & 1u;
}

void PairColoring::set_bit(std::size_t k, bool v) {
  if (k >= pair_count()) fail(Errc::out_of_range, "pair index out of range");
  const std::uint64_t mask = std::uint64_t{1} << (k % kWordBits);
  if (v)
    words_[k / kWordBits] |= mask;
  else
    words_[k / kWordBits] &= ~mask;
}

PairColoring PairColoring::flipped() const {
  PairColoring out = *this;
  for (auto& w : out.words_) w = ~w;
  // Clear slack bits above pair_count so equality stays canonical.
  const std::size_t used = pair_count() % kWordBits;
  if (!out.words_.empty() && used != 0)
    out.words_.back() &= (std::uint64_t{1} << used) - 1;
  return out;
}

std::string PairColoring::to_hex() const {
  const std::size_t digits = (pair_count() + 3) / 4;
  std::string hex(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    int v = 0;
    for (int b = 0; b < 4; ++b) {
      const std::size_t k = 4 * d + b;
      if (k < pair_count() && bit(k)) v |= 1 << b;
    }
    hex[digits - 1 - d] = "0123456789abcdef"[v];
  }
  return hex;
}

PairColoring PairColoring::from_hex(int universe, const std::string& hex) {
  PairColoring out(universe);
  const std::size_t digits = (out.pair_count() + 3) / 4;
  if (hex.size() != digits)
    fail(Errc::parse_error, "coloring hex: wrong digit count");
  for (std::size_t d = 0; d < digits; ++d) {
    const int v = hex_digit_value(hex[digits - 1 - d]);
    if (v < 0) fail(Errc::parse_error, "coloring hex: invalid digit");
    for (int b = 0; b < 4; ++b) {
      const std::size_t k = 4 * d + b;
      if (k < out.pair_count()) {
        out.set_bit(k, (v >> b) & 1);
      } else if ((v >> b) & 1) {
        fail(Errc::parse_error, "coloring hex: bits beyond pair count");
      }
    }
  }
  return out;
}

std::string PairColoring::serialize() const {
  std::ostringstream os;
  os << "D=" << universe_ << '\n' << to_hex() << '\n';
  return os.str();
}

PairColoring PairColoring::parse(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line.rfind("D=", 0) != 0)
    fail(Errc::parse_error, "coloring file: expected 'D=<int>' header");
  int universe = 0;
  try {
    std::size_t pos = 0;
    universe = std::stoi(line.substr(2), &pos);
    if (pos != line.size() - 2) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    fail(Errc::parse_error, "coloring file: malformed universe size");
  }
  if (universe < 1)
    fail(Errc::parse_error, "coloring file: universe must be positive");
  std::string hex;
  if (!std::getline(is, hex))
    fail(Errc::parse_error, "coloring file: missing hex line");
  return from_hex(universe, hex);
}

bool is_good_triple(const PairColoring& phi, DeltaValue x, DeltaValue y,
                    DeltaValue z) {
  if (!(x < y && y < z))
    fail(Errc::not_sorted, "is_good_triple: need x < y < z");
  const Color xy = phi.color_of(x, y);
  return xy == phi.color_of(y, z) && xy != phi.color_of(x, z);
}

std::optional<std::array<DeltaValue, 3>> find_good_triple(
    const PairColoring& phi, std::span<const DeltaValue> values) {
  if (values.size() < 3)
    fail(Errc::too_short, "find_good_triple: need at least three values");
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i - 1] >= values[i])
      fail(Errc::not_sorted, "find_good_triple: values not increasing");
  for (std::size_t i = 0; i + 2 < values.size(); ++i)
    for (std::size_t j = i + 1; j + 1 < values.size(); ++j)
      for (std::size_t k = j + 1; k < values.size(); ++k)
        if (is_good_triple(phi, values[i], values[j], values[k]))
          return std::array<DeltaValue, 3>{values[i], values[j], values[k]};
  return std::nullopt;
}

namespace {

// Depth-first extension of good-triple-free sets in increasing value order.
// Returns true once a set of size n is completed.
bool extend_triple_free(const PairColoring& phi, int n,
                        std::vector<DeltaValue>& current, DeltaValue next) {
  if (static_cast<int>(current.size()) == n) return true;
  for (DeltaValue v = next; v < phi.universe(); ++v) {
    bool clean = true;
    for (std::size_t i = 0; i + 1 < current.size() && clean; ++i)
      for (std::size_t j = i + 1; j < current.size() && clean; ++j)
        if (is_good_triple(phi, current[i], current[j], v)) clean = false;
    if (!clean) continue;
    current.push_back(v);
    if (extend_triple_free(phi, n, current, v + 1)) return true;
    current.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<DeltaValue>> verify_phi(const PairColoring& phi,
                                                  int n) {
  if (n < 3 || n > phi.universe())
    fail(Errc::bad_arity, "verify_phi: need 3 <= n <= universe");
  std::vector<DeltaValue> current;
  if (extend_triple_free(phi, n, current, 0)) return current;
  return std::nullopt;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace {

PairColoring random_coloring(int universe, std::uint64_t trial_seed) {
  PairColoring phi(universe);
  std::mt19937_64 gen(trial_seed);
  std::uint64_t word = 0;
  int left = 0;
  for (std::size_t k = 0; k < phi.pair_count(); ++k) {
    if (left == 0) {
      word = gen();
      left = 64;
    }
    phi.set_bit(k, word & 1u);
    word >>= 1;
    --left;
  }
  return phi;
}

}  // namespace

std::optional<PairColoring> random_phi_search(int universe, int n,
                                              std::uint64_t trials,
                                              std::uint64_t seed,
                                              int workers) {
  if (trials < 1) fail(Errc::bad_parameters, "random_phi_search: trials < 1");
  if (n < 3 || n > universe)
    fail(Errc::bad_arity, "random_phi_search: need 3 <= n <= universe");
  if (workers < 1) workers = 1;

  std::atomic<std::uint64_t> best{trials};
  auto worker = [&](int w) {
    for (std::uint64_t t = static_cast<std::uint64_t>(w); t < trials;
         t += static_cast<std::uint64_t>(workers)) {
      if (t >= best.load(std::memory_order_relaxed)) break;
      const PairColoring phi = random_coloring(universe, mix_seed(seed, t));
      if (!verify_phi(phi, n)) {
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (t < cur &&
               !best.compare_exchange_weak(cur, t, std::memory_order_relaxed))
          ;
      }
    }
  };

  if (workers == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
  }

  const std::uint64_t hit = best.load();
  if (hit >= trials) return std::nullopt;
  return random_coloring(universe, mix_seed(seed, hit));
}

SteinerSystem greedy_partial_steiner(int n) {
  if (n < 3) fail(Errc::bad_arity, "greedy_partial_steiner: need n >= 3");
  SteinerSystem system;
  system.points = n;
  std::vector<bool> pair_used(static_cast<std::size_t>(n) * (n - 1) / 2,
                              false);
  const auto idx = [n](int a, int b) {
    (void)n;
    return static_cast<std::size_t>(b) * (b - 1) / 2 + a;
  };
  for (int a = 0; a + 2 < n; ++a)
    for (int b = a + 1; b + 1 < n; ++b) {
      if (pair_used[idx(a, b)]) continue;
      for (int c = b + 1; c < n; ++c) {
        if (pair_used[idx(a, c)] || pair_used[idx(b, c)]) continue;
        pair_used[idx(a, b)] = pair_used[idx(a, c)] = pair_used[idx(b, c)] =
            true;
        system.triples.push_back({a, b, c});
        break;  // pair (a,b) is now used; move to the next b
      }
    }
  return system;
}

BoundReport probabilistic_bound(int n, double c0) {
  if (n < 3) fail(Errc::bad_arity, "probabilistic_bound: need n >= 3");
  if (!(c0 > 0.0))
    fail(Errc::bad_parameters, "probabilistic_bound: need c0 > 0");

  BoundReport report;
  report.n = n;
  report.c0 = c0;
  report.log2_domain = c0 * n;

  double log_choose = 0.0;
  if (report.log2_domain < 63.0) {
    const long double wide = std::floor(std::exp2l((long double)report.log2_domain));
    report.domain = static_cast<std::uint64_t>(wide);
    report.domain_exact = true;
    if (report.domain < static_cast<std::uint64_t>(n))
      fail(Errc::domain_too_small, "probabilistic_bound: domain below n");
    const double d = static_cast<double>(report.domain);
    log_choose = std::lgamma(d + 1) - std::lgamma(n + 1.0) -
                 std::lgamma(d - n + 1);
  } else {
    // Domain far beyond 2^63: ln C(D,n) = n ln D - ln n! up to O(n^2/D).
    const double ln_domain = report.log2_domain * std::log(2.0);
    log_choose = n * ln_domain - std::lgamma(n + 1.0);
  }

  report.triple_count = greedy_partial_steiner(n).triples.size();
  report.log_expectation =
      log_choose +
      static_cast<double>(report.triple_count) * std::log(3.0 / 4.0);
  report.feasible = report.log_expectation < 0.0;
  return report;
}

}  // namespace stepup
