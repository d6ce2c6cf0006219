#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "stepup/certificate.hpp"
#include "stepup/coloring.hpp"
#include "stepup/construction.hpp"
#include "stepup/verification.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconsistency = 3;

int resolve_workers(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("STEPUP_WORKERS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) stepup::fail(stepup::Errc::parse_error, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) stepup::fail(stepup::Errc::parse_error, "cannot write " + path);
  out << content;
}

std::vector<stepup::Vertex> read_vertex_set(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<stepup::Vertex> vertices;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(line, &pos);
      if (pos != line.size()) throw std::invalid_argument("trailing");
      vertices.push_back(v);
    } catch (const std::exception&) {
      stepup::fail(stepup::Errc::parse_error,
                   "vertex set: malformed line '" + line + "'");
    }
  }
  if (vertices.empty())
    stepup::fail(stepup::Errc::parse_error, "vertex set: empty file");
  stepup::require_strictly_increasing(vertices);
  return vertices;
}

int exit_code_for(const stepup::Error& e) {
  switch (e.code()) {
    case stepup::Errc::insufficient_size: return kExitNegative;
    case stepup::Errc::internal_inconsistency: return kExitInconsistency;
    default: return kExitUsage;
  }
}

struct Options {
  int d = 3;
  int n = 3;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  int factor = 0;  // 0 = default 2n
  int depth = 5;
  std::uint64_t cap = 0;  // 0 = command default
  double c0 = 0.1;
  std::string coloring_path;
  std::string set_path;
  std::string out_path;
  bool strict_paper = false;
  int workers = 0;
  std::uint64_t sample = 0;  // sweep sampling mode
};

int cmd_search_phi(const Options& opt) {
  const auto phi = stepup::random_phi_search(opt.d, opt.n, opt.trials,
                                             opt.seed,
                                             resolve_workers(opt.workers));
  if (!phi) {
    std::cout << "not found: D=" << opt.d << " n=" << opt.n
              << " trials=" << opt.trials << " seed=" << opt.seed << '\n';
    return kExitNegative;
  }
  write_output(opt.out_path, phi->serialize());
  return kExitOk;
}

int cmd_verify_phi(const Options& opt) {
  const auto phi = stepup::PairColoring::parse(read_file(opt.coloring_path));
  const auto counterexample = stepup::verify_phi(phi, opt.n);
  if (!counterexample) {
    std::cout << "OK\n";
    return kExitOk;
  }
  std::ostringstream os;
  os << "counterexample:";
  for (const auto v : *counterexample) os << ' ' << v;
  std::cout << os.str() << '\n';
  return kExitNegative;
}

int cmd_build(const Options& opt) {
  const auto phi = stepup::PairColoring::parse(read_file(opt.coloring_path));
  const stepup::HypergraphView view(opt.d, phi);
  const std::uint64_t cap =
      opt.cap == 0 ? stepup::kDefaultMaterializeCap : opt.cap;
  const auto edges = stepup::materialize(view, cap);
  write_output(opt.out_path, stepup::format_edge_list(edges));
  if (!opt.out_path.empty()) {
    stepup::RuleCounts counts;
    for (const auto& e : edges) {
      if (e.rule == stepup::Rule::I) ++counts.rule_i;
      if (e.rule == stepup::Rule::II) ++counts.rule_ii;
      if (e.rule == stepup::Rule::III) ++counts.rule_iii;
    }
    std::cout << "edges=" << counts.total() << " I=" << counts.rule_i
              << " II=" << counts.rule_ii << " III=" << counts.rule_iii
              << '\n';
  }
  return kExitOk;
}

int cmd_k5check(const Options& opt) {
  const auto phi = stepup::PairColoring::parse(read_file(opt.coloring_path));
  const stepup::HypergraphView view(opt.d, phi);
  const std::uint64_t cap = opt.cap == 0 ? stepup::kDefaultK5Cap : opt.cap;
  const auto violation =
      stepup::find_k5(view, cap, resolve_workers(opt.workers));
  if (!violation) {
    std::cout << "k5free\n";
    return kExitOk;
  }
  std::ostringstream os;
  os << "violation:";
  for (const auto v : violation->five) os << ' ' << v;
  std::cout << os.str() << '\n';
  return kExitNegative;
}

int cmd_alpha(const Options& opt) {
  const auto phi = stepup::PairColoring::parse(read_file(opt.coloring_path));
  const stepup::HypergraphView view(opt.d, phi);
  const std::uint64_t cap = opt.cap == 0 ? 64 : opt.cap;
  const auto result = stepup::independence_number(view, cap);
  std::ostringstream os;
  os << "alpha=" << result.alpha << " witness:";
  for (const auto v : result.witness) os << ' ' << v;
  std::cout << os.str() << '\n';
  return kExitOk;
}

int cmd_extract(const Options& opt) {
  const auto phi = stepup::PairColoring::parse(read_file(opt.coloring_path));
  const auto vertices = read_vertex_set(opt.set_path);
  const int factor = opt.factor == 0 ? 2 * opt.n : opt.factor;
  if (opt.strict_paper) {
    // Strict layer construction; surfaces parameter mismatches as usage
    // errors before extraction starts.
    stepup::build_layers(vertices, phi, opt.n, factor, opt.depth, true);
  }
  const auto trace =
      stepup::extract_edge(vertices, phi, opt.n, factor, opt.depth);
  write_output(opt.out_path, stepup::format_trace(trace));
  return kExitOk;
}

int cmd_steiner(const Options& opt) {
  const auto system = stepup::greedy_partial_steiner(opt.n);
  std::ostringstream os;
  os << "n=" << system.points << " count=" << system.triples.size() << '\n';
  for (const auto& t : system.triples)
    os << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  write_output(opt.out_path, os.str());
  return kExitOk;
}

int cmd_bound(const Options& opt) {
  const auto report = stepup::probabilistic_bound(opt.n, opt.c0);
  char line[256];
  if (report.domain_exact) {
    std::snprintf(line, sizeof line,
                  "n=%d c0=%.6f D=%llu triples=%zu log_expectation=%.6f "
                  "feasible=%s",
                  report.n, report.c0,
                  static_cast<unsigned long long>(report.domain),
                  report.triple_count, report.log_expectation,
                  report.feasible ? "true" : "false");
  } else {
    std::snprintf(line, sizeof line,
                  "n=%d c0=%.6f D=2^%.3f triples=%zu log_expectation=%.6f "
                  "feasible=%s",
                  report.n, report.c0, report.log2_domain,
                  report.triple_count, report.log_expectation,
                  report.feasible ? "true" : "false");
  }
  std::cout << line << '\n';
  return report.feasible ? kExitOk : kExitNegative;
}

int cmd_sweep(const Options& opt) {
  std::ostringstream os;
  std::uint64_t violations = 0;
  if (opt.d <= 5) {
    const auto report = stepup::sweep_all_colorings(
        opt.d, resolve_workers(opt.workers), true);
    for (const auto& line : report.lines)
      os << stepup::format_sweep_line(line) << '\n';
    os << "summary min_alpha=" << report.min_alpha
       << " max_alpha=" << report.max_alpha
       << " k5_violations=" << report.k5_violations << '\n';
    violations = report.k5_violations;
  } else {
    if (opt.sample == 0)
      stepup::fail(stepup::Errc::bad_parameters,
                   "sweep: width > 5 needs --sample <count>");
    // Sampling mode: exact alpha is intractable at 64+ vertices, so the
    // lines carry a seeded greedy lower bound instead.
    int min_lb = 0, max_lb = 0;
    for (std::uint64_t s = 0; s < opt.sample; ++s) {
      stepup::PairColoring phi(opt.d);
      std::mt19937_64 gen(stepup::mix_seed(opt.seed, s));
      for (std::size_t k = 0; k < phi.pair_count(); ++k)
        phi.set_bit(k, gen() & 1u);
      const stepup::HypergraphView view(opt.d, phi);
      const bool k5_free =
          !stepup::find_k5(view, 64, resolve_workers(opt.workers));
      const auto lower = stepup::greedy_independent_lower_bound(
          view, stepup::mix_seed(opt.seed, s + opt.sample));
      const int lb = static_cast<int>(lower.size());
      if (s == 0) min_lb = max_lb = lb;
      min_lb = std::min(min_lb, lb);
      max_lb = std::max(max_lb, lb);
      if (!k5_free) ++violations;
      os << phi.to_hex() << " k5free=" << (k5_free ? "true" : "false")
         << " alpha_lb=" << lb << '\n';
    }
    os << "summary min_alpha_lb=" << min_lb << " max_alpha_lb=" << max_lb
       << " k5_violations=" << violations << '\n';
  }
  write_output(opt.out_path, os.str());
  return violations == 0 ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delta-profile 4-graph construction, verification and edge "
               "extraction"};
  app.require_subcommand(1);
  Options opt;

  auto* search = app.add_subcommand("search-phi",
                                    "seeded random search for a coloring "
                                    "whose n-sets all contain a good triple");
  search->add_option("--d", opt.d, "universe size");
  search->add_option("--n", opt.n, "set size to verify");
  search->add_option("--trials", opt.trials, "trial budget");
  search->add_option("--seed", opt.seed, "base seed");
  search->add_option("--out", opt.out_path, "coloring output path");
  search->add_option("--workers", opt.workers, "worker threads (0 = auto)");

  auto* verify = app.add_subcommand("verify-phi",
                                    "check every n-set for a good triple");
  verify->add_option("--coloring", opt.coloring_path, "coloring file")
      ->required();
  verify->add_option("--n", opt.n, "set size");

  auto* build = app.add_subcommand("build", "materialize the edge list");
  build->add_option("--d", opt.d, "vertex width in bits");
  build->add_option("--coloring", opt.coloring_path, "coloring file")
      ->required();
  build->add_option("--out", opt.out_path, "edge list output path");
  build->add_option("--cap", opt.cap, "vertex count cap");

  auto* k5 = app.add_subcommand("k5check",
                                "scan all 5-subsets for an induced complete "
                                "4-graph");
  k5->add_option("--d", opt.d, "vertex width in bits");
  k5->add_option("--coloring", opt.coloring_path, "coloring file")
      ->required();
  k5->add_option("--cap", opt.cap, "vertex count cap");
  k5->add_option("--workers", opt.workers, "worker threads (0 = auto)");

  auto* alpha = app.add_subcommand("alpha",
                                   "exact maximum independent set size");
  alpha->add_option("--d", opt.d, "vertex width in bits");
  alpha->add_option("--coloring", opt.coloring_path, "coloring file")
      ->required();
  alpha->add_option("--cap", opt.cap, "vertex count cap");

  auto* extract = app.add_subcommand("extract",
                                     "run the layered extraction on a vertex "
                                     "set and emit the trace");
  extract->add_option("--coloring", opt.coloring_path, "coloring file")
      ->required();
  extract->add_option("--set", opt.set_path, "vertex set file (ascending, "
                                             "one per line)")
      ->required();
  extract->add_option("--n", opt.n, "monotone run threshold");
  extract->add_option("--factor", opt.factor,
                      "layer shrink factor (0 = use 2n)");
  extract->add_option("--depth", opt.depth, "layer depth (>= 5)");
  extract->add_flag("--strict-paper", opt.strict_paper,
                    "require factor = 2n and exact divisibility");
  extract->add_option("--out", opt.out_path, "trace output path");

  auto* steiner = app.add_subcommand("steiner",
                                     "greedy pair-disjoint triple system");
  steiner->add_option("--n", opt.n, "point count");
  steiner->add_option("--out", opt.out_path, "output path");

  auto* bound = app.add_subcommand("bound",
                                   "log-domain feasibility of the random "
                                   "coloring argument");
  bound->add_option("--n", opt.n, "set size");
  bound->add_option("--c0", opt.c0, "exponent coefficient");

  auto* sweep = app.add_subcommand("sweep",
                                   "per-coloring k5/alpha report over all "
                                   "colorings (width <= 5) or a sample");
  sweep->add_option("--d", opt.d, "vertex width in bits");
  sweep->add_option("--out", opt.out_path, "report output path");
  sweep->add_option("--workers", opt.workers, "worker threads (0 = auto)");
  sweep->add_option("--sample", opt.sample,
                    "sample size for width > 5 (seeded)");
  sweep->add_option("--seed", opt.seed, "sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (search->parsed()) return cmd_search_phi(opt);
    if (verify->parsed()) return cmd_verify_phi(opt);
    if (build->parsed()) return cmd_build(opt);
    if (k5->parsed()) return cmd_k5check(opt);
    if (alpha->parsed()) return cmd_alpha(opt);
    if (extract->parsed()) return cmd_extract(opt);
    if (steiner->parsed()) return cmd_steiner(opt);
    if (bound->parsed()) return cmd_bound(opt);
    if (sweep->parsed()) return cmd_sweep(opt);
  } catch (const stepup::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
