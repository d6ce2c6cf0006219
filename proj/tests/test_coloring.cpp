#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "stepup/coloring.hpp"
#include "test_util.hpp"

using namespace stepup;

namespace {

// The coloring on {0,1,2} with color(0,1) = color(1,2) = Red and
// color(0,2) = Blue; its only 3-set is a good triple.
PairColoring good_d3() {
  PairColoring phi(3);
  phi.set_color(0, 2, Color::Blue);
  return phi;
}

}  // namespace

TEST_CASE("pair index layout") {
  CHECK(PairColoring::pair_index(0, 1) == 0);
  CHECK(PairColoring::pair_index(0, 2) == 1);
  CHECK(PairColoring::pair_index(1, 2) == 2);
  CHECK(PairColoring::pair_index(2, 1) == 2);  // unordered
  CHECK(PairColoring(7).pair_count() == 21);
}

TEST_CASE("color_of") {
  PairColoring phi(3);
  CHECK(phi.color_of(0, 1) == Color::Red);  // all-zero bits
  phi.set_color(0, 2, Color::Blue);
  CHECK(phi.color_of(2, 0) == Color::Blue);  // unordered lookup
  CHECK(phi.color_of(0, 1) == Color::Red);
  CHECK_THROWS_AS((void)phi.color_of(1, 1), Error);
  CHECK_THROWS_AS((void)phi.color_of(0, 3), Error);
}

TEST_CASE("is_good_triple") {
  const PairColoring mono(4);
  CHECK_FALSE(is_good_triple(mono, 0, 1, 2));
  CHECK_FALSE(is_good_triple(mono, 1, 2, 3));

  CHECK(is_good_triple(good_d3(), 0, 1, 2));

  PairColoring mixed(3);
  mixed.set_color(1, 2, Color::Blue);
  mixed.set_color(0, 2, Color::Blue);
  CHECK_FALSE(is_good_triple(mixed, 0, 1, 2));

  CHECK_THROWS_AS((void)is_good_triple(mono, 1, 0, 2), Error);
}

TEST_CASE("is_good_triple is invariant under swapping every color") {
  std::mt19937_64 gen(211);
  for (int trial = 0; trial < 200; ++trial) {
    const auto phi = testutil::random_coloring(8, gen);
    const auto swapped = phi.flipped();
    for (int x = 0; x < 8; ++x)
      for (int y = x + 1; y < 8; ++y)
        for (int z = y + 1; z < 8; ++z)
          CHECK(is_good_triple(phi, x, y, z) ==
                is_good_triple(swapped, x, y, z));
  }
}

TEST_CASE("find_good_triple") {
  const PairColoring mono(5);
  const std::vector<DeltaValue> all{0, 1, 2, 3, 4};
  CHECK_FALSE(find_good_triple(mono, all).has_value());

  const std::vector<DeltaValue> abc{0, 1, 2};
  CHECK(find_good_triple(good_d3(), abc) ==
        std::array<DeltaValue, 3>{0, 1, 2});

  PairColoring phi(4);
  phi.set_color(0, 3, Color::Blue);  // (0,1),(1,3) stay red
  const std::vector<DeltaValue> a{0, 1, 3};
  CHECK(find_good_triple(phi, a) == std::array<DeltaValue, 3>{0, 1, 3});

  const std::vector<DeltaValue> short_list{0, 1};
  CHECK_THROWS_AS((void)find_good_triple(mono, short_list), Error);
}

TEST_CASE("verify_phi") {
  SUBCASE("monochromatic counterexample") {
    const auto bad = verify_phi(PairColoring(3), 3);
    REQUIRE(bad.has_value());
    CHECK(*bad == std::vector<DeltaValue>{0, 1, 2});
  }
  SUBCASE("census at universe 3: exactly two colorings pass") {
    int passing = 0;
    for (int mask = 0; mask < 8; ++mask) {
      PairColoring phi(3);
      for (int k = 0; k < 3; ++k) phi.set_bit(k, (mask >> k) & 1);
      if (!verify_phi(phi, 3)) {
        ++passing;
        // the passing pattern: color(0,1) == color(1,2) != color(0,2)
        CHECK(phi.color_of(0, 1) == phi.color_of(1, 2));
        CHECK(phi.color_of(0, 1) != phi.color_of(0, 2));
      }
    }
    CHECK(passing == 2);
  }
  SUBCASE("arity errors") {
    CHECK_THROWS_AS((void)verify_phi(PairColoring(3), 4), Error);
    CHECK_THROWS_AS((void)verify_phi(PairColoring(5), 2), Error);
  }
}

TEST_CASE("verify_phi agrees with full subset enumeration") {
  std::mt19937_64 gen(313);
  for (int trial = 0; trial < 300; ++trial) {
    const int universe = 3 + static_cast<int>(gen() % 6);  // 3..8
    const int n = 3 + static_cast<int>(gen() % 3);         // 3..5
    if (n > universe) continue;
    const auto phi = testutil::random_coloring(universe, gen);
    const auto fast = verify_phi(phi, n);
    const auto slow = testutil::naive_verify_phi(phi, n);
    CHECK(fast.has_value() == slow.has_value());
    if (fast && slow) CHECK(*fast == *slow);
  }
}

TEST_CASE("passing colorings keep passing for larger sets") {
  std::mt19937_64 gen(401);
  int checked = 0;
  for (int trial = 0; trial < 500 && checked < 40; ++trial) {
    const auto phi = testutil::random_coloring(5, gen);
    if (verify_phi(phi, 4)) continue;
    ++checked;
    CHECK_FALSE(verify_phi(phi, 5).has_value());
  }
  CHECK(checked == 40);  // enough passing samples at universe 5
}

TEST_CASE("random_phi_search") {
  SUBCASE("finds a universe-3 coloring quickly") {
    const auto phi = random_phi_search(3, 3, 100, 1);
    REQUIRE(phi.has_value());
    CHECK_FALSE(verify_phi(*phi, 3).has_value());
  }
  SUBCASE("universe 5, target 4") {
    const auto phi = random_phi_search(5, 4, 200, 7);
    REQUIRE(phi.has_value());
    CHECK_FALSE(verify_phi(*phi, 4).has_value());
    CHECK_FALSE(testutil::naive_verify_phi(*phi, 4).has_value());
  }
  SUBCASE("no universe-4 coloring makes every triple good") {
    // n = 3 asks for a good triple in every 3-subset, i.e. every triple;
    // four points already force a contradiction.
    int passing = 0;
    for (int mask = 0; mask < 64; ++mask) {
      PairColoring phi(4);
      for (int k = 0; k < 6; ++k) phi.set_bit(k, (mask >> k) & 1);
      if (!verify_phi(phi, 3)) ++passing;
    }
    CHECK(passing == 0);
    CHECK_FALSE(random_phi_search(4, 3, 64, 99).has_value());
  }
  SUBCASE("deterministic in the seed, workers do not matter") {
    const auto a = random_phi_search(5, 4, 200, 99);
    const auto b = random_phi_search(5, 4, 200, 99);
    const auto c = random_phi_search(5, 4, 200, 99, 4);
    REQUIRE(a.has_value());
    CHECK(*a == *b);
    CHECK(*a == *c);
  }
  SUBCASE("argument errors") {
    CHECK_THROWS_AS((void)random_phi_search(3, 4, 10, 0), Error);
    CHECK_THROWS_AS((void)random_phi_search(3, 3, 0, 0), Error);
  }
}

TEST_CASE("coloring file round trip") {
  std::mt19937_64 gen(509);
  for (int universe : {1, 2, 3, 5, 8, 12, 17}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto phi = testutil::random_coloring(universe, gen);
      CHECK(PairColoring::parse(phi.serialize()) == phi);
      CHECK(PairColoring::from_hex(universe, phi.to_hex()) == phi);
    }
  }
  // hex width: C(5,2) = 10 bits -> 3 digits
  CHECK(PairColoring(5).to_hex().size() == 3);

  CHECK_THROWS_AS((void)PairColoring::parse("D=3\n"), Error);
  CHECK_THROWS_AS((void)PairColoring::parse("universe 3\n0\n"), Error);
  CHECK_THROWS_AS((void)PairColoring::parse("D=3\nzz\n"), Error);
  CHECK_THROWS_AS((void)PairColoring::from_hex(3, "12"), Error);
}

TEST_CASE("greedy_partial_steiner") {
  SUBCASE("small counts") {
    CHECK(greedy_partial_steiner(3).triples ==
          std::vector<std::array<int, 3>>{{0, 1, 2}});
    CHECK(greedy_partial_steiner(4).triples.size() == 1);
    CHECK(greedy_partial_steiner(7).triples.size() == 7);
  }
  SUBCASE("pair-disjoint and maximal") {
    for (int n : {3, 6, 9, 13, 20}) {
      const auto system = greedy_partial_steiner(n);
      std::set<std::pair<int, int>> used;
      for (const auto& t : system.triples) {
        CHECK(used.insert({t[0], t[1]}).second);
        CHECK(used.insert({t[0], t[2]}).second);
        CHECK(used.insert({t[1], t[2]}).second);
      }
      // maximal: every triple not chosen reuses a pair
      for (int a = 0; a + 2 < n; ++a)
        for (int b = a + 1; b + 1 < n; ++b)
          for (int c = b + 1; c < n; ++c) {
            const std::array<int, 3> t{a, b, c};
            if (std::find(system.triples.begin(), system.triples.end(), t) !=
                system.triples.end())
              continue;
            const bool blocked = used.count({a, b}) || used.count({a, c}) ||
                                 used.count({b, c});
            REQUIRE(blocked);
          }
    }
  }
  SUBCASE("quadratic lower bound") {
    for (int n = 6; n <= 100; ++n) {
      const auto count = greedy_partial_steiner(n).triples.size();
      CHECK(count * 18 >= static_cast<std::size_t>(n) * (n - 1));
    }
  }
  CHECK_THROWS_AS((void)greedy_partial_steiner(2), Error);
}

TEST_CASE("probabilistic_bound") {
  SUBCASE("universe 3 at n = 3 is feasible") {
    // c0 chosen so floor(2^(c0*3)) = 3
    const auto report = probabilistic_bound(3, 0.53);
    CHECK(report.domain == 3);
    CHECK(report.triple_count == 1);
    CHECK(report.log_expectation ==
          doctest::Approx(std::log(3.0 / 4.0)).epsilon(1e-12));
    CHECK(report.feasible);
  }
  SUBCASE("domain below n") {
    CHECK_THROWS_AS((void)probabilistic_bound(20, 0.05), Error);
  }
  SUBCASE("shrinking c0 never raises the log expectation") {
    const int n = 24;
    double previous = probabilistic_bound(n, 0.40).log_expectation;
    for (double c0 = 0.39; c0 > 0.21; c0 -= 0.01) {
      const double current = probabilistic_bound(n, c0).log_expectation;
      CHECK(current <= previous + 1e-9);
      previous = current;
    }
  }
  SUBCASE("huge domains stay finite in log space") {
    const auto report = probabilistic_bound(64, 2.0);  // domain = 2^128
    CHECK_FALSE(report.domain_exact);
    CHECK(std::isfinite(report.log_expectation));
    CHECK_FALSE(report.feasible);  // only ~228 triples against a vast domain
  }
}
