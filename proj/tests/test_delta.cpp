#include <random>
#include <vector>

#include "doctest.h"
#include "stepup/delta.hpp"
#include "test_util.hpp"

using namespace stepup;

namespace {

std::vector<Vertex> tup(std::initializer_list<Vertex> v) { return v; }

}  // namespace

TEST_CASE("delta: highest differing bit") {
  CHECK(delta(0, 1) == 0);
  CHECK(delta(5, 6) == 1);
  CHECK(delta(7, 8) == 3);
  CHECK(delta(3, 5) == 2);
  CHECK_THROWS_WITH_AS(delta(4, 4), "delta: arguments are equal", Error);
}

TEST_CASE("delta: symmetry and order law, exhaustive at width 6") {
  for (Vertex a = 0; a < 64; ++a)
    for (Vertex b = a + 1; b < 64; ++b) {
      const DeltaValue d = delta(a, b);
      CHECK(delta(b, a) == d);
      // For a < b the split bit is 1 in b and 0 in a.
      CHECK(((b >> d) & 1u) == 1u);
      CHECK(((a >> d) & 1u) == 0u);
    }
}

TEST_CASE("delta_profile") {
  CHECK(delta_profile(tup({0, 4, 5, 13})) ==
        std::vector<DeltaValue>{2, 0, 3});
  CHECK(delta_profile(tup({0, 1, 3, 7})) == std::vector<DeltaValue>{0, 1, 2});
  CHECK(delta_profile(tup({0, 2})) == std::vector<DeltaValue>{1});

  const auto too_short = tup({7});
  CHECK_THROWS_AS((void)delta_profile(too_short), Error);
  const auto unsorted = tup({3, 2, 5});
  CHECK_THROWS_AS((void)delta_profile(unsorted), Error);
}

TEST_CASE("property A") {
  CHECK(check_property_A(0, 1, 2));
  CHECK(check_property_A(0, 4, 5));
  CHECK(check_property_A(3, 5, 6));
  CHECK_THROWS_AS(check_property_A(2, 1, 3), Error);

  // Exhaustive over every triple at width 6.
  for (Vertex a = 0; a < 64; ++a)
    for (Vertex b = a + 1; b < 64; ++b)
      for (Vertex c = b + 1; c < 64; ++c)
        REQUIRE(check_property_A(a, b, c));
}

TEST_CASE("property B") {
  CHECK(check_property_B(tup({0, 4, 5, 13})));
  CHECK(check_property_B(tup({0, 1})));
  CHECK(check_property_B(tup({0, 1, 3, 7})));

  // Max law: delta(a,c) = max(delta(a,b), delta(b,c)), width 6 exhaustive.
  for (Vertex a = 0; a < 64; ++a)
    for (Vertex b = a + 1; b < 64; ++b)
      for (Vertex c = b + 1; c < 64; ++c)
        REQUIRE(delta(a, c) == std::max(delta(a, b), delta(b, c)));
}

TEST_CASE("property B: exhaustive tuples up to length 5 at width 5") {
  std::vector<Vertex> t;
  for (Vertex a = 0; a < 32; ++a)
    for (Vertex b = a + 1; b < 32; ++b) {
      t = {a, b};
      REQUIRE(check_property_B(t));
      for (Vertex c = b + 1; c < 32; ++c) {
        t = {a, b, c};
        REQUIRE(check_property_B(t));
        for (Vertex d = c + 1; d < 32; ++d) {
          t = {a, b, c, d};
          REQUIRE(check_property_B(t));
          for (Vertex e = d + 1; e < 32; ++e) {
            t = {a, b, c, d, e};
            REQUIRE(check_property_B(t));
          }
        }
      }
    }
}

TEST_CASE("property C") {
  CHECK(check_property_C(tup({0, 4, 5, 13})));
  CHECK(check_property_C(tup({0, 1, 3, 7})));   // hypothesis vacuous
  CHECK(check_property_C(tup({0, 8, 9, 13})));  // profile (3,0,2)
  const auto wrong = tup({0, 1, 2});
  CHECK_THROWS_AS((void)check_property_C(wrong), Error);

  // Exhaustive over every 4-tuple at width 6.
  for (Vertex a = 0; a < 64; ++a)
    for (Vertex b = a + 1; b < 64; ++b)
      for (Vertex c = b + 1; c < 64; ++c)
        for (Vertex d = c + 1; d < 64; ++d) {
          const std::array<Vertex, 4> quad{a, b, c, d};
          REQUIRE(check_property_C(quad));
        }
}

TEST_CASE("classify_extrema") {
  using Tag = ExtremumTag;
  const std::vector<DeltaValue> valley{2, 0, 3};
  CHECK(classify_extrema(valley) == std::vector<Tag>{Tag::LocalMin});
  const std::vector<DeltaValue> ascending{0, 1, 2};
  CHECK(classify_extrema(ascending) == std::vector<Tag>{Tag::Neither});
  const std::vector<DeltaValue> wiggle{1, 0, 3, 2};
  CHECK(classify_extrema(wiggle) ==
        std::vector<Tag>{Tag::LocalMin, Tag::LocalMax});
  const std::vector<DeltaValue> pair{1, 0};
  CHECK(classify_extrema(pair).empty());
}

TEST_CASE("is_monotone") {
  const std::vector<DeltaValue> inc{0, 1, 2};
  const std::vector<DeltaValue> valley{2, 0, 3};
  const std::vector<DeltaValue> dec{3, 2, 0};
  const std::vector<DeltaValue> single{4};
  const std::vector<DeltaValue> empty;
  CHECK(is_monotone(inc) == Monotonicity::Increasing);
  CHECK(is_monotone(valley) == Monotonicity::No);
  CHECK(is_monotone(dec) == Monotonicity::Decreasing);
  CHECK(is_monotone(single) == Monotonicity::Increasing);
  CHECK_THROWS_AS((void)is_monotone(empty), Error);
}

TEST_CASE("extrema tags and monotonicity agree on random profiles") {
  std::mt19937_64 gen(7101);
  for (int trial = 0; trial < 500; ++trial) {
    // Random vertex tuples give valid profiles.
    std::vector<Vertex> tuple;
    Vertex v = gen() % 8;
    for (int i = 0; i < 8; ++i) {
      tuple.push_back(v);
      v += 1 + gen() % 32;
    }
    const auto profile = delta_profile(tuple);
    const auto tags = classify_extrema(profile);
    const bool any_extremum =
        std::any_of(tags.begin(), tags.end(), [](ExtremumTag t) {
          return t != ExtremumTag::Neither;
        });
    if (any_extremum) CHECK(is_monotone(profile) == Monotonicity::No);
    if (is_monotone(profile) != Monotonicity::No)
      CHECK_FALSE(any_extremum);
  }
}
