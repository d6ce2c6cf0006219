#include "stepup/delta.hpp"

#include <algorithm>
#include <bit>

namespace stepup {

DeltaValue delta(Vertex a, Vertex b) {
  if (a == b) fail(Errc::equal_vertices, "delta: arguments are equal");
  return static_cast<DeltaValue>(std::bit_width(a ^ b)) - 1;
}

void require_strictly_increasing(std::span<const Vertex> tuple) {
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    if (tuple[i - 1] >= tuple[i])
      fail(Errc::not_sorted, "tuple is not strictly increasing");
  }
}

std::vector<DeltaValue> delta_profile(std::span<const Vertex> tuple) {
  if (tuple.size() < 2)
    fail(Errc::too_short, "delta_profile: need at least two vertices");
  require_strictly_increasing(tuple);
  std::vector<DeltaValue> profile(tuple.size() - 1);
  for (std::size_t i = 0; i + 1 < tuple.size(); ++i)
    profile[i] = delta(tuple[i], tuple[i + 1]);
  return profile;
}

bool check_property_A(Vertex a, Vertex b, Vertex c) {
  if (!(a < b && b < c))
    fail(Errc::not_sorted, "property A: need a < b < c");
  return delta(a, b) != delta(b, c);
}

bool check_property_B(std::span<const Vertex> tuple) {
  const auto profile = delta_profile(tuple);
  const DeltaValue top = *std::max_element(profile.begin(), profile.end());
  return delta(tuple.front(), tuple.back()) == top;
}

bool check_property_C(std::span<const Vertex> quad) {
  if (quad.size() != 4)
    fail(Errc::wrong_arity, "property C: need exactly four vertices");
  const auto p = delta_profile(quad);
  return p[0] > p[1] ? p[0] != p[2] : true;
}

std::vector<ExtremumTag> classify_extrema(
    std::span<const DeltaValue> profile) {
  std::vector<ExtremumTag> tags;
  if (profile.size() < 3) return tags;
  tags.reserve(profile.size() - 2);
  for (std::size_t i = 1; i + 1 < profile.size(); ++i) {
    if (profile[i - 1] > profile[i] && profile[i] < profile[i + 1])
      tags.push_back(ExtremumTag::LocalMin);
    else if (profile[i - 1] < profile[i] && profile[i] > profile[i + 1])
      tags.push_back(ExtremumTag::LocalMax);
    else
      tags.push_back(ExtremumTag::Neither);
  }
  return tags;
}

Monotonicity is_monotone(std::span<const DeltaValue> profile) {
  if (profile.empty()) fail(Errc::empty_profile, "is_monotone: empty profile");
  bool ascending = true;
  bool descending = true;
  for (std::size_t i = 1; i < profile.size(); ++i) {
    ascending = ascending && profile[i - 1] < profile[i];
    descending = descending && profile[i - 1] > profile[i];
  }
  if (ascending) return Monotonicity::Increasing;
  if (descending) return Monotonicity::Decreasing;
  return Monotonicity::No;
}

}  // namespace stepup
