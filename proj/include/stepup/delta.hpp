#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stepup/error.hpp"

namespace stepup {

// A vertex of the 4-graph: an unsigned value below 2^D for some bit width D
// carried by the surrounding context (HypergraphView, CLI flags, ...). Keeping
// the width external makes delta well defined for leading-zero values.
using Vertex = std::uint64_t;

// An element of the pair-coloring universe {0, ..., D-1}.
using DeltaValue = int;

enum class ExtremumTag { LocalMin, LocalMax, Neither };

enum class Monotonicity { Increasing, Decreasing, No };

// Highest bit position at which a and b differ. For a < b the bit of b at
// that position is 1 and the bit of a is 0.
DeltaValue delta(Vertex a, Vertex b);

// Throws Errc::not_sorted unless the tuple is strictly increasing.
void require_strictly_increasing(std::span<const Vertex> tuple);

// Consecutive deltas of a strictly increasing tuple: profile[i] =
// delta(tuple[i], tuple[i+1]).
std::vector<DeltaValue> delta_profile(std::span<const Vertex> tuple);

// delta(a,b) != delta(b,c) for a < b < c. Always true; kept as a checkable
// assertion.
bool check_property_A(Vertex a, Vertex b, Vertex c);

// delta(first, last) equals the maximum of the profile.
bool check_property_B(std::span<const Vertex> tuple);

// For a 4-tuple with profile (d1,d2,d3): d1 > d2 implies d1 != d3.
bool check_property_C(std::span<const Vertex> quad);

// One tag per interior profile position (a position with both neighbours).
// Profiles shorter than 3 have no interior positions and yield an empty list.
std::vector<ExtremumTag> classify_extrema(std::span<const DeltaValue> profile);

// Strictly ascending / strictly descending classification. A length-1
// profile counts as Increasing by convention.
Monotonicity is_monotone(std::span<const DeltaValue> profile);

}  // namespace stepup
