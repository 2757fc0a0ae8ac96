#pragma once

#include <span>
#include <vector>

#include "ehrstar/lattice.hpp"

namespace ehrstar {

/// Cap on the number of d-subsets of inequalities examined when deriving
/// vertices from a half-space description.
inline constexpr std::size_t kMaxHalfspaceSubsets = 2'000'000;

/// Vertices of a bounded half-space polytope by exact enumeration of
/// tight d-subsets. Throws PreconditionError when the set is empty,
/// unbounded, or has a non-integral vertex.
std::vector<LatticePoint> vertices_from_halfspaces(std::size_t ambient_dim,
                                                   std::span<const HalfSpace> halfspaces);

/// True iff every inequality holds at the point.
bool satisfies(std::span<const HalfSpace> halfspaces, std::span<const Integer> x);

std::vector<HalfSpace> box_halfspaces(const BoxHint& box);

}  // namespace ehrstar
