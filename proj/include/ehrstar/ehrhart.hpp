#pragma once

#include <cstdint>
#include <vector>

#include "ehrstar/integer.hpp"
#include "ehrstar/kernels.hpp"
#include "ehrstar/lattice.hpp"
#include "ehrstar/star_basis.hpp"

namespace ehrstar {

/// Cost guards. Exceeding one raises InfeasibleStrategy rather than
/// silently switching routes.
struct EngineLimits {
  /// Largest bounding box (candidate points) a counting scan may visit.
  Integer count_cap{1'000'000'000};
  /// Largest normalized volume (residue count) for box-point enumeration.
  Integer volume_cap{10'000'000};
};

/// ehr(n) for n = 0..d+1, with counts[0] = 1.
struct CountProfile {
  std::size_t dim = 0;
  IntVector counts;
};

/// heights[i] = lattice points at height i in the half-open fundamental
/// parallelepiped of the cone over a simplex.
struct BoxPointTable {
  std::size_t dim = 0;
  IntVector heights;
};

enum class CountRoute { Box, Simplex, HalfSpace };

/// Route count_points would take, or InfeasibleStrategy.
CountRoute count_route(const LatticePolytope& p);

/// |nP cap Z^d| for n >= 1. Dispatch: box hint -> product of intervals;
/// simplex -> barycentric scan; half-spaces -> inequality scan.
Integer count_points(const LatticePolytope& p, const Integer& n, const EngineLimits& limits = {});

Integer count_points_box(const BoxHint& box, const Integer& n);
Integer count_points_simplex(const LatticeSimplex& s, const Integer& n, const EngineLimits& limits = {});
Integer count_points_halfspace(const LatticePolytope& p, const Integer& n, const EngineLimits& limits = {});

/// The d+1 inequalities describing n * simplex: row i is the barycentric
/// coordinate lambda_i scaled by the normalized volume.
std::vector<HalfSpace> barycentric_inequalities(const LatticeSimplex& s, const Integer& n);

/// Bounding box of n * P from its vertices.
kernels::IntegerBox dilated_bounding_box(const LatticePolytope& p, const Integer& n);

CountProfile count_profile(const LatticePolytope& p, const EngineLimits& limits = {});

/// Newton forward differences of ehr(1), ehr(2), ...: f_k = Delta^k ehr(1).
FStarVector f_star_from_profile(const CountProfile& c);

/// Residue-class enumeration of the fundamental parallelepiped via the
/// Smith normal form of the homogenized vertex matrix.
BoxPointTable box_points_simplex(const LatticeSimplex& s, const EngineLimits& limits = {});
BoxPointTable box_points_simplex_serial(const LatticeSimplex& s, const EngineLimits& limits = {});

/// The residue system enumerated by box_points_simplex.
kernels::ResidueSystem residue_system(const LatticeSimplex& s, const EngineLimits& limits = {});

/// Exact adjugate: adj(A) * A = det(A) * I.
IntMatrix adjugate(const IntMatrix& a);

enum class HStarRoute { Auto, BoxPoints, Interpolation };

/// h*-vector of a full-dimensional polytope. Auto picks box points for a
/// simplex within the volume cap, interpolation otherwise. With
/// cross_check, both routes run when both apply and must agree.
HStarVector h_star_of(const LatticePolytope& p, const EngineLimits& limits = {},
                      HStarRoute route = HStarRoute::Auto, bool cross_check = false);

}  // namespace ehrstar
