#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ehrstar/integer.hpp"

namespace ehrstar {

using LatticePoint = IntVector;

/// The inequality constant + normal . x >= 0.
struct HalfSpace {
  Integer constant;
  IntVector normal;

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// Axis-aligned box [low_i, high_i] per coordinate. Counting in its
/// dilates factors into one interval per coordinate.
struct BoxHint {
  std::vector<std::pair<Integer, Integer>> sides;

  friend bool operator==(const BoxHint&, const BoxHint&) = default;
};

/// A lattice polytope in Z^ambient_dim. At least one of the vertex list
/// and half-space list is present; when both are present they describe
/// the same set (generators guarantee this, file input carries one).
class LatticePolytope {
 public:
  static LatticePolytope from_vertices(std::size_t ambient_dim, std::vector<LatticePoint> vertices);
  static LatticePolytope from_halfspaces(std::size_t ambient_dim, std::vector<HalfSpace> halfspaces);

  std::size_t ambient_dim() const { return ambient_dim_; }

  const std::optional<std::vector<LatticePoint>>& vertices() const { return vertices_; }
  const std::optional<std::vector<HalfSpace>>& halfspaces() const { return halfspaces_; }
  const std::optional<BoxHint>& box() const { return box_; }

  /// Attaches a redundant half-space description; sizes are validated.
  LatticePolytope with_halfspaces(std::vector<HalfSpace> halfspaces) const;
  LatticePolytope with_box(BoxHint box) const;

  /// Vertex list, computing it from half-spaces on first use.
  const std::vector<LatticePoint>& vertex_list() const;

  /// Affine dimension; computed once and cached.
  std::size_t dimension() const;
  bool full_dimensional() const { return dimension() == ambient_dim_; }

  /// A full-dimensional vertex list with exactly ambient_dim + 1 points.
  bool is_simplex() const;

 private:
  std::size_t ambient_dim_ = 0;
  std::optional<std::vector<LatticePoint>> vertices_;
  std::optional<std::vector<HalfSpace>> halfspaces_;
  std::optional<BoxHint> box_;
  mutable std::optional<std::vector<LatticePoint>> derived_vertices_;
  mutable std::optional<std::size_t> cached_dim_;
};

/// A full-dimensional lattice simplex with its normalized volume
/// |det(v_1 - v_0, ..., v_d - v_0)|.
class LatticeSimplex {
 public:
  explicit LatticeSimplex(std::vector<LatticePoint> vertices);

  std::size_t dim() const { return vertices_.size() - 1; }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  const Integer& normalized_volume() const { return volume_; }
  bool unimodular() const { return volume_ == 1; }

  LatticePolytope polytope() const;

  /// Homogenized vertex matrix: column i is (v_i, 1).
  IntMatrix homogenized() const;

 private:
  std::vector<LatticePoint> vertices_;
  Integer volume_;
};

std::size_t affine_dimension(std::span<const LatticePoint> points);
std::size_t affine_dimension(const LatticePolytope& p);

/// Exact barycentric membership: q = sum lambda_i v_i with lambda_i >= 0
/// and sum lambda_i = dilate.
bool simplex_contains(const LatticeSimplex& s, std::span<const Integer> q, const Integer& dilate);

LatticePolytope pyramid(const LatticePolytope& p);
LatticePolytope iterated_pyramid(const LatticePolytope& p, std::size_t times);
LatticeSimplex pyramid(const LatticeSimplex& s);

inline constexpr std::size_t kMaxCubeDim = 20;

LatticePolytope make_cube(std::size_t d, const Integer& low, const Integer& high,
                          std::size_t max_dim = kMaxCubeDim);
LatticeSimplex make_unimodular_simplex(std::size_t d);

/// conv{0, e_1, ..., e_{d-1}, w} with w = (1^ones_len, big_val^big_len, last_val),
/// d = ones_len + big_len + 1.
LatticeSimplex make_higashitani(std::size_t ones_len, const Integer& big_val,
                                std::size_t big_len, const Integer& last_val);

inline constexpr int kRandomSimplexAttempts = 1000;

/// Uniform coordinates in [-coord_bound, coord_bound], resampled until
/// nondegenerate. Deterministic for a fixed seed.
LatticeSimplex make_random_simplex(std::size_t d, std::int64_t coord_bound, std::uint64_t seed);

/// Recognizes a vertex list that is exactly the corner set of its
/// bounding box.
std::optional<BoxHint> detect_box(std::span<const LatticePoint> vertices, std::size_t ambient_dim);

}  // namespace ehrstar
