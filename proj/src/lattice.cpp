#include "ehrstar/lattice.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "ehrstar/errors.hpp"
#include "ehrstar/halfspace.hpp"

namespace ehrstar {

namespace {

void check_lengths(std::size_t ambient_dim, std::span<const LatticePoint> points) {
  for (const auto& p : points)
    if (p.size() != ambient_dim)
      throw PreconditionError("point of length " + std::to_string(p.size()) +
                              " in ambient dimension " + std::to_string(ambient_dim));
}

IntMatrix edge_matrix(std::span<const LatticePoint> points) {
  const std::size_t n = points.empty() ? 0 : points[0].size();
  IntMatrix m(points.size() > 0 ? points.size() - 1 : 0, n);
  for (std::size_t i = 1; i < points.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i - 1, j) = points[i][j] - points[0][j];
  return m;
}

}  // namespace

LatticePolytope LatticePolytope::from_vertices(std::size_t ambient_dim,
                                               std::vector<LatticePoint> vertices) {
  if (vertices.empty()) throw PreconditionError("empty vertex list");
  check_lengths(ambient_dim, vertices);
  LatticePolytope p;
  p.ambient_dim_ = ambient_dim;
  p.box_ = detect_box(vertices, ambient_dim);
  p.vertices_ = std::move(vertices);
  return p;
}

LatticePolytope LatticePolytope::from_halfspaces(std::size_t ambient_dim,
                                                 std::vector<HalfSpace> halfspaces) {
  if (halfspaces.empty()) throw PreconditionError("empty half-space list");
  for (const auto& h : halfspaces)
    if (h.normal.size() != ambient_dim)
      throw PreconditionError("half-space normal of length " + std::to_string(h.normal.size()) +
                              " in ambient dimension " + std::to_string(ambient_dim));
  LatticePolytope p;
  p.ambient_dim_ = ambient_dim;
  p.halfspaces_ = std::move(halfspaces);
  return p;
}

LatticePolytope LatticePolytope::with_halfspaces(std::vector<HalfSpace> halfspaces) const {
  for (const auto& h : halfspaces)
    if (h.normal.size() != ambient_dim_) throw PreconditionError("half-space normal length mismatch");
  LatticePolytope p = *this;
  p.halfspaces_ = std::move(halfspaces);
  return p;
}

LatticePolytope LatticePolytope::with_box(BoxHint box) const {
  if (box.sides.size() != ambient_dim_) throw PreconditionError("box hint length mismatch");
  LatticePolytope p = *this;
  p.box_ = std::move(box);
  return p;
}

const std::vector<LatticePoint>& LatticePolytope::vertex_list() const {
  if (vertices_) return *vertices_;
  if (!derived_vertices_) derived_vertices_ = vertices_from_halfspaces(ambient_dim_, *halfspaces_);
  return *derived_vertices_;
}

std::size_t LatticePolytope::dimension() const {
  if (!cached_dim_) cached_dim_ = affine_dimension(vertex_list());
  return *cached_dim_;
}

bool LatticePolytope::is_simplex() const {
  return vertices_ && vertices_->size() == ambient_dim_ + 1 && full_dimensional();
}

LatticeSimplex::LatticeSimplex(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw PreconditionError("simplex without vertices");
  const std::size_t d = vertices_.size() - 1;
  check_lengths(d, vertices_);
  volume_ = abs(determinant(edge_matrix(vertices_)));
  if (volume_ == 0) throw PreconditionError("degenerate simplex (zero volume)");
}

LatticePolytope LatticeSimplex::polytope() const {
  return LatticePolytope::from_vertices(dim(), vertices_);
}

IntMatrix LatticeSimplex::homogenized() const {
  const std::size_t d = dim();
  IntMatrix w(d + 1, d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    for (std::size_t j = 0; j < d; ++j) w(j, i) = vertices_[i][j];
    w(d, i) = 1;
  }
  return w;
}

std::size_t affine_dimension(std::span<const LatticePoint> points) {
  if (points.empty()) throw PreconditionError("affine dimension of an empty vertex list");
  return rank(edge_matrix(points));
}

std::size_t affine_dimension(const LatticePolytope& p) { return p.dimension(); }

bool simplex_contains(const LatticeSimplex& s, std::span<const Integer> q, const Integer& dilate) {
  const std::size_t n = s.dim() + 1;
  if (q.size() != s.dim()) throw PreconditionError("point dimension does not match simplex");
  // Augmented system [W | (q, dilate)] solved by Gauss-Jordan over Q.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  const IntMatrix w = s.homogenized();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = w(r, c);
    a[r][n] = r + 1 < n ? Rational(q[r]) : Rational(dilate);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) throw PreconditionError("degenerate simplex (zero volume)");
    std::swap(a[c], a[p]);
    const Rational inv = 1 / a[c][c];
    for (std::size_t k = c; k <= n; ++k) a[c][k] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(a[r][c]) == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return std::all_of(a.begin(), a.end(), [n](const auto& row) { return sgn(row[n]) >= 0; });
}

LatticePolytope pyramid(const LatticePolytope& p) {
  const std::size_t d = p.ambient_dim();
  std::vector<LatticePoint> verts;
  for (const auto& v : p.vertex_list()) {
    LatticePoint lifted = v;
    lifted.push_back(0);
    verts.push_back(std::move(lifted));
  }
  LatticePoint apex(d + 1, 0);
  apex[d] = 1;
  verts.push_back(std::move(apex));
  LatticePolytope out = LatticePolytope::from_vertices(d + 1, std::move(verts));

  if (p.halfspaces()) {
    // (x, t) lies in Pyr(P) iff 0 <= t <= 1 and x lies in (1 - t) P.
    std::vector<HalfSpace> hs;
    for (const auto& h : *p.halfspaces()) {
      HalfSpace lifted{h.constant, h.normal};
      lifted.normal.push_back(-h.constant);
      hs.push_back(std::move(lifted));
    }
    IntVector up(d + 1, 0), down(d + 1, 0);
    up[d] = 1;
    down[d] = -1;
    hs.push_back({0, std::move(up)});
    hs.push_back({1, std::move(down)});
    out = out.with_halfspaces(std::move(hs));
  }
  return out;
}

LatticePolytope iterated_pyramid(const LatticePolytope& p, std::size_t times) {
  LatticePolytope out = p;
  for (std::size_t i = 0; i < times; ++i) out = pyramid(out);
  return out;
}

LatticeSimplex pyramid(const LatticeSimplex& s) {
  return LatticeSimplex(pyramid(s.polytope()).vertex_list());
}

LatticePolytope make_cube(std::size_t d, const Integer& low, const Integer& high, std::size_t max_dim) {
  if (!(low < high)) throw PreconditionError("cube requires low < high");
  if (d > max_dim)
    throw PreconditionError("cube dimension " + std::to_string(d) + " exceeds the vertex-list cap " +
                            std::to_string(max_dim));
  std::vector<LatticePoint> verts;
  verts.reserve(std::size_t{1} << d);
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    LatticePoint v(d);
    for (std::size_t j = 0; j < d; ++j) v[j] = (mask >> j) & 1U ? high : low;
    verts.push_back(std::move(v));
  }
  BoxHint box;
  box.sides.assign(d, {low, high});
  return LatticePolytope::from_vertices(d, std::move(verts))
      .with_halfspaces(box_halfspaces(box))
      .with_box(box);
}

LatticeSimplex make_unimodular_simplex(std::size_t d) {
  if (d == 0) throw PreconditionError("unimodular simplex needs d >= 1");
  std::vector<LatticePoint> verts(d + 1, LatticePoint(d, 0));
  for (std::size_t i = 0; i < d; ++i) verts[i + 1][i] = 1;
  return LatticeSimplex(std::move(verts));
}

LatticeSimplex make_higashitani(std::size_t ones_len, const Integer& big_val, std::size_t big_len,
                                const Integer& last_val) {
  const std::size_t d = ones_len + big_len + 1;
  if (d < 3) throw PreconditionError("Higashitani simplex needs dimension >= 3");
  if (sgn(big_val) <= 0 || sgn(last_val) <= 0)
    throw PreconditionError("Higashitani parameters must be positive");
  std::vector<LatticePoint> verts(d, LatticePoint(d, 0));
  for (std::size_t i = 0; i + 1 < d; ++i) verts[i + 1][i] = 1;
  LatticePoint w(d);
  for (std::size_t j = 0; j < ones_len; ++j) w[j] = 1;
  for (std::size_t j = 0; j < big_len; ++j) w[ones_len + j] = big_val;
  w[d - 1] = last_val;
  verts.push_back(std::move(w));
  return LatticeSimplex(std::move(verts));
}

LatticeSimplex make_random_simplex(std::size_t d, std::int64_t coord_bound, std::uint64_t seed) {
  if (d == 0 || coord_bound <= 0) throw PreconditionError("random simplex needs d >= 1 and bound >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(-coord_bound, coord_bound);
  for (int attempt = 0; attempt < kRandomSimplexAttempts; ++attempt) {
    std::vector<LatticePoint> verts(d + 1, LatticePoint(d));
    for (auto& v : verts)
      for (auto& x : v) x = static_cast<long>(coord(rng));
    if (determinant(edge_matrix(verts)) != 0) return LatticeSimplex(std::move(verts));
  }
  throw PreconditionError("no nondegenerate simplex after " + std::to_string(kRandomSimplexAttempts) +
                          " attempts; coordinate bound too small");
}

std::optional<BoxHint> detect_box(std::span<const LatticePoint> vertices, std::size_t ambient_dim) {
  if (ambient_dim >= 63 || vertices.size() != (std::size_t{1} << ambient_dim)) return std::nullopt;
  BoxHint box;
  for (std::size_t j = 0; j < ambient_dim; ++j) {
    Integer lo = vertices[0][j], hi = vertices[0][j];
    for (const auto& v : vertices) {
      lo = std::min(lo, v[j]);
      hi = std::max(hi, v[j]);
    }
    if (lo == hi) return std::nullopt;
    box.sides.emplace_back(lo, hi);
  }
  std::set<std::size_t> corners;
  for (const auto& v : vertices) {
    std::size_t mask = 0;
    for (std::size_t j = 0; j < ambient_dim; ++j) {
      if (v[j] == box.sides[j].second)
        mask |= std::size_t{1} << j;
      else if (v[j] != box.sides[j].first)
        return std::nullopt;
    }
    corners.insert(mask);
  }
  if (corners.size() != vertices.size()) return std::nullopt;
  return box;
}

}  // namespace ehrstar
