#include "ehrstar/ehrhart.hpp"

#include <stdexcept>
#include <string>

#include "ehrstar/errors.hpp"
#include "ehrstar/smith.hpp"

namespace ehrstar {

namespace {

// Residue numerators are reduced into int64; keep the modulus far below 2^63.
const Integer kMaxResidueModulus = Integer(1) << 40;

void require_full_dimensional(const LatticePolytope& p) {
  if (!p.full_dimensional())
    throw PreconditionError("polytope of dimension " + std::to_string(p.dimension()) + " in ambient dimension " +
                            std::to_string(p.ambient_dim()) + " is not full-dimensional");
}

void require_positive(const Integer& n) {
  if (sgn(n) <= 0) throw PreconditionError("dilation factor must be positive");
}

void guard_scan(const kernels::IntegerBox& box, const EngineLimits& limits) {
  const Integer size = box.size();
  if (size > limits.count_cap)
    throw InfeasibleStrategy("counting scan of " + size.get_str() + " candidate points exceeds the cap of " +
                             limits.count_cap.get_str());
}

}  // namespace

IntMatrix adjugate(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw PreconditionError("adjugate of a non-square matrix");
  const Integer det = determinant(a);
  if (det == 0) throw PreconditionError("adjugate of a singular matrix");
  // Gauss-Jordan on [A | I] over Q, then adj = det * A^{-1}.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r][c] = a(r, c);
    m[r][n + r] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (sgn(m[p][c]) == 0) ++p;
    std::swap(m[c], m[p]);
    const Rational inv = 1 / m[c][c];
    for (auto& v : m[c]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  IntMatrix adj(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Rational v = m[r][n + c] * det;
      if (v.get_den() != 1) throw std::logic_error("adjugate entry is not integral");
      adj(r, c) = v.get_num();
    }
  return adj;
}

std::vector<HalfSpace> barycentric_inequalities(const LatticeSimplex& s, const Integer& n) {
  const IntMatrix w = s.homogenized();
  const std::size_t d = s.dim();
  const IntMatrix adj = adjugate(w);
  const int sign = sgn(determinant(w));
  std::vector<HalfSpace> out;
  for (std::size_t i = 0; i <= d; ++i) {
    HalfSpace h{sign * adj(i, d) * n, IntVector(d)};
    for (std::size_t j = 0; j < d; ++j) h.normal[j] = sign * adj(i, j);
    out.push_back(std::move(h));
  }
  return out;
}

kernels::IntegerBox dilated_bounding_box(const LatticePolytope& p, const Integer& n) {
  const auto& verts = p.vertex_list();
  kernels::IntegerBox box{verts[0], verts[0]};
  for (const auto& v : verts)
    for (std::size_t j = 0; j < p.ambient_dim(); ++j) {
      if (v[j] < box.low[j]) box.low[j] = v[j];
      if (v[j] > box.high[j]) box.high[j] = v[j];
    }
  for (std::size_t j = 0; j < p.ambient_dim(); ++j) {
    box.low[j] *= n;
    box.high[j] *= n;
  }
  return box;
}

CountRoute count_route(const LatticePolytope& p) {
  if (p.box()) return CountRoute::Box;
  if (p.is_simplex()) return CountRoute::Simplex;
  if (p.halfspaces()) return CountRoute::HalfSpace;
  throw InfeasibleStrategy(
      "no counting strategy: vertex list is neither a simplex nor an axis-aligned box and no half-spaces were given");
}

Integer count_points_box(const BoxHint& box, const Integer& n) {
  require_positive(n);
  Integer count = 1;
  for (const auto& [low, high] : box.sides) count *= n * (high - low) + 1;
  return count;
}

Integer count_points_simplex(const LatticeSimplex& s, const Integer& n, const EngineLimits& limits) {
  require_positive(n);
  const auto box = dilated_bounding_box(s.polytope(), n);
  guard_scan(box, limits);
  return kernels::count_in_box(barycentric_inequalities(s, n), box);
}

Integer count_points_halfspace(const LatticePolytope& p, const Integer& n, const EngineLimits& limits) {
  require_positive(n);
  if (!p.halfspaces()) throw PreconditionError("polytope has no half-space description");
  const auto box = dilated_bounding_box(p, n);
  guard_scan(box, limits);
  std::vector<HalfSpace> dilated = *p.halfspaces();
  for (auto& h : dilated) h.constant *= n;
  return kernels::count_in_box(dilated, box);
}

Integer count_points(const LatticePolytope& p, const Integer& n, const EngineLimits& limits) {
  require_positive(n);
  require_full_dimensional(p);
  switch (count_route(p)) {
    case CountRoute::Box:
      return count_points_box(*p.box(), n);
    case CountRoute::Simplex:
      return count_points_simplex(LatticeSimplex(*p.vertices()), n, limits);
    case CountRoute::HalfSpace:
      return count_points_halfspace(p, n, limits);
  }
  throw std::logic_error("unhandled counting route");
}

CountProfile count_profile(const LatticePolytope& p, const EngineLimits& limits) {
  require_full_dimensional(p);
  const std::size_t d = p.ambient_dim();
  CountProfile c{d, IntVector(d + 2)};
  c.counts[0] = 1;
  for (std::size_t n = 1; n <= d + 1; ++n) c.counts[n] = count_points(p, Integer(static_cast<unsigned long>(n)), limits);
  return c;
}

FStarVector f_star_from_profile(const CountProfile& c) {
  const std::size_t d = c.dim;
  if (c.counts.size() < d + 2) throw PreconditionError("count profile needs ehr(1..d+1)");
  IntVector diff(c.counts.begin() + 1, c.counts.begin() + static_cast<long>(d) + 2);
  IntVector f(d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    f[k] = diff[0];
    for (std::size_t i = 0; i + 1 < diff.size() - k; ++i) diff[i] = diff[i + 1] - diff[i];
  }
  return FStarVector::from_polytope(std::move(f));
}

kernels::ResidueSystem residue_system(const LatticeSimplex& s, const EngineLimits& limits) {
  const Integer& volume = s.normalized_volume();
  if (volume > limits.volume_cap)
    throw InfeasibleStrategy("normalized volume " + volume.get_str() + " exceeds the box-point cap of " +
                             limits.volume_cap.get_str());
  if (volume > kMaxResidueModulus) throw InfeasibleStrategy("normalized volume too large for residue enumeration");

  const IntMatrix w = s.homogenized();
  const std::size_t n = w.rows();
  const SmithForm snf = smith_normal_form(w);
  const int sign = sgn(determinant(w));
  const IntMatrix numer = adjugate(w) * snf.left_inverse;

  kernels::ResidueSystem sys;
  sys.modulus = volume.get_si();
  sys.coords = n;
  for (std::size_t k = 0; k < n; ++k) {
    const Integer& order = snf.diagonal(k, k);
    if (order == 1) continue;
    sys.orders.push_back(order.get_si());
    std::vector<std::int64_t> step(n);
    for (std::size_t i = 0; i < n; ++i) {
      Integer v = sign * numer(i, k);
      mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), volume.get_mpz_t());
      step[i] = v.get_si();
    }
    sys.steps.push_back(std::move(step));
  }
  if (sys.group_order() != sys.modulus) throw std::logic_error("Smith invariants do not multiply to the volume");
  return sys;
}

namespace {

BoxPointTable to_table(const LatticeSimplex& s, const std::vector<std::int64_t>& histogram) {
  BoxPointTable t{s.dim(), IntVector(histogram.size())};
  Integer total = 0;
  for (std::size_t i = 0; i < histogram.size(); ++i) {
    t.heights[i] = static_cast<long>(histogram[i]);
    total += t.heights[i];
  }
  if (total != s.normalized_volume()) throw std::logic_error("box-point count differs from normalized volume");
  return t;
}

}  // namespace

BoxPointTable box_points_simplex(const LatticeSimplex& s, const EngineLimits& limits) {
  return to_table(s, kernels::height_histogram(residue_system(s, limits)));
}

BoxPointTable box_points_simplex_serial(const LatticeSimplex& s, const EngineLimits& limits) {
  return to_table(s, kernels::height_histogram_serial(residue_system(s, limits)));
}

HStarVector h_star_of(const LatticePolytope& p, const EngineLimits& limits, HStarRoute route, bool cross_check) {
  require_full_dimensional(p);
  const bool simplex = p.is_simplex();
  const bool box_feasible = simplex && LatticeSimplex(*p.vertices()).normalized_volume() <= limits.volume_cap;

  auto via_box = [&] { return HStarVector::from_polytope(box_points_simplex(LatticeSimplex(*p.vertices()), limits).heights); };
  auto via_profile = [&] { return h_from_f(f_star_from_profile(count_profile(p, limits))); };

  if (route == HStarRoute::BoxPoints) {
    if (!simplex) throw InfeasibleStrategy("box-point route needs a simplex");
    return via_box();
  }
  if (route == HStarRoute::Interpolation) return via_profile();

  if (!box_feasible) return via_profile();
  HStarVector h = via_box();
  if (cross_check) {
    HStarVector other = via_profile();
    if (!(other == h)) throw std::logic_error("box-point and interpolation h*-vectors disagree");
  }
  return h;
}

}  // namespace ehrstar
