#include "ehrstar/halfspace.hpp"

#include <set>
#include <string>

#include "ehrstar/errors.hpp"

namespace ehrstar {

namespace {

// Calls fn(subset) for every k-subset of {0..n-1} in lexicographic order.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(std::span<const std::size_t>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Unique solution of the square system rows . x = rhs, or nullopt when singular.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[c], a[p]);
    const Rational inv = 1 / a[c][c];
    for (std::size_t k = c; k <= n; ++k) a[c][k] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(a[r][c]) == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

}  // namespace

bool satisfies(std::span<const HalfSpace> halfspaces, std::span<const Integer> x) {
  for (const auto& h : halfspaces)
    if (h.constant + dot(h.normal, x) < 0) return false;
  return true;
}

std::vector<HalfSpace> box_halfspaces(const BoxHint& box) {
  const std::size_t d = box.sides.size();
  std::vector<HalfSpace> hs;
  for (std::size_t j = 0; j < d; ++j) {
    IntVector lower(d, 0), upper(d, 0);
    lower[j] = 1;
    upper[j] = -1;
    hs.push_back({-box.sides[j].first, std::move(lower)});
    hs.push_back({box.sides[j].second, std::move(upper)});
  }
  return hs;
}

std::vector<LatticePoint> vertices_from_halfspaces(std::size_t ambient_dim,
                                                   std::span<const HalfSpace> halfspaces) {
  const std::size_t d = ambient_dim;
  const std::size_t m = halfspaces.size();
  if (d == 0) {
    for (const auto& h : halfspaces)
      if (h.constant < 0) throw PreconditionError("half-space polytope is empty");
    return {LatticePoint{}};
  }

  Integer subsets = binomial(static_cast<long>(m), static_cast<long>(d));
  if (subsets > static_cast<unsigned long>(kMaxHalfspaceSubsets))
    throw PreconditionError("half-space list too large for exact vertex enumeration");

  IntMatrix normals(m, d);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < d; ++j) normals(i, j) = halfspaces[i].normal[j];
  if (rank(normals) < d) throw PreconditionError("half-space polytope is unbounded (has a lineality direction)");

  // Extreme rays of the recession cone are cut out by d-1 independent tight rows.
  bool unbounded = false;
  for_each_subset(m, d - 1, [&](std::span<const std::size_t> rows) {
    if (unbounded) return;
    IntVector y(d);
    for (std::size_t j = 0; j < d; ++j) {
      IntMatrix minor(d - 1, d - 1);
      for (std::size_t r = 0; r < d - 1; ++r)
        for (std::size_t c = 0, cc = 0; c < d; ++c)
          if (c != j) minor(r, cc++) = normals(rows[r], c);
      y[j] = determinant(std::move(minor));
      if (j % 2 == 1) y[j] = -y[j];
    }
    bool zero = true;
    for (const auto& v : y) zero = zero && sgn(v) == 0;
    if (zero) return;
    bool pos = true, neg = true;
    for (const auto& h : halfspaces) {
      const int s = sgn(dot(h.normal, y));
      pos = pos && s >= 0;
      neg = neg && s <= 0;
    }
    unbounded = pos || neg;
  });
  if (unbounded) throw PreconditionError("half-space polytope is unbounded");

  std::set<std::vector<Rational>> found;
  for_each_subset(m, d, [&](std::span<const std::size_t> rows) {
    std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d + 1));
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) a[r][c] = halfspaces[rows[r]].normal[c];
      a[r][d] = -halfspaces[rows[r]].constant;
    }
    auto x = solve(std::move(a));
    if (!x) return;
    for (const auto& h : halfspaces) {
      Rational s = h.constant;
      for (std::size_t c = 0; c < d; ++c) s += h.normal[c] * (*x)[c];
      if (sgn(s) < 0) return;
    }
    found.insert(std::move(*x));
  });
  if (found.empty()) throw PreconditionError("half-space polytope is empty");

  std::vector<LatticePoint> verts;
  for (const auto& x : found) {
    LatticePoint v(d);
    for (std::size_t c = 0; c < d; ++c) {
      if (x[c].get_den() != 1) throw PreconditionError("half-space polytope has a non-integral vertex");
      v[c] = x[c].get_num();
    }
    verts.push_back(std::move(v));
  }
  return verts;
}

}  // namespace ehrstar
