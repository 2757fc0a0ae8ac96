#pragma once

// Independent reference computations for tests. Nothing here calls the
// library's conversion or counting code.

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "ehrstar/integer.hpp"

namespace testsupport {

using ehrstar::Integer;
using ehrstar::IntVector;

inline IntVector ints(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

/// Pascal's triangle, rows 0..n.
inline std::vector<IntVector> pascal(std::size_t n) {
  std::vector<IntVector> t(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    t[i].assign(i + 1, 1);
    for (std::size_t j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return t;
}

/// ehr(n) from h*, evaluated straight from the defining sum.
inline Integer ehr_from_h(const IntVector& h, long n) {
  const long d = static_cast<long>(h.size()) - 1;
  const auto t = pascal(static_cast<std::size_t>(n + d));
  Integer s = 0;
  for (long k = 0; k <= d; ++k)
    if (n + d - k >= d) s += h[static_cast<std::size_t>(k)] * t[static_cast<std::size_t>(n + d - k)][static_cast<std::size_t>(d)];
  return s;
}

/// f* as forward differences of ehr(1), ehr(2), ..., ehr(d+1).
inline IntVector f_by_differences(const IntVector& counts_from_one) {
  IntVector row = counts_from_one, f;
  while (!row.empty()) {
    f.push_back(row[0]);
    for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
    row.pop_back();
  }
  return f;
}

inline IntVector f_oracle(const IntVector& h) {
  IntVector counts;
  for (long n = 1; n <= static_cast<long>(h.size()); ++n) counts.push_back(ehr_from_h(h, n));
  return f_by_differences(counts);
}

/// Determinant of a small int64 matrix by cofactor expansion.
inline std::int64_t det_small(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t s = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(row);
    }
    const std::int64_t term = m[0][c] * det_small(minor);
    s += (c % 2 == 0) ? term : -term;
  }
  return s;
}

/// Brute-force |n * conv(vertices)  cap Z^d| for small simplices: every
/// point of the bounding box is tested with Cramer's rule on the
/// homogenized system.
inline std::int64_t brute_force_simplex_count(const std::vector<std::vector<std::int64_t>>& verts, std::int64_t n) {
  const std::size_t d = verts.size() - 1;
  std::vector<std::vector<std::int64_t>> w(d + 1, std::vector<std::int64_t>(d + 1));
  for (std::size_t i = 0; i <= d; ++i) {
    for (std::size_t r = 0; r < d; ++r) w[r][i] = verts[i][r];
    w[d][i] = 1;
  }
  const std::int64_t det = det_small(w);
  // cof[i][r]: cofactor of entry (r, i), so lambda_i * det = sum_r cof[i][r] * rhs[r].
  std::vector<std::vector<std::int64_t>> cof(d + 1, std::vector<std::int64_t>(d + 1));
  for (std::size_t i = 0; i <= d; ++i)
    for (std::size_t r = 0; r <= d; ++r) {
      std::vector<std::vector<std::int64_t>> minor;
      for (std::size_t rr = 0; rr <= d; ++rr) {
        if (rr == r) continue;
        std::vector<std::int64_t> row;
        for (std::size_t cc = 0; cc <= d; ++cc)
          if (cc != i) row.push_back(w[rr][cc]);
        minor.push_back(row);
      }
      cof[i][r] = ((r + i) % 2 == 0 ? 1 : -1) * det_small(minor);
    }
  std::vector<std::int64_t> lo(d), hi(d);
  for (std::size_t r = 0; r < d; ++r) {
    lo[r] = hi[r] = verts[0][r] * n;
    for (const auto& v : verts) {
      lo[r] = std::min(lo[r], v[r] * n);
      hi[r] = std::max(hi[r], v[r] * n);
    }
  }
  std::vector<std::int64_t> x = lo, rhs(d + 1);
  rhs[d] = n;
  std::int64_t count = 0;
  while (true) {
    for (std::size_t r = 0; r < d; ++r) rhs[r] = x[r];
    bool inside = true;
    for (std::size_t i = 0; i <= d && inside; ++i) {
      std::int64_t num = 0;
      for (std::size_t r = 0; r <= d; ++r) num += cof[i][r] * rhs[r];
      inside = det > 0 ? num >= 0 : num <= 0;
    }
    count += inside;
    std::size_t r = 0;
    while (r < d && x[r] == hi[r]) x[r] = lo[r], ++r;
    if (r == d) break;
    ++x[r];
  }
  return count;
}

}  // namespace testsupport
