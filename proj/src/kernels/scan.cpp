#include <omp.h>

#include <algorithm>
#include <cstdint>

#include "ehrstar/errors.hpp"
#include "ehrstar/kernels.hpp"

namespace ehrstar::kernels {

namespace {

// Lines and counts are tallied in 64 bits; boxes beyond this are refused.
const Integer kMaxBoxPoints = Integer(1) << 62;
// Partial sums r_i must stay well inside int64 for the fast path.
const Integer kInt64Headroom = Integer(1) << 60;

constexpr std::uint64_t kLinesPerBlock = 4096;

inline std::int64_t fdiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}
inline std::int64_t cdiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return (a % b != 0 && a > 0) ? q + 1 : q;
}
inline Integer fdiv(const Integer& a, const Integer& b) { return floor_div(a, b); }
inline Integer cdiv(const Integer& a, const Integer& b) { return ceil_div(a, b); }

template <class Int>
Int convert(const Integer& v) {
  if constexpr (std::is_same_v<Int, std::int64_t>)
    return v.get_si();
  else
    return v;
}

template <class Int>
std::int64_t to_count(const Int& v) {
  if constexpr (std::is_same_v<Int, std::int64_t>)
    return v;
  else
    return v.get_si();
}

template <class Int>
struct Scan {
  std::size_t rows = 0;
  std::size_t inner = 0;
  std::vector<std::size_t> outer;
  std::vector<Int> constants;
  std::vector<Int> coeff;  // rows x dim, row-major
  std::vector<Int> low, high;
  std::size_t dim = 0;

  Scan(std::span<const HalfSpace> ineqs, const IntegerBox& box) : rows(ineqs.size()), dim(box.dim()) {
    // Innermost coordinate is the widest one, so lines are as long as possible.
    Integer best = -1;
    for (std::size_t j = 0; j < dim; ++j) {
      Integer w = box.high[j] - box.low[j];
      if (w > best) {
        best = w;
        inner = j;
      }
    }
    for (std::size_t j = 0; j < dim; ++j)
      if (j != inner) outer.push_back(j);
    for (const auto& h : ineqs) {
      constants.push_back(convert<Int>(h.constant));
      for (const auto& a : h.normal) coeff.push_back(convert<Int>(a));
    }
    for (std::size_t j = 0; j < dim; ++j) {
      low.push_back(convert<Int>(box.low[j]));
      high.push_back(convert<Int>(box.high[j]));
    }
  }

  const Int& a(std::size_t i, std::size_t j) const { return coeff[i * dim + j]; }

  // Counts points on lines [begin, end) of the outer odometer (first outer
  // coordinate varies fastest).
  std::int64_t count_lines(std::uint64_t begin, std::uint64_t end) const {
    std::vector<Int> x(outer.size());
    std::uint64_t rest = begin;
    for (std::size_t k = 0; k < outer.size(); ++k) {
      const std::size_t j = outer[k];
      const std::uint64_t width = static_cast<std::uint64_t>(to_count<Int>(high[j] - low[j])) + 1;
      x[k] = low[j] + Int(static_cast<std::int64_t>(rest % width));
      rest /= width;
    }
    std::vector<Int> r(constants);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < outer.size(); ++k) r[i] += a(i, outer[k]) * x[k];

    std::int64_t total = 0;
    Int lo, hi;
    for (std::uint64_t line = begin; line < end; ++line) {
      lo = low[inner];
      hi = high[inner];
      bool empty = false;
      for (std::size_t i = 0; i < rows && !empty; ++i) {
        const Int& c = a(i, inner);
        if (c > 0) {
          Int bound = cdiv(Int(-r[i]), c);
          if (bound > lo) lo = bound;
        } else if (c < 0) {
          Int bound = fdiv(r[i], Int(-c));
          if (bound < hi) hi = bound;
        } else if (r[i] < 0) {
          empty = true;
        }
        empty = empty || lo > hi;
      }
      if (!empty) total += to_count<Int>(Int(hi - lo)) + 1;

      // Advance the outer odometer and update the partial sums.
      for (std::size_t k = 0; k < outer.size(); ++k) {
        const std::size_t j = outer[k];
        if (x[k] < high[j]) {
          x[k] += 1;
          for (std::size_t i = 0; i < rows; ++i) r[i] += a(i, j);
          break;
        }
        const Int span = high[j] - low[j];
        x[k] = low[j];
        for (std::size_t i = 0; i < rows; ++i) r[i] -= a(i, j) * span;
      }
    }
    return total;
  }
};

template <class Int>
Integer run_scan(std::span<const HalfSpace> ineqs, const IntegerBox& box) {
  Scan<Int> scan(ineqs, box);
  std::uint64_t lines = 1;
  for (std::size_t j : scan.outer) lines *= static_cast<std::uint64_t>(to_count<Int>(scan.high[j] - scan.low[j])) + 1;
  const std::int64_t blocks = static_cast<std::int64_t>((lines + kLinesPerBlock - 1) / kLinesPerBlock);
  std::int64_t count = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : count)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::uint64_t begin = static_cast<std::uint64_t>(b) * kLinesPerBlock;
    count += scan.count_lines(begin, std::min(lines, begin + kLinesPerBlock));
  }
  return Integer(static_cast<long>(count));
}

bool fits_fast_path(std::span<const HalfSpace> ineqs, const IntegerBox& box) {
  Integer reach = 0;
  for (std::size_t j = 0; j < box.dim(); ++j) {
    const Integer lo = abs(box.low[j]), hi = abs(box.high[j]);
    if (lo > reach) reach = lo;
    if (hi > reach) reach = hi;
  }
  if (reach >= kInt64Headroom) return false;
  for (const auto& h : ineqs) {
    Integer bound = abs(h.constant);
    for (const auto& a : h.normal) bound += 2 * abs(a) * (reach + 1);
    if (bound >= kInt64Headroom) return false;
  }
  return true;
}

void check_shape(std::span<const HalfSpace> ineqs, const IntegerBox& box) {
  if (box.low.size() != box.high.size()) throw PreconditionError("box bounds of different lengths");
  for (const auto& h : ineqs)
    if (h.normal.size() != box.dim()) throw PreconditionError("inequality length does not match box");
}

}  // namespace

Integer IntegerBox::size() const {
  Integer n = 1;
  for (std::size_t j = 0; j < dim(); ++j) {
    if (high[j] < low[j]) return 0;
    n *= high[j] - low[j] + 1;
  }
  return n;
}

Integer count_in_box(std::span<const HalfSpace> inequalities, const IntegerBox& box) {
  check_shape(inequalities, box);
  const Integer size = box.size();
  if (size == 0) return 0;
  if (size > kMaxBoxPoints) throw PreconditionError("box too large for enumeration");
  if (box.dim() == 0) {
    for (const auto& h : inequalities)
      if (h.constant < 0) return 0;
    return 1;
  }
  if (fits_fast_path(inequalities, box)) return run_scan<std::int64_t>(inequalities, box);
  return run_scan<Integer>(inequalities, box);
}

Integer count_in_box_serial(std::span<const HalfSpace> inequalities, const IntegerBox& box) {
  check_shape(inequalities, box);
  if (box.size() == 0) return 0;
  const std::size_t d = box.dim();
  IntVector x = box.low;
  Integer count = 0;
  while (true) {
    bool inside = true;
    for (const auto& h : inequalities) {
      Integer s = h.constant;
      for (std::size_t j = 0; j < d; ++j) s += h.normal[j] * x[j];
      if (s < 0) {
        inside = false;
        break;
      }
    }
    if (inside) ++count;
    std::size_t k = 0;
    while (k < d && x[k] == box.high[k]) {
      x[k] = box.low[k];
      ++k;
    }
    if (k == d) break;
    ++x[k];
  }
  return count;
}

void set_thread_count(int threads) {
  if (threads < 1) throw PreconditionError("thread count must be at least 1");
  omp_set_num_threads(threads);
}

int thread_count() { return omp_get_max_threads(); }

}  // namespace ehrstar::kernels
