#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ehrstar {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;

/// Dense row-major integer matrix. Only what the normal-form and
/// elimination code needs; not a general linear algebra type.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Binomial coefficient with the vanishing convention: C(a, b) = 0 for
/// b < 0, and for 0 <= a < b. For negative a the generalized value
/// a(a-1)...(a-b+1)/b! is returned, so C(-1, k) = (-1)^k.
Integer binomial(long a, long b);

/// Floor division and the matching nonnegative remainder for b > 0.
Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);

/// Parses a decimal integer with optional sign; throws ParseError.
Integer parse_integer(std::string_view text);

/// Determinant by fraction-free (Bareiss) elimination.
Integer determinant(IntMatrix m);

/// Rank over Q by fraction-free elimination.
std::size_t rank(IntMatrix m);

/// True if the value fits in a signed 64-bit integer.
bool fits_int64(const Integer& v);

}  // namespace ehrstar
