#include "ehrstar/smith.hpp"

#include <algorithm>

namespace ehrstar {

namespace {

// Row and column operations on the working matrix, mirrored into the
// transforms. Row ops act on left (rows) and left_inverse (columns, inverse op).
struct Reducer {
  SmithForm& f;
  IntMatrix& a() { return f.diagonal; }

  void swap_rows(std::size_t i, std::size_t j) {
    a().swap_rows(i, j);
    f.left.swap_rows(i, j);
    f.left_inverse.swap_cols(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a().swap_cols(i, j);
    f.right.swap_cols(i, j);
  }
  // row_i += q * row_t
  void add_row(std::size_t i, std::size_t t, const Integer& q) {
    for (std::size_t c = 0; c < a().cols(); ++c) a()(i, c) += q * a()(t, c);
    for (std::size_t c = 0; c < f.left.cols(); ++c) f.left(i, c) += q * f.left(t, c);
    for (std::size_t r = 0; r < f.left_inverse.rows(); ++r) f.left_inverse(r, t) -= q * f.left_inverse(r, i);
  }
  // col_j += q * col_t
  void add_col(std::size_t j, std::size_t t, const Integer& q) {
    for (std::size_t r = 0; r < a().rows(); ++r) a()(r, j) += q * a()(r, t);
    for (std::size_t r = 0; r < f.right.rows(); ++r) f.right(r, j) += q * f.right(r, t);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a().cols(); ++c) a()(i, c) = -a()(i, c);
    for (std::size_t c = 0; c < f.left.cols(); ++c) f.left(i, c) = -f.left(i, c);
    for (std::size_t r = 0; r < f.left_inverse.rows(); ++r) f.left_inverse(r, i) = -f.left_inverse(r, i);
  }
};

}  // namespace

IntVector SmithForm::invariant_factors() const {
  IntVector out;
  for (std::size_t i = 0; i < std::min(diagonal.rows(), diagonal.cols()); ++i) out.push_back(diagonal(i, i));
  return out;
}

SmithForm smith_normal_form(IntMatrix input) {
  const std::size_t m = input.rows(), n = input.cols();
  SmithForm f{std::move(input), IntMatrix::identity(m), IntMatrix::identity(m), IntMatrix::identity(n)};
  Reducer red{f};
  IntMatrix& a = f.diagonal;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = m, pc = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (sgn(a(i, j)) != 0 && (pr == m || abs(a(i, j)) < abs(a(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == m) return f;
      red.swap_rows(t, pr);
      red.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(a(i, t)) == 0) continue;
        red.add_row(i, t, -floor_div(a(i, t), a(t, t)));
        clean = clean && sgn(a(i, t)) == 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(a(t, j)) == 0) continue;
        red.add_col(j, t, -floor_div(a(t, j), a(t, t)));
        clean = clean && sgn(a(t, j)) == 0;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            red.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (sgn(a(t, t)) < 0) red.negate_row(t);
  }
  return f;
}

}  // namespace ehrstar
