#pragma once

#include <optional>
#include <vector>

#include "ehrstar/integer.hpp"

namespace ehrstar {

/// Whether a vector came from an actual polytope (invariants enforced) or
/// was supplied raw (search candidates, constructed test vectors).
enum class Provenance { Polytope, Raw };

const char* to_string(Provenance p);

/// Coefficients of ehr(n) in the basis C(n + d - k, d), k = 0..d.
class HStarVector {
 public:
  /// Requires h_0 = 1 and all entries nonnegative.
  static HStarVector from_polytope(IntVector entries);
  static HStarVector raw(IntVector entries);

  std::size_t dim() const { return entries_.size() - 1; }
  const IntVector& entries() const { return entries_; }
  const Integer& operator[](std::size_t k) const { return entries_[k]; }
  Provenance provenance() const { return provenance_; }

  friend bool operator==(const HStarVector& a, const HStarVector& b) { return a.entries_ == b.entries_; }

 private:
  HStarVector(IntVector e, Provenance p) : entries_(std::move(e)), provenance_(p) {}
  IntVector entries_;
  Provenance provenance_ = Provenance::Raw;
};

/// Coefficients of ehr(n) in the basis C(n - 1, k), k = 0..d, plus the
/// prefix entry f_{-1}. For polytopes f_{-1} = 1; a raw h-vector maps to
/// f_{-1} = h_0 so that the two conversions stay mutually inverse.
class FStarVector {
 public:
  static FStarVector from_polytope(IntVector entries);
  static FStarVector raw(IntVector entries, Integer minus_one = 1);

  std::size_t dim() const { return entries_.size() - 1; }
  const IntVector& entries() const { return entries_; }
  const Integer& operator[](std::size_t k) const { return entries_[k]; }
  const Integer& minus_one() const { return minus_one_; }
  Provenance provenance() const { return provenance_; }

  friend bool operator==(const FStarVector& a, const FStarVector& b) {
    return a.entries_ == b.entries_ && a.minus_one_ == b.minus_one_;
  }

 private:
  FStarVector(IntVector e, Integer m, Provenance p)
      : entries_(std::move(e)), minus_one_(std::move(m)), provenance_(p) {}
  IntVector entries_;
  Integer minus_one_ = 1;
  Provenance provenance_ = Provenance::Raw;
};

/// f_k = sum_{j=0}^{k+1} C(d - j + 1, k - j + 1) h_j.
FStarVector f_from_h(const HStarVector& h);

/// h_k = sum_{j=-1}^{k-1} (-1)^{k-j-1} C(d - j, k - j - 1) f_j.
HStarVector h_from_f(const FStarVector& f);

/// ehr(n) = sum_k h_k C(n + d - k, d).
Integer eval_ehrhart(const HStarVector& h, long n);

/// ehr(n) = sum_k f_k C(n - 1, k), with the generalized binomial at n = 0.
Integer eval_ehrhart(const FStarVector& f, long n);

/// Expands sum_{k=0}^{d+1} f_{k-1} z^k (1 - z)^{d-k+1} and compares it
/// coefficientwise with sum_k h_k z^k.
bool hstar_poly_identity_check(const HStarVector& h, const FStarVector& f);

/// Largest k with h_k != 0. Throws PreconditionError on the zero vector.
std::size_t degree_of(const HStarVector& h);

/// g = d + 1 - s when h is symmetric about its degree s, else nullopt.
std::optional<std::size_t> gorenstein_index(const HStarVector& h);

/// Numerator coefficients of the Ehrhart series over (1 - z)^(d + 1).
struct SeriesForm {
  IntVector numerator;
  std::size_t denominator_exponent = 0;
};

SeriesForm series_numerator(const HStarVector& h);

/// True iff (f_{-1}, f_0, ..., f_d) reads the same backwards.
bool f_star_palindromic(const FStarVector& f);

}  // namespace ehrstar
