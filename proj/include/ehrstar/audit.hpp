#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ehrstar/star_basis.hpp"

namespace ehrstar {

/// Verdict of one inequality check. When the hypotheses are not met the
/// check is reported as a vacuous pass with applicable = false.
struct CheckResult {
  std::string name;
  bool holds = true;
  bool applicable = true;
  std::optional<std::size_t> witness;
  std::string note;
};

struct Unimodality {
  bool unimodal = true;
  /// Smallest index attaining the maximum, when unimodal.
  std::optional<std::size_t> peak;
  /// Bottom of the first valley when not unimodal: the first index i with
  /// f_i < f_{i+1} occurring after a strict decrease.
  std::optional<std::size_t> first_dip;
};

Unimodality unimodality(const FStarVector& f);

// Check names used in reports.
namespace check_names {
inline constexpr const char* kFirstHalf = "first_half_increasing";
inline constexpr const char* kLastQuarter = "last_quarter_decreasing";
inline constexpr const char* kMirror = "mirror_bound";
inline constexpr const char* kEndpointMin = "endpoint_minimum";
inline constexpr const char* kGorensteinTail = "gorenstein_tail_decreasing";
inline constexpr const char* kDegreeTail = "degree_tail_decreasing";
inline constexpr const char* kHibi = "hibi";
inline constexpr const char* kStapledonD13 = "stapledon_d13";
inline constexpr const char* kPeakWindow = "peak_window";
inline constexpr const char* kLowDegreeUnimodal = "degree_at_most_5_unimodal";
inline constexpr const char* kLowDimUnimodal = "dim_at_most_13_unimodal";
}  // namespace check_names

/// f_0 < f_1 < ... < f_{m-1} <= f_m with m = floor(d/2); needs d >= 2.
CheckResult check_first_half(const FStarVector& f);

/// f_q > f_{q+1} > ... > f_d with q = floor(3d/4); needs d >= 2.
CheckResult check_last_quarter(const FStarVector& f);

/// f_k <= f_{d-1-k} for 0 <= k <= (d-3)/2; needs d >= 3.
CheckResult check_mirror(const FStarVector& f);

/// f_k >= min(f_0, f_d) for all k.
CheckResult check_endpoint_min(const FStarVector& f);

/// f_{k-1} > f_k for (d + 1 + floor((d+1-g)/2)) / 2 <= k <= d.
CheckResult check_gorenstein_range(const FStarVector& f, std::optional<std::size_t> g);

/// f_{k-1} > f_k for ceil((d+s)/2) <= k <= d; not applicable when s = 0.
CheckResult check_degree_range(const FStarVector& f, std::size_t s);

/// sum_{j<=m+1} h_j >= sum_{j>=d-m} h_j for m = 0..floor(d/2)-1.
CheckResult check_hibi(const HStarVector& h);

/// h_1 + ... + h_6 >= h_7 + ... + h_13, only for d = 13.
CheckResult check_stapledon_instance(const HStarVector& h);

/// Unimodal with a peak in [floor(d/2), ceil((d+s)/2) - 1] when
/// d >= 2s^2 - 2s - 2 and s >= 1.
CheckResult check_peak_window(const FStarVector& f, std::size_t s);

/// Unimodal whenever s <= 5.
CheckResult check_degree5_unimodal(const FStarVector& f, std::size_t s);

/// Unimodal whenever 1 <= d <= 13.
CheckResult check_low_dim_unimodal(const FStarVector& f);

/// |C(n,k) - C(n,k-1)| >= |C(n-j,k) - C(n-j,k-1)| for positive j, k, n
/// with k <= n+1-j and n != 2k-1. Throws PreconditionError otherwise.
bool check_binom_diff_lemma(long n, long k, long j);

struct AuditReport {
  std::size_t dim = 0;
  std::size_t degree = 0;
  std::optional<std::size_t> gorenstein_index;
  Provenance provenance = Provenance::Raw;
  HStarVector h_star = HStarVector::raw({1});
  FStarVector f_star = FStarVector::raw({1});
  std::vector<CheckResult> results;
  Unimodality unimodality;
  bool symmetric_f_star = false;

  /// True iff every applicable check holds.
  bool all_hold() const;
};

AuditReport full_audit(const HStarVector& h);

}  // namespace ehrstar
