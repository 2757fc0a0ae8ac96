#include "ehrstar/audit.hpp"

#include <algorithm>
#include <string>

#include "ehrstar/errors.hpp"

namespace ehrstar {

namespace {

CheckResult not_applicable(const char* name, std::string why) {
  return {name, true, false, std::nullopt, std::move(why)};
}

CheckResult pass(const char* name) { return {name, true, true, std::nullopt, {}}; }

CheckResult fail(const char* name, std::size_t witness, std::string note = {}) {
  return {name, false, true, witness, std::move(note)};
}

// Strict decrease f_{k-1} > f_k for k in [first, d].
CheckResult strict_tail(const char* name, const FStarVector& f, std::size_t first) {
  for (std::size_t k = std::max<std::size_t>(first, 1); k <= f.dim(); ++k)
    if (!(f[k - 1] > f[k])) return fail(name, k);
  return pass(name);
}

Integer range_sum(const HStarVector& h, std::size_t from, std::size_t to) {
  Integer s = 0;
  for (std::size_t j = from; j <= std::min(to, h.dim()); ++j) s += h[j];
  return s;
}

}  // namespace

Unimodality unimodality(const FStarVector& f) {
  const std::size_t d = f.dim();
  std::size_t i = 0;
  while (i < d && f[i] <= f[i + 1]) ++i;
  while (i < d && f[i] >= f[i + 1]) ++i;
  Unimodality u;
  if (i < d) {
    u.unimodal = false;
    u.first_dip = i;
    return u;
  }
  std::size_t peak = 0;
  for (std::size_t k = 1; k <= d; ++k)
    if (f[k] > f[peak]) peak = k;
  u.peak = peak;
  return u;
}

CheckResult check_first_half(const FStarVector& f) {
  using namespace check_names;
  const std::size_t d = f.dim();
  if (d < 2) return not_applicable(kFirstHalf, "needs d >= 2");
  const std::size_t m = d / 2;
  for (std::size_t k = 1; k < m; ++k)
    if (!(f[k - 1] < f[k])) return fail(kFirstHalf, k);
  if (!(f[m - 1] <= f[m])) return fail(kFirstHalf, m);
  return pass(kFirstHalf);
}

CheckResult check_last_quarter(const FStarVector& f) {
  using namespace check_names;
  const std::size_t d = f.dim();
  if (d < 2) return not_applicable(kLastQuarter, "needs d >= 2");
  return strict_tail(kLastQuarter, f, 3 * d / 4 + 1);
}

CheckResult check_mirror(const FStarVector& f) {
  using namespace check_names;
  const std::size_t d = f.dim();
  if (d < 3) return not_applicable(kMirror, "needs d >= 3");
  for (std::size_t k = 0; 2 * k + 3 <= d; ++k)
    if (!(f[k] <= f[d - 1 - k])) return fail(kMirror, k);
  return pass(kMirror);
}

CheckResult check_endpoint_min(const FStarVector& f) {
  using namespace check_names;
  const Integer& low = std::min(f[0], f[f.dim()]);
  for (std::size_t k = 0; k <= f.dim(); ++k)
    if (f[k] < low) return fail(kEndpointMin, k);
  return pass(kEndpointMin);
}

CheckResult check_gorenstein_range(const FStarVector& f, std::optional<std::size_t> g) {
  using namespace check_names;
  if (!g) return not_applicable(kGorensteinTail, "h*-vector is not symmetric (not Gorenstein)");
  const std::size_t d = f.dim();
  if (*g < 1 || *g > d + 1) throw PreconditionError("Gorenstein index out of range");
  const std::size_t twice_start = d + 1 + (d + 1 - *g) / 2;
  return strict_tail(kGorensteinTail, f, (twice_start + 1) / 2);
}

CheckResult check_degree_range(const FStarVector& f, std::size_t s) {
  using namespace check_names;
  if (s == 0) return not_applicable(kDegreeTail, "degree 0 (unimodular simplex) is excluded");
  return strict_tail(kDegreeTail, f, (f.dim() + s + 1) / 2);
}

CheckResult check_hibi(const HStarVector& h) {
  using namespace check_names;
  const std::size_t d = h.dim();
  if (d < 2) return not_applicable(kHibi, "needs d >= 2");
  for (std::size_t m = 0; m < d / 2; ++m)
    if (range_sum(h, 0, m + 1) < range_sum(h, d - m, d)) return fail(kHibi, m);
  return pass(kHibi);
}

CheckResult check_stapledon_instance(const HStarVector& h) {
  using namespace check_names;
  if (h.dim() != 13) return not_applicable(kStapledonD13, "instance only stated for d = 13");
  if (range_sum(h, 1, 6) < range_sum(h, 7, 13)) return fail(kStapledonD13, 7);
  return pass(kStapledonD13);
}

CheckResult check_peak_window(const FStarVector& f, std::size_t s) {
  using namespace check_names;
  if (s == 0) return not_applicable(kPeakWindow, "needs degree s >= 1");
  const long d = static_cast<long>(f.dim());
  const long sl = static_cast<long>(s);
  if (d < 2 * sl * sl - 2 * sl - 2) return not_applicable(kPeakWindow, "needs d >= 2s^2 - 2s - 2");
  const Unimodality u = unimodality(f);
  if (!u.unimodal) return fail(kPeakWindow, *u.first_dip, "not unimodal");
  const std::size_t lo = f.dim() / 2;
  const std::size_t hi = (f.dim() + s + 1) / 2 - 1;
  const Integer& top = f[*u.peak];
  for (std::size_t k = lo; k <= std::min(hi, f.dim()); ++k)
    if (f[k] == top) return pass(kPeakWindow);
  return fail(kPeakWindow, *u.peak, "peak outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

CheckResult check_degree5_unimodal(const FStarVector& f, std::size_t s) {
  using namespace check_names;
  if (s > 5) return not_applicable(kLowDegreeUnimodal, "degree exceeds 5");
  const Unimodality u = unimodality(f);
  if (!u.unimodal) return fail(kLowDegreeUnimodal, *u.first_dip);
  return pass(kLowDegreeUnimodal);
}

CheckResult check_low_dim_unimodal(const FStarVector& f) {
  using namespace check_names;
  if (f.dim() < 1 || f.dim() > 13) return not_applicable(kLowDimUnimodal, "needs 1 <= d <= 13");
  const Unimodality u = unimodality(f);
  if (!u.unimodal) return fail(kLowDimUnimodal, *u.first_dip);
  return pass(kLowDimUnimodal);
}

bool check_binom_diff_lemma(long n, long k, long j) {
  if (n < 1 || k < 1 || j < 1) throw PreconditionError("n, k, j must be positive");
  if (k > n + 1 - j) throw PreconditionError("requires k <= n + 1 - j");
  if (n == 2 * k - 1) throw PreconditionError("requires n != 2k - 1");
  const Integer outer = abs(binomial(n, k) - binomial(n, k - 1));
  const Integer inner = abs(binomial(n - j, k) - binomial(n - j, k - 1));
  return outer >= inner;
}

bool AuditReport::all_hold() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return !r.applicable || r.holds; });
}

AuditReport full_audit(const HStarVector& h) {
  AuditReport r;
  r.dim = h.dim();
  r.h_star = h;
  r.f_star = f_from_h(h);
  r.provenance = h.provenance();
  r.degree = degree_of(h);
  r.gorenstein_index = gorenstein_index(h);
  const FStarVector& f = r.f_star;

  r.results = {
      check_first_half(f),
      check_last_quarter(f),
      check_mirror(f),
      check_endpoint_min(f),
      check_gorenstein_range(f, r.gorenstein_index),
      check_degree_range(f, r.degree),
      check_hibi(h),
      check_stapledon_instance(h),
      check_peak_window(f, r.degree),
      check_degree5_unimodal(f, r.degree),
      check_low_dim_unimodal(f),
  };
  r.unimodality = unimodality(f);
  r.symmetric_f_star = f_star_palindromic(f);
  return r;
}

}  // namespace ehrstar
