#include "ehrstar/star_basis.hpp"

#include <string>

#include "ehrstar/errors.hpp"

namespace ehrstar {

const char* to_string(Provenance p) { return p == Provenance::Polytope ? "polytope" : "raw"; }

HStarVector HStarVector::from_polytope(IntVector entries) {
  if (entries.empty()) throw PreconditionError("h*-vector needs at least one entry");
  if (entries[0] != 1) throw PreconditionError("polytope h*-vector must have h*_0 = 1");
  for (std::size_t k = 0; k < entries.size(); ++k)
    if (entries[k] < 0) throw PreconditionError("polytope h*-vector has a negative entry at " + std::to_string(k));
  return HStarVector(std::move(entries), Provenance::Polytope);
}

HStarVector HStarVector::raw(IntVector entries) {
  if (entries.empty()) throw PreconditionError("h*-vector needs at least one entry");
  return HStarVector(std::move(entries), Provenance::Raw);
}

FStarVector FStarVector::from_polytope(IntVector entries) {
  if (entries.empty()) throw PreconditionError("f*-vector needs at least one entry");
  for (std::size_t k = 0; k < entries.size(); ++k)
    if (entries[k] < 0) throw PreconditionError("polytope f*-vector has a negative entry at " + std::to_string(k));
  return FStarVector(std::move(entries), 1, Provenance::Polytope);
}

FStarVector FStarVector::raw(IntVector entries, Integer minus_one) {
  if (entries.empty()) throw PreconditionError("f*-vector needs at least one entry");
  return FStarVector(std::move(entries), std::move(minus_one), Provenance::Raw);
}

FStarVector f_from_h(const HStarVector& h) {
  const long d = static_cast<long>(h.dim());
  IntVector f(h.dim() + 1);
  for (long k = 0; k <= d; ++k) {
    Integer s = 0;
    for (long j = 0; j <= std::min(k + 1, d); ++j) s += binomial(d - j + 1, k - j + 1) * h[j];
    f[k] = s;
  }
  if (h.provenance() == Provenance::Polytope) return FStarVector::from_polytope(std::move(f));
  return FStarVector::raw(std::move(f), h[0]);
}

HStarVector h_from_f(const FStarVector& f) {
  const long d = static_cast<long>(f.dim());
  auto entry = [&f](long j) -> const Integer& { return j < 0 ? f.minus_one() : f[static_cast<std::size_t>(j)]; };
  IntVector h(f.dim() + 1);
  for (long k = 0; k <= d; ++k) {
    Integer s = 0;
    for (long j = -1; j <= k - 1; ++j) {
      Integer term = binomial(d - j, k - j - 1) * entry(j);
      if ((k - j - 1) % 2 == 0)
        s += term;
      else
        s -= term;
    }
    h[k] = s;
  }
  if (f.provenance() == Provenance::Polytope) return HStarVector::from_polytope(std::move(h));
  return HStarVector::raw(std::move(h));
}

Integer eval_ehrhart(const HStarVector& h, long n) {
  const long d = static_cast<long>(h.dim());
  Integer s = 0;
  for (long k = 0; k <= d; ++k) s += h[k] * binomial(n + d - k, d);
  return s;
}

Integer eval_ehrhart(const FStarVector& f, long n) {
  Integer s = 0;
  for (long k = 0; k <= static_cast<long>(f.dim()); ++k) s += f[k] * binomial(n - 1, k);
  return s;
}

bool hstar_poly_identity_check(const HStarVector& h, const FStarVector& f) {
  if (h.dim() != f.dim()) throw PreconditionError("h* and f* of different dimension");
  const std::size_t d = h.dim();
  IntVector rhs(d + 2, 0);
  for (std::size_t k = 0; k <= d + 1; ++k) {
    const Integer& coeff = k == 0 ? f.minus_one() : f[k - 1];
    if (sgn(coeff) == 0) continue;
    // z^k (1 - z)^(d - k + 1)
    const long e = static_cast<long>(d - k + 1);
    for (long i = 0; i <= e; ++i) {
      Integer term = coeff * binomial(e, i);
      if (i % 2 == 0)
        rhs[k + i] += term;
      else
        rhs[k + i] -= term;
    }
  }
  if (sgn(rhs[d + 1]) != 0) return false;
  for (std::size_t k = 0; k <= d; ++k)
    if (rhs[k] != h[k]) return false;
  return true;
}

std::size_t degree_of(const HStarVector& h) {
  for (std::size_t k = h.dim() + 1; k-- > 0;)
    if (sgn(h[k]) != 0) return k;
  throw PreconditionError("degree of the zero h*-vector");
}

std::optional<std::size_t> gorenstein_index(const HStarVector& h) {
  const std::size_t s = degree_of(h);
  for (std::size_t j = 0; j <= s; ++j)
    if (h[j] != h[s - j]) return std::nullopt;
  return h.dim() + 1 - s;
}

SeriesForm series_numerator(const HStarVector& h) { return {h.entries(), h.dim() + 1}; }

bool f_star_palindromic(const FStarVector& f) {
  const std::size_t n = f.dim() + 2;
  auto at = [&f](std::size_t i) -> const Integer& { return i == 0 ? f.minus_one() : f[i - 1]; };
  for (std::size_t i = 0; i < n / 2; ++i)
    if (at(i) != at(n - 1 - i)) return false;
  return true;
}

}  // namespace ehrstar
