#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ehrstar/audit.hpp"
#include "ehrstar/star_basis.hpp"

namespace ehrstar {

/// Inclusive integer range.
struct IntRange {
  std::int64_t low = 0;
  std::int64_t high = 0;

  std::int64_t size() const { return high < low ? 0 : high - low + 1; }
};

struct Spike {
  IntRange position;
  IntRange value;
};

/// Sparse h*-vectors (1, 0, ..., N at position p, 0, ...) with an optional
/// second spike placed strictly after the first.
struct SpikePattern {
  std::size_t dim = 0;
  Spike first;
  std::optional<Spike> second;
};

struct SearchCandidate {
  std::int64_t position = 0;
  std::int64_t value = 0;
  std::optional<std::int64_t> second_position;
  std::optional<std::int64_t> second_value;
  HStarVector h_star = HStarVector::raw({1});
  FStarVector f_star = FStarVector::raw({1});
  std::size_t first_dip = 0;
};

struct SearchResult {
  std::vector<SearchCandidate> candidates;
  std::uint64_t examined = 0;
  std::uint64_t family_size = 0;
  /// The budget ran out before the family was exhausted.
  bool budget_exhausted = false;
};

inline constexpr const char* kCandidateDisclaimer =
    "candidate only: passes the Hibi necessary condition; existence of a lattice polytope is not established";

/// Enumerates the family in lexicographic (position, value, second position,
/// second value) order, examining at most `budget` vectors. Keeps those with
/// a nonunimodal f*-vector that satisfy the Hibi inequalities. Output order
/// is the enumeration order regardless of thread count.
SearchResult search_nonunimodal(const SpikePattern& pattern, std::uint64_t budget);

}  // namespace ehrstar
