#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ehrstar/integer.hpp"
#include "ehrstar/lattice.hpp"

// Enumeration kernels. Each kernel has an OpenMP implementation used by the
// engine and a plain serial implementation kept as the reference for tests
// and the benchmark. Results never depend on the thread count.
namespace ehrstar::kernels {

struct IntegerBox {
  IntVector low;
  IntVector high;

  std::size_t dim() const { return low.size(); }
  /// Number of lattice points; zero if any side is empty.
  Integer size() const;
};

/// Lattice points x in the box with constant + normal . x >= 0 for every
/// inequality. Each line along the widest coordinate is resolved by
/// intersecting intervals rather than testing points.
Integer count_in_box(std::span<const HalfSpace> inequalities, const IntegerBox& box);

/// Reference: tests every point of the box, single-threaded.
Integer count_in_box_serial(std::span<const HalfSpace> inequalities, const IntegerBox& box);

/// The finite group Z^n / L written as a product of cyclic factors, with
/// each generator's image on the barycentric numerators modulo `modulus`.
/// A residue r = (r_0, ..., r_{k-1}), 0 <= r_j < orders[j], has numerators
/// sum_j r_j * steps[j] (mod modulus), and its height is their sum divided
/// by modulus.
struct ResidueSystem {
  std::int64_t modulus = 1;
  std::size_t coords = 0;
  std::vector<std::int64_t> orders;
  std::vector<std::vector<std::int64_t>> steps;

  std::int64_t group_order() const;
};

/// histogram[h] = number of residues of height h, for h in 0..coords-1.
std::vector<std::int64_t> height_histogram(const ResidueSystem& system);

/// Reference: recomputes every residue's numerators from scratch.
std::vector<std::int64_t> height_histogram_serial(const ResidueSystem& system);

/// Sets the OpenMP thread count used by the parallel kernels (>= 1).
void set_thread_count(int threads);
int thread_count();

}  // namespace ehrstar::kernels
