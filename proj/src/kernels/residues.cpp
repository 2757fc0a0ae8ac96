#include <omp.h>

#include <algorithm>
#include <stdexcept>

#include "ehrstar/errors.hpp"
#include "ehrstar/kernels.hpp"

namespace ehrstar::kernels {

namespace {

constexpr std::int64_t kResiduesPerBlock = 1 << 14;

void check_system(const ResidueSystem& sys) {
  if (sys.modulus < 1) throw PreconditionError("residue modulus must be positive");
  if (sys.steps.size() != sys.orders.size()) throw PreconditionError("one step vector per cyclic factor");
  for (const auto& s : sys.steps)
    if (s.size() != sys.coords) throw PreconditionError("step vector length mismatch");
  for (auto o : sys.orders)
    if (o < 1) throw PreconditionError("cyclic factor orders must be positive");
}

inline std::int64_t reduce(__int128 v, std::int64_t mod) {
  auto r = static_cast<std::int64_t>(v % mod);
  return r < 0 ? r + mod : r;
}

std::size_t height_of(const std::vector<std::int64_t>& numerators, std::int64_t mod) {
  __int128 sum = 0;
  for (auto y : numerators) sum += y;
  if (sum % mod != 0) throw std::logic_error("residue height is not integral");
  return static_cast<std::size_t>(sum / mod);
}

}  // namespace

std::int64_t ResidueSystem::group_order() const {
  std::int64_t n = 1;
  for (auto o : orders) n *= o;
  return n;
}

std::vector<std::int64_t> height_histogram(const ResidueSystem& sys) {
  check_system(sys);
  const std::int64_t mod = sys.modulus;
  const std::size_t k = sys.orders.size();
  const std::int64_t total = sys.group_order();

  // wrap[j] = steps[j] * (1 - orders[j]) mod modulus: applied when r_j rolls over.
  std::vector<std::vector<std::int64_t>> wrap(k, std::vector<std::int64_t>(sys.coords));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < sys.coords; ++i)
      wrap[j][i] = reduce(static_cast<__int128>(sys.steps[j][i]) * (1 - sys.orders[j]), mod);

  std::vector<std::int64_t> histogram(sys.coords, 0);
  const std::int64_t blocks = (total + kResiduesPerBlock - 1) / kResiduesPerBlock;

#pragma omp parallel
  {
    std::vector<std::int64_t> local(sys.coords, 0);
    std::vector<std::int64_t> r(k), y(sys.coords);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < blocks; ++b) {
      const std::int64_t begin = b * kResiduesPerBlock;
      const std::int64_t end = std::min(total, begin + kResiduesPerBlock);
      std::int64_t rest = begin;
      for (std::size_t j = 0; j < k; ++j) {
        r[j] = rest % sys.orders[j];
        rest /= sys.orders[j];
      }
      for (std::size_t i = 0; i < sys.coords; ++i) {
        __int128 acc = 0;
        for (std::size_t j = 0; j < k; ++j) acc += static_cast<__int128>(r[j]) * sys.steps[j][i];
        y[i] = reduce(acc, mod);
      }
      for (std::int64_t idx = begin; idx < end; ++idx) {
        std::int64_t sum = 0;
        for (auto v : y) sum += v;
        ++local[static_cast<std::size_t>(sum / mod)];
        for (std::size_t j = 0; j < k; ++j) {
          const bool rolls = ++r[j] == sys.orders[j];
          const auto& delta = rolls ? wrap[j] : sys.steps[j];
          for (std::size_t i = 0; i < sys.coords; ++i) {
            y[i] += delta[i];
            if (y[i] >= mod) y[i] -= mod;
          }
          if (!rolls) break;
          r[j] = 0;
        }
      }
    }
#pragma omp critical
    for (std::size_t h = 0; h < sys.coords; ++h) histogram[h] += local[h];
  }
  return histogram;
}

std::vector<std::int64_t> height_histogram_serial(const ResidueSystem& sys) {
  check_system(sys);
  const std::size_t k = sys.orders.size();
  std::vector<std::int64_t> histogram(sys.coords, 0);
  std::vector<std::int64_t> r(k, 0), y(sys.coords);
  while (true) {
    for (std::size_t i = 0; i < sys.coords; ++i) {
      __int128 acc = 0;
      for (std::size_t j = 0; j < k; ++j) acc += static_cast<__int128>(r[j]) * sys.steps[j][i];
      y[i] = reduce(acc, sys.modulus);
    }
    const std::size_t h = height_of(y, sys.modulus);
    if (h >= sys.coords) throw std::logic_error("residue height out of range");
    ++histogram[h];
    std::size_t j = 0;
    while (j < k && ++r[j] == sys.orders[j]) r[j++] = 0;
    if (j == k) break;
  }
  return histogram;
}

}  // namespace ehrstar::kernels
