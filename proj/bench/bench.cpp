// Serial reference vs OpenMP kernels on fixed workloads.
//   ehrstar_bench [threads]
// The counting reference tests every point while the kernel resolves whole
// lines, so that ratio mixes algorithm and threads; run with 1 and with N
// threads to separate the two.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "ehrstar/ehrhart.hpp"
#include "ehrstar/kernels.hpp"

using namespace ehrstar;

namespace {

double seconds(const std::function<void()>& fn, int reps = 3) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, double serial, double parallel, bool agree) {
  std::printf("%-36s reference %9.4f s   kernel %9.4f s   ratio %8.2fx   %s\n", name, serial, parallel,
              serial / parallel, agree ? "agree" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) kernels::set_thread_count(std::atoi(argv[1]));
  std::printf("threads: %d\n", kernels::thread_count());

  {
    const LatticeSimplex s = make_random_simplex(4, 6, 7);
    const Integer n = 4;
    const auto ineq = barycentric_inequalities(s, n);
    const auto box = dilated_bounding_box(s.polytope(), n);
    Integer a, b;
    const double ts = seconds([&] { a = kernels::count_in_box_serial(ineq, box); }, 1);
    const double tp = seconds([&] { b = kernels::count_in_box(ineq, box); });
    std::string name = "count_in_box (" + box.size().get_str() + " pts)";
    row(name.c_str(), ts, tp, a == b);
  }
  {
    const LatticeSimplex s = make_higashitani(3, 400000, 3, 400001);
    const EngineLimits limits{Integer(1'000'000'000), Integer(10'000'000)};
    const auto sys = residue_system(s, limits);
    std::vector<std::int64_t> a, b;
    const double ts = seconds([&] { a = kernels::height_histogram_serial(sys); }, 1);
    const double tp = seconds([&] { b = kernels::height_histogram(sys); });
    std::string name = "height_histogram (" + std::to_string(sys.group_order()) + " residues)";
    row(name.c_str(), ts, tp, a == b);
  }
  return 0;
}
