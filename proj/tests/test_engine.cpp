#include <doctest.h>

#include <random>

#include "ehrstar/ehrhart.hpp"
#include "ehrstar/errors.hpp"
#include "ehrstar/halfspace.hpp"
#include "ehrstar/kernels.hpp"
#include "support.hpp"

using namespace ehrstar;
using testsupport::ints;

namespace {

std::vector<std::vector<std::int64_t>> to_small(const LatticeSimplex& s) {
  std::vector<std::vector<std::int64_t>> v;
  for (const auto& p : s.vertices()) {
    std::vector<std::int64_t> row;
    for (const auto& x : p) row.push_back(x.get_si());
    v.push_back(row);
  }
  return v;
}

struct ThreadGuard {
  int saved = kernels::thread_count();
  ~ThreadGuard() { kernels::set_thread_count(saved); }
};

}  // namespace

TEST_CASE("count_points examples") {
  CHECK(count_points(make_cube(2, -1, 1), 1) == 9);
  CHECK(count_points(make_unimodular_simplex(2).polytope(), 2) == 6);
  const auto seg = LatticePolytope::from_vertices(1, {ints({0}), ints({2})});
  CHECK(count_points(seg, 3) == 7);
  CHECK_THROWS_AS(count_points(seg, 0), PreconditionError);
  const auto flat = LatticePolytope::from_vertices(2, {ints({0, 0}), ints({2, 2})});
  CHECK_THROWS_AS(count_points(flat, 1), PreconditionError);
}

TEST_CASE("count routes agree with a brute-force scan") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    const std::size_t d = 1 + t % 3;
    const LatticeSimplex s = make_random_simplex(d, 3, rng());
    for (long n = 1; n <= 3; ++n) {
      const Integer want = testsupport::brute_force_simplex_count(to_small(s), n);
      CHECK(count_points_simplex(s, n) == want);
      const auto hp = LatticePolytope::from_halfspaces(d, barycentric_inequalities(s, 1));
      CHECK(count_points_halfspace(hp, n) == want);
    }
  }
}

TEST_CASE("count_points over box, half-space and pyramid inputs") {
  const auto cube = make_cube(3, 0, 2);
  CHECK(count_route(cube) == CountRoute::Box);
  CHECK(count_points(cube, 2) == 125);
  const auto hs = LatticePolytope::from_halfspaces(3, box_halfspaces(*cube.box()));
  CHECK(count_route(hs) == CountRoute::HalfSpace);
  CHECK(count_points(hs, 2) == 125);
  // Square pyramid over [0,1]^2: ehr(1) = 5, ehr(2) = 14.
  const auto egypt = pyramid(make_cube(2, 0, 1));
  CHECK(count_points(egypt, 1) == 5);
  CHECK(count_points(egypt, 2) == 14);
}

TEST_CASE("count caps raise instead of switching route") {
  EngineLimits tight{Integer(10), Integer(10)};
  CHECK_THROWS_AS(count_points(make_unimodular_simplex(3).polytope(), 10, tight), InfeasibleStrategy);
  CHECK_THROWS_AS(box_points_simplex(make_higashitani(7, 131, 7, 132), tight), InfeasibleStrategy);
  CHECK_THROWS_AS(h_star_of(make_cube(2, 0, 1), {}, HStarRoute::BoxPoints), InfeasibleStrategy);
}

TEST_CASE("count profiles and f* from differences") {
  CHECK(count_profile(make_cube(2, -1, 1)).counts == ints({1, 9, 25, 49}));
  CHECK(count_profile(make_unimodular_simplex(1).polytope()).counts == ints({1, 2, 3}));
  CHECK(count_profile(make_unimodular_simplex(2).polytope()).counts == ints({1, 3, 6, 10}));
  CHECK(f_star_from_profile({2, ints({1, 9, 25, 49})}).entries() == ints({9, 16, 8}));
  CHECK(f_star_from_profile({2, ints({1, 3, 6, 10})}).entries() == ints({3, 3, 1}));
  CHECK(f_star_from_profile({0, ints({1, 1})}).entries() == ints({1}));
}

TEST_CASE("box points") {
  for (std::size_t d = 1; d <= 8; ++d) {
    IntVector want(d + 1, 0);
    want[0] = 1;
    CHECK(box_points_simplex(make_unimodular_simplex(d)).heights == want);
  }
  CHECK(box_points_simplex(make_higashitani(7, 131, 7, 132)).heights ==
        ints({1, 0, 0, 0, 0, 0, 0, 0, 131, 0, 0, 0, 0, 0, 0, 0}));
  CHECK(box_points_simplex(LatticeSimplex({ints({0}), ints({2})})).heights == ints({1, 1}));
}

TEST_CASE("h* routes") {
  CHECK(h_star_of(make_cube(2, -1, 1)).entries() == ints({1, 6, 1}));
  IntVector e(16, 0);
  e[0] = 1;
  CHECK(h_star_of(make_unimodular_simplex(15).polytope()).entries() == e);
  const auto hdw = h_star_of(make_higashitani(7, 131, 7, 132).polytope());
  CHECK(hdw.entries() == ints({1, 0, 0, 0, 0, 0, 0, 0, 131, 0, 0, 0, 0, 0, 0, 0}));
  CHECK(hdw.provenance() == Provenance::Polytope);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 15; ++t) {
    const LatticeSimplex s = make_random_simplex(2 + t % 3, 2, rng());
    CHECK_NOTHROW(h_star_of(s.polytope(), {}, HStarRoute::Auto, true));
  }
}

TEST_CASE("adjugate") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const LatticeSimplex s = make_random_simplex(1 + t % 5, 4, rng());
    const IntMatrix w = s.homogenized();
    const IntMatrix prod = adjugate(w) * w;
    const Integer det = determinant(w);
    for (std::size_t i = 0; i < w.rows(); ++i)
      for (std::size_t j = 0; j < w.cols(); ++j) CHECK(prod(i, j) == (i == j ? det : Integer(0)));
  }
}

TEST_CASE("parallel kernels match serial references for any thread count") {
  ThreadGuard guard;
  std::mt19937_64 rng(21);
  for (int t = 0; t < 12; ++t) {
    const LatticeSimplex s = make_random_simplex(2 + t % 4, 3, rng());
    const auto ineq = barycentric_inequalities(s, 3);
    const auto box = dilated_bounding_box(s.polytope(), 3);
    const auto sys = residue_system(s);
    const Integer ref = kernels::count_in_box_serial(ineq, box);
    const auto hist = kernels::height_histogram_serial(sys);
    for (int threads : {1, 2, 3, 8}) {
      kernels::set_thread_count(threads);
      CHECK(kernels::count_in_box(ineq, box) == ref);
      CHECK(kernels::height_histogram(sys) == hist);
      CHECK(box_points_simplex(s).heights == box_points_simplex_serial(s).heights);
    }
  }
}

TEST_CASE("residue system covers the normalized volume") {
  const LatticeSimplex dw = make_higashitani(7, 131, 7, 132);
  const auto sys = residue_system(dw);
  CHECK(sys.group_order() == 132);
  CHECK(sys.modulus == 132);
}

TEST_CASE("empty and degenerate boxes") {
  kernels::IntegerBox box{ints({0, 1}), ints({3, 0})};
  CHECK(box.size() == 0);
  std::vector<HalfSpace> none;
  CHECK(kernels::count_in_box(none, box) == 0);
  kernels::IntegerBox pt{ints({2}), ints({2})};
  CHECK(kernels::count_in_box(none, pt) == 1);
  CHECK(kernels::count_in_box_serial(none, pt) == 1);
}
