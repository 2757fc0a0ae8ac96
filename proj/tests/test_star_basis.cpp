#include <doctest.h>

#include <random>

#include "ehrstar/errors.hpp"
#include "ehrstar/star_basis.hpp"
#include "support.hpp"

using namespace ehrstar;
using testsupport::ints;

namespace {

const IntVector kDwH = ints({1, 0, 0, 0, 0, 0, 0, 0, 131, 0, 0, 0, 0, 0, 0, 0});
const IntVector kDwF =
    ints({16, 120, 560, 1820, 4368, 8008, 11440, 13001, 12488, 11676, 11704, 10990, 7896, 3788, 1064, 132});

IntVector unimodular_h(std::size_t d) {
  IntVector h(d + 1, 0);
  h[0] = 1;
  return h;
}

}  // namespace

TEST_CASE("f_from_h examples") {
  CHECK(f_from_h(HStarVector::from_polytope(ints({1, 6, 1}))).entries() == ints({9, 16, 8}));
  CHECK(f_from_h(HStarVector::from_polytope(kDwH)).entries() == kDwF);
  for (std::size_t d = 0; d <= 12; ++d) {
    IntVector want;
    for (std::size_t k = 0; k <= d; ++k) want.push_back(binomial(static_cast<long>(d + 1), static_cast<long>(k + 1)));
    CHECK(f_from_h(HStarVector::from_polytope(unimodular_h(d))).entries() == want);
  }
}

TEST_CASE("h_from_f examples") {
  CHECK(h_from_f(FStarVector::from_polytope(ints({9, 16, 8}))).entries() == ints({1, 6, 1}));
  CHECK(h_from_f(FStarVector::from_polytope(ints({3, 3, 1}))).entries() == ints({1, 0, 0}));
  CHECK(h_from_f(FStarVector::from_polytope(ints({1}))).entries() == ints({1}));
  CHECK(h_from_f(FStarVector::from_polytope(kDwF)).entries() == kDwH);
}

TEST_CASE("f_from_h agrees with forward differences of the Ehrhart polynomial") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> entry(-50, 50);
  for (int t = 0; t < 300; ++t) {
    IntVector h(1 + t % 12);
    for (auto& x : h) x = entry(rng);
    CHECK(f_from_h(HStarVector::raw(h)).entries() == testsupport::f_oracle(h));
  }
  CHECK(testsupport::f_oracle(kDwH) == kDwF);
}

TEST_CASE("round trips on raw vectors") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> entry(-1'000'000, 1'000'000);
  for (int t = 0; t < 500; ++t) {
    IntVector h(1 + t % 21);
    for (auto& x : h) x = entry(rng);
    const HStarVector hv = HStarVector::raw(h);
    const FStarVector fv = f_from_h(hv);
    CHECK(fv.minus_one() == h[0]);
    CHECK(h_from_f(fv) == hv);
    CHECK(hstar_poly_identity_check(hv, fv));
  }
  // An f-vector of length d+1 lies in the image of f_from_h exactly when
  // the alternating sum that would be h_{d+1} vanishes; elsewhere h_from_f
  // drops that component and the reverse trip differs. Here f_{-1} = 1 but
  // the alternating sum of f_0.. is 0.
  const FStarVector off = FStarVector::raw(ints({0, 0, 0}));
  CHECK_FALSE(f_from_h(h_from_f(off)) == off);
}

TEST_CASE("Ehrhart evaluation in both bases") {
  const auto h = HStarVector::from_polytope(ints({1, 6, 1}));
  const auto f = f_from_h(h);
  CHECK(eval_ehrhart(h, 1) == 9);
  CHECK(eval_ehrhart(h, 0) == 1);
  CHECK(eval_ehrhart(HStarVector::from_polytope(kDwH), 1) == 16);
  for (long n = 0; n <= 6; ++n) {
    CHECK(eval_ehrhart(h, n) == (2 * n + 1) * (2 * n + 1));
    CHECK(eval_ehrhart(f, n) == (2 * n + 1) * (2 * n + 1));
  }
}

TEST_CASE("polynomial identity check") {
  CHECK(hstar_poly_identity_check(HStarVector::raw(ints({1, 6, 1})), FStarVector::raw(ints({9, 16, 8}))));
  CHECK(hstar_poly_identity_check(HStarVector::raw(ints({1, 0})), FStarVector::raw(ints({2, 1}))));
  CHECK_FALSE(hstar_poly_identity_check(HStarVector::raw(ints({1, 6, 1})), FStarVector::raw(ints({9, 16, 9}))));
}

TEST_CASE("degree, Gorenstein index, series") {
  CHECK(degree_of(HStarVector::raw(unimodular_h(6))) == 0);
  CHECK(degree_of(HStarVector::raw(ints({1, 6, 1}))) == 2);
  CHECK(degree_of(HStarVector::raw(kDwH)) == 8);
  CHECK_THROWS_AS(degree_of(HStarVector::raw(ints({0, 0}))), PreconditionError);

  CHECK(gorenstein_index(HStarVector::raw(ints({1, 6, 1}))) == 1u);
  CHECK(gorenstein_index(HStarVector::raw(unimodular_h(4))) == 5u);
  CHECK(gorenstein_index(HStarVector::raw(ints({1, 2, 1, 0}))) == 2u);
  CHECK_FALSE(gorenstein_index(HStarVector::raw(kDwH)));
  CHECK_FALSE(gorenstein_index(HStarVector::raw(ints({1, 2, 3}))));

  const SeriesForm s = series_numerator(HStarVector::raw(ints({1, 6, 1})));
  CHECK(s.numerator == ints({1, 6, 1}));
  CHECK(s.denominator_exponent == 3);
  CHECK(series_numerator(HStarVector::raw(ints({1, 0}))).denominator_exponent == 2);
  CHECK(series_numerator(HStarVector::raw(kDwH)).denominator_exponent == 16);
}

TEST_CASE("polytope provenance enforces invariants") {
  CHECK_THROWS_AS(HStarVector::from_polytope(ints({2, 1})), PreconditionError);
  CHECK_THROWS_AS(HStarVector::from_polytope(ints({1, -1})), PreconditionError);
  CHECK_THROWS_AS(FStarVector::from_polytope(ints({3, -1})), PreconditionError);
  CHECK_NOTHROW(HStarVector::raw(ints({2, -1})));
  CHECK(f_from_h(HStarVector::from_polytope(ints({1, 6, 1}))).provenance() == Provenance::Polytope);
  CHECK(f_from_h(HStarVector::raw(ints({1, 6, 1}))).provenance() == Provenance::Raw);
}

TEST_CASE("palindromic f* for unimodular simplices") {
  for (std::size_t d = 0; d <= 8; ++d) CHECK(f_star_palindromic(f_from_h(HStarVector::raw(unimodular_h(d)))));
  CHECK_FALSE(f_star_palindromic(FStarVector::raw(ints({9, 16, 8}))));
}
