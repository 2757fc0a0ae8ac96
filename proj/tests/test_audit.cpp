#include <doctest.h>

#include "ehrstar/audit.hpp"
#include "ehrstar/errors.hpp"
#include "ehrstar/search.hpp"
#include "support.hpp"

using namespace ehrstar;
using testsupport::ints;

namespace {

const IntVector kDwH = ints({1, 0, 0, 0, 0, 0, 0, 0, 131, 0, 0, 0, 0, 0, 0, 0});
const FStarVector kDwF = FStarVector::raw(
    ints({16, 120, 560, 1820, 4368, 8008, 11440, 13001, 12488, 11676, 11704, 10990, 7896, 3788, 1064, 132}));
const FStarVector kCube = FStarVector::raw(ints({9, 16, 8}));

FStarVector raw_f(std::initializer_list<long> xs) { return FStarVector::raw(ints(xs)); }

const CheckResult& find(const AuditReport& r, const char* name) {
  for (const auto& c : r.results)
    if (c.name == name) return c;
  throw std::logic_error(name);
}

}  // namespace

TEST_CASE("first half increasing") {
  CHECK(check_first_half(kCube).holds);
  CHECK(check_first_half(kDwF).holds);
  const auto r = check_first_half(raw_f({5, 4, 6, 7, 1}));
  CHECK_FALSE(r.holds);
  CHECK(r.witness == 1u);
}

TEST_CASE("last quarter decreasing") {
  CHECK(check_last_quarter(kDwF).holds);
  CHECK(check_last_quarter(kCube).holds);
  const auto r = check_last_quarter(raw_f({1, 5, 5}));
  CHECK_FALSE(r.holds);
  CHECK(r.witness == 2u);
}

TEST_CASE("mirror bound") {
  CHECK(check_mirror(kDwF).holds);
  CHECK(check_mirror(raw_f({4, 6, 4, 1})).holds);
  const auto r = check_mirror(raw_f({9, 2, 1, 1}));
  CHECK_FALSE(r.holds);
  CHECK(r.witness == 0u);
  CHECK_FALSE(check_mirror(kCube).applicable);
}

TEST_CASE("endpoint minimum") {
  CHECK(check_endpoint_min(kDwF).holds);
  CHECK(check_endpoint_min(kCube).holds);
  const auto r = check_endpoint_min(raw_f({5, 1, 7}));
  CHECK_FALSE(r.holds);
  CHECK(r.witness == 1u);
}

TEST_CASE("Gorenstein tail") {
  CHECK(check_gorenstein_range(kCube, 1).holds);
  CHECK_FALSE(check_gorenstein_range(kDwF, std::nullopt).applicable);
  for (std::size_t d = 1; d <= 10; ++d) {
    IntVector f;
    for (std::size_t k = 0; k <= d; ++k) f.push_back(binomial(static_cast<long>(d + 1), static_cast<long>(k + 1)));
    const auto r = check_gorenstein_range(FStarVector::raw(f), d + 1);
    CHECK(r.applicable);
    CHECK(r.holds);
  }
  CHECK(check_gorenstein_range(raw_f({3, 2}), 1).holds);
  CHECK_FALSE(check_gorenstein_range(raw_f({2, 3}), 1).holds);
}

TEST_CASE("degree tail") {
  CHECK(check_degree_range(kCube, 2).holds);
  CHECK(check_degree_range(kDwF, 8).holds);
  CHECK_FALSE(check_degree_range(raw_f({4, 6, 4, 1}), 0).applicable);
  // Range starts at ceil((15 + 8) / 2) = 12; a bump at index 12 is caught.
  FStarVector bumped = raw_f({16, 120, 560, 1820, 4368, 8008, 11440, 13001, 12488, 11676, 11704, 10990, 11000, 3788,
                              1064, 132});
  const auto r = check_degree_range(bumped, 8);
  CHECK_FALSE(r.holds);
  CHECK(r.witness == 12u);
}

TEST_CASE("Hibi inequalities") {
  CHECK(check_hibi(HStarVector::raw(kDwH)).holds);
  CHECK(check_hibi(HStarVector::raw(ints({1, 6, 1}))).holds);
  const auto r = check_hibi(HStarVector::raw(ints({1, 0, 5})));
  CHECK_FALSE(r.holds);
  CHECK(r.witness == 0u);
}

TEST_CASE("d = 13 instance") {
  CHECK(check_stapledon_instance(HStarVector::raw(ints({1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0}))).holds);
  IntVector unit(14, 0);
  unit[0] = 1;
  CHECK(check_stapledon_instance(HStarVector::raw(unit)).holds);
  IntVector bad = unit;
  bad[13] = 5;
  CHECK_FALSE(check_stapledon_instance(HStarVector::raw(bad)).holds);
  CHECK_FALSE(check_stapledon_instance(HStarVector::raw(kDwH)).applicable);
}

TEST_CASE("unimodality") {
  const auto c = unimodality(kCube);
  CHECK(c.unimodal);
  CHECK(c.peak == 1u);
  const auto dw = unimodality(kDwF);
  CHECK_FALSE(dw.unimodal);
  CHECK(dw.first_dip == 9u);
  const auto flat = unimodality(raw_f({1, 1, 1}));
  CHECK(flat.unimodal);
  CHECK(flat.peak == 0u);
  // A plateau valley: the dip is the last index before the rise.
  const auto plateau = unimodality(raw_f({1, 3, 2, 2, 4}));
  CHECK_FALSE(plateau.unimodal);
  CHECK(plateau.first_dip == 3u);
}

TEST_CASE("peak window") {
  CHECK(check_peak_window(kCube, 2).holds);
  const auto seg = check_peak_window(raw_f({3, 2}), 1);
  CHECK(seg.applicable);
  CHECK(seg.holds);
  CHECK_FALSE(check_peak_window(kDwF, 8).applicable);
}

TEST_CASE("low degree unimodal") {
  IntVector h(17, 0);
  h[0] = 1, h[2] = 3, h[5] = 1;
  const auto f = f_from_h(HStarVector::raw(h));
  CHECK(check_degree5_unimodal(f, 5).holds);
  CHECK(check_degree5_unimodal(raw_f({4, 6, 4, 1}), 0).holds);
  CHECK_FALSE(check_degree5_unimodal(kDwF, 8).applicable);
}

TEST_CASE("binomial difference lemma") {
  CHECK(check_binom_diff_lemma(4, 2, 1));
  CHECK(check_binom_diff_lemma(6, 3, 2));
  for (long k = 1; k <= 20; ++k) CHECK(check_binom_diff_lemma(2 * k, k, 2));
  CHECK_THROWS_AS(check_binom_diff_lemma(5, 3, 1), PreconditionError);
  CHECK_THROWS_AS(check_binom_diff_lemma(4, 4, 2), PreconditionError);
  CHECK_THROWS_AS(check_binom_diff_lemma(0, 1, 1), PreconditionError);
}

TEST_CASE("full audit") {
  const auto cube = full_audit(HStarVector::from_polytope(ints({1, 6, 1})));
  CHECK(cube.all_hold());
  CHECK(cube.unimodality.unimodal);
  CHECK(cube.gorenstein_index == 1u);

  const auto dw = full_audit(HStarVector::from_polytope(kDwH));
  CHECK(dw.all_hold());
  CHECK_FALSE(dw.unimodality.unimodal);
  CHECK(dw.unimodality.first_dip == 9u);
  for (const char* name : {check_names::kFirstHalf, check_names::kLastQuarter, check_names::kMirror,
                           check_names::kEndpointMin, check_names::kHibi}) {
    CHECK(find(dw, name).applicable);
    CHECK(find(dw, name).holds);
  }

  IntVector unit(7, 0);
  unit[0] = 1;
  const auto u = full_audit(HStarVector::from_polytope(unit));
  CHECK_FALSE(find(u, check_names::kDegreeTail).applicable);
  CHECK(u.unimodality.unimodal);
  CHECK(u.symmetric_f_star);

  const auto raw = full_audit(HStarVector::raw(ints({1, 0, 5})));
  CHECK(raw.provenance == Provenance::Raw);
  CHECK_FALSE(raw.all_hold());
}

TEST_CASE("search finds the d = 15 spike and nothing for d = 13") {
  SpikePattern p15{15, {{8, 8}, {2, 200}}, std::nullopt};
  const auto r15 = search_nonunimodal(p15, 1'000'000);
  CHECK_FALSE(r15.budget_exhausted);
  CHECK(r15.family_size == 199);
  bool has131 = false;
  for (const auto& c : r15.candidates) {
    has131 = has131 || c.value == 131;
    CHECK_FALSE(unimodality(c.f_star).unimodal);
    CHECK(check_hibi(c.h_star).holds);
    CHECK(c.h_star.provenance() == Provenance::Raw);
  }
  CHECK(has131);
  for (std::size_t i = 1; i < r15.candidates.size(); ++i) CHECK(r15.candidates[i - 1].value < r15.candidates[i].value);

  SpikePattern p13{13, {{1, 13}, {1, 300}}, std::nullopt};
  CHECK(search_nonunimodal(p13, 1'000'000).candidates.empty());
  SpikePattern p3{3, {{1, 3}, {1, 1000}}, Spike{{1, 3}, {1, 50}}};
  CHECK(search_nonunimodal(p3, 1'000'000).candidates.empty());
}

TEST_CASE("search budget and determinism") {
  SpikePattern p{15, {{1, 15}, {1, 200}}, std::nullopt};
  const auto partial = search_nonunimodal(p, 100);
  CHECK(partial.budget_exhausted);
  CHECK(partial.examined == 100);
  const auto a = search_nonunimodal(p, 10'000);
  const auto b = search_nonunimodal(p, 10'000);
  REQUIRE(a.candidates.size() == b.candidates.size());
  for (std::size_t i = 0; i < a.candidates.size(); ++i) CHECK(a.candidates[i].h_star == b.candidates[i].h_star);
  CHECK_THROWS_AS(search_nonunimodal(p, 0), PreconditionError);
}

TEST_CASE("two-spike search enumerates second positions after the first") {
  SpikePattern p{6, {{1, 6}, {1, 3}}, Spike{{1, 6}, {1, 2}}};
  const auto r = search_nonunimodal(p, 1'000'000);
  // (pos, pos2) pairs with pos < pos2 <= 6: 15, times 3 * 2 values.
  CHECK(r.family_size == 90);
}
