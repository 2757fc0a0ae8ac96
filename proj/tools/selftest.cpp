#include <chrono>
#include <functional>
#include <random>
#include <string>

#include "cli.hpp"
#include "ehrstar/audit.hpp"
#include "ehrstar/ehrhart.hpp"
#include "ehrstar/search.hpp"

namespace ehrstar::cli {

namespace {

IntVector ints(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Returns an empty string on success, otherwise what went wrong.
using Check = std::function<std::string()>;

std::string expect(bool ok, const std::string& what) { return ok ? std::string() : what; }

}  // namespace

int selftest(const SelftestOptions& opts, std::ostream& out) {
  const long fault = opts.inject_fault ? 1 : 0;
  std::vector<std::pair<std::string, Check>> checks;

  checks.emplace_back("cube [-1,1]^2", [&] {
    const HStarVector h = h_star_of(make_cube(2, -1, 1), {}, HStarRoute::Interpolation);
    const CountProfile prof = count_profile(make_cube(2, -1, 1));
    if (prof.counts != ints({1, 9, 25, 49})) return std::string("ehr values");
    if (!(h.entries() == ints({1, 6, 1}))) return std::string("h*");
    return expect(f_from_h(h).entries() == ints({9, 16, 8 + fault}), "f*");
  });

  checks.emplace_back("unimodular simplices", [&] {
    const std::size_t box_max = opts.quick ? 6 : 10;
    const std::size_t count_max = opts.quick ? 4 : 6;
    for (std::size_t d = 1; d <= box_max; ++d) {
      IntVector want;
      for (std::size_t k = 0; k <= d; ++k) want.push_back(binomial(static_cast<long>(d + 1), static_cast<long>(k + 1)));
      const LatticePolytope p = make_unimodular_simplex(d).polytope();
      if (!(f_from_h(h_star_of(p, {}, HStarRoute::BoxPoints)).entries() == want))
        return "box points, d = " + std::to_string(d);
      if (d <= count_max && !(f_star_from_profile(count_profile(p)).entries() == want))
        return "counting, d = " + std::to_string(d);
    }
    return std::string();
  });

  checks.emplace_back("higashitani d=15", [&] {
    const HStarVector h = h_star_of(make_higashitani(7, 131, 7, 132).polytope(), {}, HStarRoute::BoxPoints);
    if (!(h.entries() == ints({1, 0, 0, 0, 0, 0, 0, 0, 131, 0, 0, 0, 0, 0, 0, 0}))) return std::string("h*");
    const IntVector f = ints({16, 120, 560, 1820, 4368, 8008, 11440, 13001, 12488, 11676, 11704, 10990, 7896, 3788,
                              1064, 132});
    if (!(f_from_h(h).entries() == f)) return std::string("f*");
    const AuditReport r = full_audit(h);
    if (r.unimodality.unimodal || r.unimodality.first_dip != 9u) return std::string("unimodality");
    return expect(r.all_hold(), "audit checks");
  });

  checks.emplace_back("binomial difference lemma", [&] {
    const long n_max = opts.quick ? 20 : 40;
    for (long n = 1; n <= n_max; ++n)
      for (long j = 1; j <= n; ++j)
        for (long k = 1; k <= n + 1 - j; ++k)
          if (n != 2 * k - 1 && !check_binom_diff_lemma(n, k, j))
            return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " j=" + std::to_string(j);
    return std::string();
  });

  checks.emplace_back("h*/f* round trips", [&] {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<long> entry(-1000, 1000);
    std::uniform_int_distribution<std::size_t> dim(0, 20);
    const int trials = opts.quick ? 200 : 2000;
    for (int t = 0; t < trials; ++t) {
      IntVector e(dim(rng) + 1);
      for (auto& x : e) x = entry(rng);
      const HStarVector h = HStarVector::raw(e);
      const FStarVector f = f_from_h(h);
      if (!(h_from_f(f) == h) || !hstar_poly_identity_check(h, f)) return "trial " + std::to_string(t);
    }
    return std::string();
  });

  checks.emplace_back("search recall d=15", [&] {
    SpikePattern p{15, {{8, 8}, {2, 200}}, std::nullopt};
    const SearchResult r = search_nonunimodal(p, 1'000'000);
    for (const auto& c : r.candidates)
      if (c.value == 131) return std::string();
    return std::string("131 missing");
  });

  bool all = true;
  for (const auto& [name, check] : checks) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = check();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    all = all && problem.empty();
    out << (problem.empty() ? "PASS " : "FAIL ") << name << " (" << static_cast<long>(ms) << " ms)";
    if (!problem.empty()) out << ": " << problem;
    out << '\n';
  }
  out << (all ? "selftest: all checks passed" : "selftest: FAILED") << '\n';
  return all ? kOk : kCheckFailed;
}

}  // namespace ehrstar::cli
