#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "ehrstar/lattice.hpp"

namespace ehrstar::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kParseError = 2,
  kInfeasible = 3,
  kBudgetExhausted = 4,
};

/// Runs the tool with argv[1..] in `args`. Never touches std::cout/cerr.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Named generators:
///   cube-<d>-<low>-<high>          e.g. cube-2--1-1 is [-1,1]^2
///   unimodular-<d>
///   higashitani-15
///   higashitani-<a>-<v>-<b>-<m>    w = (1^a, v^b, m)
///   random-<d>-<bound>[-<seed>]    seed falls back to `seed`
///   pyr:<name>, pyr-<n>:<name>
/// Throws ParseError on an unknown name.
LatticePolytope builtin_polytope(const std::string& name, std::uint64_t seed = 0);

struct SelftestOptions {
  bool quick = false;
  /// Test hook: corrupts one expected value so the suite must fail.
  bool inject_fault = false;
  std::uint64_t seed = 0;
};

/// Golden suite; prints one PASS/FAIL line per check, returns kOk or kCheckFailed.
int selftest(const SelftestOptions& opts, std::ostream& out);

}  // namespace ehrstar::cli
