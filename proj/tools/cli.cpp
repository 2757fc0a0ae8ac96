#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <regex>
#include <sstream>

#include "ehrstar/audit.hpp"
#include "ehrstar/ehrhart.hpp"
#include "ehrstar/errors.hpp"
#include "ehrstar/io.hpp"
#include "ehrstar/kernels.hpp"
#include "ehrstar/search.hpp"

namespace ehrstar::cli {

namespace {

struct Config {
  std::string input;
  std::string builtin;
  std::string format = "text";
  std::string count_cap = "1000000000";
  std::string volume_cap = "10000000";
  int threads = 0;
  std::uint64_t seed = 0;
  std::string route = "auto";
  bool cross_check = false;

  std::size_t dim = 0;
  std::string pos_range;
  std::string val_range = "1:200";
  std::string second_pos_range;
  std::string second_val_range;
  std::uint64_t budget = 10'000'000;

  bool quick = false;
  bool inject_fault = false;
};

std::string join(const IntVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += v[i].get_str();
  }
  return s;
}

std::string index_or_none(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "none"; }

Integer positive_integer(const std::string& text, const char* flag) {
  Integer v = parse_integer(text);
  if (sgn(v) <= 0) throw ParseError(std::string(flag) + " must be positive");
  return v;
}

IntRange parse_range(const std::string& text, const char* flag) {
  static const std::regex re(R"(^\s*(-?\d+)\s*(?::\s*(-?\d+)\s*)?$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw ParseError(std::string(flag) + " expects A:B, got '" + text + "'");
  IntRange r;
  r.low = std::stoll(m[1].str());
  r.high = m[2].matched ? std::stoll(m[2].str()) : r.low;
  if (r.high < r.low) throw ParseError(std::string(flag) + " is empty");
  return r;
}

EngineLimits limits_of(const Config& c) {
  return {positive_integer(c.count_cap, "--count-cap"), positive_integer(c.volume_cap, "--volume-cap")};
}

HStarRoute route_of(const Config& c) {
  if (c.route == "auto") return HStarRoute::Auto;
  if (c.route == "box-points") return HStarRoute::BoxPoints;
  if (c.route == "interpolation") return HStarRoute::Interpolation;
  throw ParseError("unknown route '" + c.route + "'");
}

void apply_threads(const Config& c) {
  int n = c.threads;
  if (n == 0) {
    if (const char* env = std::getenv("EHRSTAR_THREADS"); env && *env) {
      try {
        n = std::stoi(env);
      } catch (const std::exception&) {
        throw ParseError("EHRSTAR_THREADS must be a positive integer");
      }
      if (n < 1) throw ParseError("EHRSTAR_THREADS must be a positive integer");
    }
  }
  if (n < 0) throw ParseError("--threads must be positive");
  if (n > 0) kernels::set_thread_count(n);
}

// Input resolved to either a polytope or a vector document.
struct Subject {
  std::optional<LatticePolytope> polytope;
  std::optional<io::VectorDocument> vectors;
};

Subject load_subject(const Config& c) {
  if (c.input.empty() == c.builtin.empty()) throw ParseError("give exactly one of --input and --builtin");
  Subject s;
  if (!c.builtin.empty()) {
    s.polytope = builtin_polytope(c.builtin, c.seed);
    return s;
  }
  const io::Json doc = io::load_json_file(c.input);
  if (io::is_vector_document(doc))
    s.vectors = io::vectors_from_json(doc);
  else
    s.polytope = io::polytope_from_json(doc);
  return s;
}

HStarVector h_star_of_subject(const Subject& s, const Config& c) {
  if (s.polytope) return h_star_of(*s.polytope, limits_of(c), route_of(c), c.cross_check);
  const io::VectorDocument& v = *s.vectors;
  if (v.h_star) {
    if (v.f_star && !(f_from_h(*v.h_star) == *v.f_star)) throw ParseError("h_star and f_star disagree");
    return *v.h_star;
  }
  return h_from_f(*v.f_star);
}

bool json_mode(const Config& c) { return c.format == "json"; }

int cmd_compute(const Config& c, std::ostream& out) {
  const HStarVector h = h_star_of_subject(load_subject(c), c);
  const FStarVector f = f_from_h(h);
  IntVector ehr;
  for (std::size_t n = 0; n <= h.dim() + 1; ++n) ehr.push_back(eval_ehrhart(h, static_cast<long>(n)));
  const std::size_t degree = degree_of(h);
  const auto g = gorenstein_index(h);
  if (json_mode(c)) {
    io::Json j = io::vectors_to_json(h, f);
    j["ehr"] = io::integers_to_json(ehr);
    j["degree"] = degree;
    j["gorenstein_index"] = g ? io::Json(*g) : io::Json(nullptr);
    out << j.dump() << '\n';
  } else {
    out << "d: " << h.dim() << '\n'
        << "ehr: " << join(ehr) << '\n'
        << "h_star: " << join(h.entries()) << '\n'
        << "f_star: " << join(f.entries()) << '\n'
        << "degree: " << degree << '\n'
        << "gorenstein_index: " << index_or_none(g) << '\n';
  }
  return kOk;
}

int cmd_convert(const Config& c, std::ostream& out) {
  const Subject s = load_subject(c);
  if (!s.vectors) throw ParseError("convert expects a vector file with h_star or f_star");
  const io::VectorDocument& v = *s.vectors;
  const HStarVector h = v.h_star ? *v.h_star : h_from_f(*v.f_star);
  const FStarVector f = v.f_star ? *v.f_star : f_from_h(h);
  if (!(f_from_h(h) == f)) throw ParseError("h_star and f_star disagree");
  if (json_mode(c)) {
    out << io::vectors_to_json(h, f).dump() << '\n';
  } else {
    out << "d: " << h.dim() << '\n' << "h_star: " << join(h.entries()) << '\n' << "f_star: " << join(f.entries());
    if (f.minus_one() != 1) out << " (f_-1 = " << f.minus_one().get_str() << ")";
    out << '\n';
  }
  return kOk;
}

int cmd_audit(const Config& c, std::ostream& out) {
  const AuditReport r = full_audit(h_star_of_subject(load_subject(c), c));
  if (json_mode(c)) {
    out << io::audit_to_json(r).dump() << '\n';
  } else {
    out << "d: " << r.dim << '\n'
        << "provenance: " << to_string(r.provenance) << '\n'
        << "h_star: " << join(r.h_star.entries()) << '\n'
        << "f_star: " << join(r.f_star.entries()) << '\n'
        << "degree: " << r.degree << '\n'
        << "gorenstein_index: " << index_or_none(r.gorenstein_index) << '\n'
        << "unimodal: " << (r.unimodality.unimodal ? "true" : "false") << '\n';
    if (r.unimodality.unimodal)
      out << "peak: " << *r.unimodality.peak << '\n';
    else
      out << "first_dip: " << *r.unimodality.first_dip << '\n';
    for (const auto& chk : r.results) {
      out << "check " << chk.name << ": ";
      if (!chk.applicable)
        out << "n/a (" << chk.note << ")";
      else if (chk.holds)
        out << "pass";
      else
        out << "FAIL at " << *chk.witness << (chk.note.empty() ? "" : " (" + chk.note + ")");
      out << '\n';
    }
    out << "all_hold: " << (r.all_hold() ? "true" : "false") << '\n';
  }
  return r.provenance == Provenance::Polytope && !r.all_hold() ? kCheckFailed : kOk;
}

std::string series_text(const SeriesForm& s) {
  std::string num;
  for (std::size_t k = 0; k < s.numerator.size(); ++k) {
    const Integer& a = s.numerator[k];
    if (a == 0) continue;
    const bool neg = sgn(a) < 0;
    const Integer mag = abs(a);
    if (num.empty())
      num += neg ? "-" : "";
    else
      num += neg ? " - " : " + ";
    if (k == 0 || mag != 1) num += mag.get_str();
    if (k >= 1) num += "z";
    if (k >= 2) num += "^" + std::to_string(k);
  }
  if (num.empty()) num = "0";
  return "(" + num + ") / (1 - z)^" + std::to_string(s.denominator_exponent);
}

int cmd_series(const Config& c, std::ostream& out) {
  const SeriesForm s = series_numerator(h_star_of_subject(load_subject(c), c));
  if (json_mode(c)) {
    io::Json j;
    j["numerator"] = io::integers_to_json(s.numerator);
    j["denominator_exponent"] = s.denominator_exponent;
    out << j.dump() << '\n';
  } else {
    out << series_text(s) << '\n';
  }
  return kOk;
}

int cmd_search(const Config& c, std::ostream& out) {
  if (c.dim < 1) throw ParseError("search needs --dim >= 1");
  if (c.budget == 0) throw ParseError("--budget must be positive");
  SpikePattern p;
  p.dim = c.dim;
  const std::string pos = c.pos_range.empty() ? "1:" + std::to_string(c.dim) : c.pos_range;
  p.first = {parse_range(pos, "--spike-pos-range"), parse_range(c.val_range, "--spike-val-range")};
  if (c.second_pos_range.empty() != c.second_val_range.empty())
    throw ParseError("second spike needs both --second-pos-range and --second-val-range");
  if (!c.second_pos_range.empty())
    p.second = Spike{parse_range(c.second_pos_range, "--second-pos-range"),
                     parse_range(c.second_val_range, "--second-val-range")};

  const SearchResult r = search_nonunimodal(p, c.budget);
  if (json_mode(c)) {
    for (const auto& cand : r.candidates) out << io::candidate_to_json(cand).dump() << '\n';
    io::Json summary;
    summary["summary"] = true;
    summary["d"] = c.dim;
    summary["family_size"] = r.family_size;
    summary["examined"] = r.examined;
    summary["candidates"] = r.candidates.size();
    summary["budget_exhausted"] = r.budget_exhausted;
    summary["partial"] = r.budget_exhausted;
    summary["status"] = kCandidateDisclaimer;
    out << summary.dump() << '\n';
  } else {
    for (const auto& cand : r.candidates) {
      out << "candidate position=" << cand.position << " value=" << cand.value;
      if (cand.second_position) out << " second_position=" << *cand.second_position << " second_value=" << *cand.second_value;
      out << " first_dip=" << cand.first_dip << " f_star: " << join(cand.f_star.entries()) << '\n';
    }
    out << "summary: d=" << c.dim << " family=" << r.family_size << " examined=" << r.examined
        << " candidates=" << r.candidates.size() << (r.budget_exhausted ? " (partial: budget exhausted)" : "") << '\n'
        << "note: " << kCandidateDisclaimer << '\n';
  }
  return r.budget_exhausted ? kBudgetExhausted : kOk;
}

void add_input_options(CLI::App& sub, Config& c) {
  sub.add_option("--input", c.input, "polytope or vector JSON file");
  sub.add_option("--builtin", c.builtin, "named generator, e.g. cube-2--1-1, higashitani-15, pyr:unimodular-3");
  sub.add_option("--route", c.route, "h* route")->check(CLI::IsMember({"auto", "box-points", "interpolation"}));
  sub.add_flag("--cross-check", c.cross_check, "run both h* routes and require agreement");
}

}  // namespace

LatticePolytope builtin_polytope(const std::string& name, std::uint64_t seed) {
  static const std::regex pyr_re(R"(^pyr(?:-(\d+))?:(.+)$)");
  static const std::regex cube_re(R"(^cube-(\d+)-(-?\d+)-(-?\d+)$)");
  static const std::regex unimod_re(R"(^unimodular-(\d+)$)");
  static const std::regex hig_re(R"(^higashitani-(\d+)-(\d+)-(\d+)-(\d+)$)");
  static const std::regex rand_re(R"(^random-(\d+)-(\d+)(?:-(\d+))?$)");
  std::smatch m;
  try {
    if (std::regex_match(name, m, pyr_re)) {
      const std::size_t times = m[1].matched ? std::stoul(m[1].str()) : 1;
      return iterated_pyramid(builtin_polytope(m[2].str(), seed), times);
    }
    if (std::regex_match(name, m, cube_re))
      return make_cube(std::stoul(m[1].str()), parse_integer(m[2].str()), parse_integer(m[3].str()));
    if (std::regex_match(name, m, unimod_re)) return make_unimodular_simplex(std::stoul(m[1].str())).polytope();
    if (name == "higashitani-15") return make_higashitani(7, 131, 7, 132).polytope();
    if (std::regex_match(name, m, hig_re))
      return make_higashitani(std::stoul(m[1].str()), parse_integer(m[2].str()), std::stoul(m[3].str()),
                              parse_integer(m[4].str()))
          .polytope();
    if (std::regex_match(name, m, rand_re)) {
      const std::uint64_t s = m[3].matched ? std::stoull(m[3].str()) : seed;
      return make_random_simplex(std::stoul(m[1].str()), std::stoll(m[2].str()), s).polytope();
    }
  } catch (const PreconditionError& e) {
    throw ParseError("builtin '" + name + "': " + e.what());
  } catch (const std::out_of_range&) {
    throw ParseError("builtin '" + name + "': number out of range");
  }
  throw ParseError("unknown builtin '" + name + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Ehrhart h*- and f*-vectors with exact arithmetic"};
  app.name("ehrstar");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--count-cap", c.count_cap, "largest counting scan (candidate points)");
  app.add_option("--volume-cap", c.volume_cap, "largest normalized volume for box points");
  app.add_option("--threads", c.threads, "worker threads (default: EHRSTAR_THREADS or all cores)");
  app.add_option("--seed", c.seed, "seed for random builtins and selftest");

  auto* compute = app.add_subcommand("compute", "ehr values, h*, f*, degree, Gorenstein index");
  auto* convert = app.add_subcommand("convert", "convert between h* and f* vectors");
  auto* audit = app.add_subcommand("audit", "check the f*-vector inequalities");
  auto* series = app.add_subcommand("series", "Ehrhart series as a rational function");
  for (auto* sub : {compute, convert, audit, series}) add_input_options(*sub, c);

  auto* search = app.add_subcommand("search", "enumerate spiked h*-vectors with nonunimodal f*");
  search->add_option("--dim", c.dim, "dimension d")->required();
  search->add_option("--spike-pos-range", c.pos_range, "positions A:B (default 1:d)");
  search->add_option("--spike-val-range", c.val_range, "values A:B (default 1:200)");
  search->add_option("--second-pos-range", c.second_pos_range, "second spike positions A:B");
  search->add_option("--second-val-range", c.second_val_range, "second spike values A:B");
  search->add_option("--budget", c.budget, "maximum vectors examined");

  auto* self = app.add_subcommand("selftest", "embedded golden suite");
  self->add_flag("--quick", c.quick, "reduced sizes");
  self->add_flag("--inject-fault", c.inject_fault, "corrupt one expected value (test hook)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    apply_threads(c);
    if (compute->parsed()) return cmd_compute(c, out);
    if (convert->parsed()) return cmd_convert(c, out);
    if (audit->parsed()) return cmd_audit(c, out);
    if (series->parsed()) return cmd_series(c, out);
    if (search->parsed()) return cmd_search(c, out);
    return selftest({c.quick, c.inject_fault, c.seed}, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const InfeasibleStrategy& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  }
}

}  // namespace ehrstar::cli
