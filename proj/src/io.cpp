#include "ehrstar/io.hpp"

#include <fstream>

#include "ehrstar/errors.hpp"

namespace ehrstar::io {

namespace {

IntVector integer_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  IntVector out;
  for (const auto& e : j) out.push_back(integer_from_json(e));
  return out;
}

std::size_t size_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  const auto& v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw ParseError(std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

Json optional_index(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Integer integer_from_json(const Json& j) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_number_float()) throw ParseError("non-integral or oversized number; write big integers as strings");
  throw ParseError("expected an integer, got " + std::string(j.type_name()));
}

Json integer_to_json(const Integer& v) { return v.get_str(); }

Json integers_to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

LatticePolytope polytope_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("polytope document must be a JSON object");
  const std::size_t d = size_field(j, "ambient_dim");
  const bool has_v = j.contains("vertices"), has_h = j.contains("halfspaces");
  if (!has_v && !has_h) throw ParseError("polytope needs 'vertices' or 'halfspaces'");

  try {
    std::optional<LatticePolytope> p;
    if (has_v) {
      const auto& arr = j.at("vertices");
      if (!arr.is_array()) throw ParseError("'vertices' must be an array");
      std::vector<LatticePoint> verts;
      for (const auto& v : arr) verts.push_back(integer_list(v, "vertex"));
      p = LatticePolytope::from_vertices(d, std::move(verts));
    }
    if (has_h) {
      const auto& arr = j.at("halfspaces");
      if (!arr.is_array()) throw ParseError("'halfspaces' must be an array");
      std::vector<HalfSpace> hs;
      for (const auto& row : arr) {
        IntVector r = integer_list(row, "half-space");
        if (r.size() != d + 1) throw ParseError("half-space rows must have ambient_dim + 1 entries");
        hs.push_back({r[0], IntVector(r.begin() + 1, r.end())});
      }
      p = p ? p->with_halfspaces(std::move(hs)) : LatticePolytope::from_halfspaces(d, std::move(hs));
    }
    return *p;
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

Json polytope_to_json(const LatticePolytope& p) {
  Json j;
  j["ambient_dim"] = p.ambient_dim();
  if (p.vertices()) {
    Json verts = Json::array();
    for (const auto& v : *p.vertices()) verts.push_back(integers_to_json(v));
    j["vertices"] = std::move(verts);
  }
  if (p.halfspaces()) {
    Json rows = Json::array();
    for (const auto& h : *p.halfspaces()) {
      IntVector r{h.constant};
      r.insert(r.end(), h.normal.begin(), h.normal.end());
      rows.push_back(integers_to_json(r));
    }
    j["halfspaces"] = std::move(rows);
  }
  return j;
}

bool is_vector_document(const Json& j) { return j.is_object() && (j.contains("h_star") || j.contains("f_star")); }

VectorDocument vectors_from_json(const Json& j) {
  if (!is_vector_document(j)) throw ParseError("vector document needs 'h_star' or 'f_star'");
  VectorDocument doc;
  doc.dim = size_field(j, "d");
  if (j.contains("provenance")) {
    const auto& p = j.at("provenance");
    if (p == "polytope")
      doc.provenance = Provenance::Polytope;
    else if (p != "raw")
      throw ParseError("provenance must be 'polytope' or 'raw'");
  }
  const bool polytope = doc.provenance == Provenance::Polytope;
  try {
    if (j.contains("h_star")) {
      IntVector h = integer_list(j.at("h_star"), "h_star");
      if (h.size() != doc.dim + 1) throw ParseError("h_star must have d + 1 entries");
      doc.h_star = polytope ? HStarVector::from_polytope(std::move(h)) : HStarVector::raw(std::move(h));
    }
    if (j.contains("f_star")) {
      IntVector f = integer_list(j.at("f_star"), "f_star");
      if (f.size() != doc.dim + 1) throw ParseError("f_star must have d + 1 entries");
      Integer minus_one = j.contains("f_star_minus_one") ? integer_from_json(j.at("f_star_minus_one")) : Integer(1);
      doc.f_star = polytope ? FStarVector::from_polytope(std::move(f)) : FStarVector::raw(std::move(f), minus_one);
    }
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  return doc;
}

Json vectors_to_json(const HStarVector& h, const FStarVector& f) {
  Json j;
  j["d"] = h.dim();
  j["provenance"] = to_string(h.provenance());
  j["h_star"] = integers_to_json(h.entries());
  j["f_star"] = integers_to_json(f.entries());
  if (f.minus_one() != 1) j["f_star_minus_one"] = integer_to_json(f.minus_one());
  return j;
}

Json audit_to_json(const AuditReport& r) {
  Json j;
  j["d"] = r.dim;
  j["provenance"] = to_string(r.provenance);
  j["degree"] = r.degree;
  j["gorenstein_index"] = optional_index(r.gorenstein_index);
  j["unimodal"] = r.unimodality.unimodal;
  j["peak"] = optional_index(r.unimodality.peak);
  j["first_dip"] = optional_index(r.unimodality.first_dip);
  j["symmetric_f_star"] = r.symmetric_f_star;
  j["h_star"] = integers_to_json(r.h_star.entries());
  j["f_star"] = integers_to_json(r.f_star.entries());
  Json checks = Json::array();
  for (const auto& c : r.results) {
    Json e;
    e["name"] = c.name;
    e["holds"] = c.holds;
    e["applicable"] = c.applicable;
    e["witness"] = optional_index(c.witness);
    if (!c.note.empty()) e["note"] = c.note;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["all_hold"] = r.all_hold();
  return j;
}

Json candidate_to_json(const SearchCandidate& c) {
  Json j;
  j["d"] = c.h_star.dim();
  j["position"] = c.position;
  j["value"] = c.value;
  if (c.second_position) {
    j["second_position"] = *c.second_position;
    j["second_value"] = *c.second_value;
  }
  j["h_star"] = integers_to_json(c.h_star.entries());
  j["f_star"] = integers_to_json(c.f_star.entries());
  j["first_dip"] = c.first_dip;
  j["status"] = kCandidateDisclaimer;
  return j;
}

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace ehrstar::io
