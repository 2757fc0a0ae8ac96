#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "ehrstar/audit.hpp"
#include "ehrstar/lattice.hpp"
#include "ehrstar/search.hpp"
#include "ehrstar/star_basis.hpp"

// JSON formats. Big integers are written as decimal strings; on input both
// strings and JSON integers are accepted.
//
//   polytope: {"ambient_dim": 2, "vertices": [[-1,-1],[-1,1],[1,-1],[1,1]]}
//             {"ambient_dim": 2, "halfspaces": [[1,1,0],[1,-1,0],...]}   ([b, a_1..a_d]: b + a.x >= 0)
//   vectors:  {"d": 15, "h_star": ["1","0",...], "f_star": [...]}
namespace ehrstar::io {

using Json = nlohmann::json;

Integer integer_from_json(const Json& j);
Json integer_to_json(const Integer& v);
Json integers_to_json(const IntVector& v);

LatticePolytope polytope_from_json(const Json& j);
Json polytope_to_json(const LatticePolytope& p);

/// True if the document looks like a vector file rather than a polytope.
bool is_vector_document(const Json& j);

struct VectorDocument {
  std::size_t dim = 0;
  Provenance provenance = Provenance::Raw;
  std::optional<HStarVector> h_star;
  std::optional<FStarVector> f_star;
};

VectorDocument vectors_from_json(const Json& j);
Json vectors_to_json(const HStarVector& h, const FStarVector& f);

Json audit_to_json(const AuditReport& r);
Json candidate_to_json(const SearchCandidate& c);

Json load_json_file(const std::filesystem::path& path);

}  // namespace ehrstar::io
