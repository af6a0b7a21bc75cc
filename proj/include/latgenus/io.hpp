#pragma once

// JSON family input/output.
//
//   {"ambient_dim": n,
//    "polytopes": [{"name": "P1", "vertices": [[x1, ..., xn], ...]}, ...]}
//
// Coordinates are JSON integers, or decimal strings for values beyond int64.

#include <string>
#include <vector>

#include <json.hpp>

#include "latgenus/polytope.hpp"

namespace latgenus {

/// Malformed or inconsistent input document.
class InputError : public Error {
 public:
  using Error::Error;
};

struct FamilySpec {
  std::size_t ambient_dim = 0;
  std::vector<std::string> names;
  std::vector<std::vector<LatticeVector>> vertex_lists;
};

FamilySpec parse_family_spec(const nlohmann::json& doc);
FamilySpec parse_family_spec(const std::string& text);

nlohmann::json to_json(const FamilySpec& spec);

/// Spec listing the canonical vertices of each member, named P1, P2, ...
FamilySpec spec_from_family(const PolytopeFamily& family);

PolytopeFamily build_family(const FamilySpec& spec);

nlohmann::json integer_json(const Integer& z);
nlohmann::json vector_json(const LatticeVector& v);

}  // namespace latgenus
