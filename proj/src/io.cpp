#include "latgenus/io.hpp"

namespace latgenus {

using nlohmann::json;

namespace {

Integer parse_integer(const json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return to_integer(j.get<std::uint64_t>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw InputError("not an integer: " + j.dump());
    return z;
  }
  throw InputError("coordinates must be integers, got " + j.dump());
}

}  // namespace

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

json vector_json(const LatticeVector& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(integer_json(c));
  return a;
}

FamilySpec parse_family_spec(const json& doc) {
  if (!doc.is_object()) throw InputError("input must be a JSON object");
  if (!doc.contains("ambient_dim") || !doc["ambient_dim"].is_number_integer() ||
      doc["ambient_dim"].get<std::int64_t>() < 0)
    throw InputError("\"ambient_dim\" must be a nonnegative integer");
  if (!doc.contains("polytopes") || !doc["polytopes"].is_array() || doc["polytopes"].empty())
    throw InputError("\"polytopes\" must be a nonempty array");

  FamilySpec spec;
  spec.ambient_dim = static_cast<std::size_t>(doc["ambient_dim"].get<std::int64_t>());
  std::size_t idx = 0;
  for (const auto& entry : doc["polytopes"]) {
    ++idx;
    if (!entry.is_object()) throw InputError("each polytope must be an object");
    std::string name = "P" + std::to_string(idx);
    if (entry.contains("name")) {
      if (!entry["name"].is_string()) throw InputError("polytope name must be a string");
      name = entry["name"].get<std::string>();
    }
    if (!entry.contains("vertices") || !entry["vertices"].is_array() || entry["vertices"].empty())
      throw InputError("polytope " + name + ": \"vertices\" must be a nonempty array");
    std::vector<LatticeVector> verts;
    for (const auto& v : entry["vertices"]) {
      if (!v.is_array() || v.size() != spec.ambient_dim)
        throw InputError("polytope " + name + ": every vertex needs " + std::to_string(spec.ambient_dim) +
                         " coordinates");
      LatticeVector p;
      for (const auto& c : v) p.push_back(parse_integer(c));
      verts.push_back(std::move(p));
    }
    spec.names.push_back(std::move(name));
    spec.vertex_lists.push_back(std::move(verts));
  }
  return spec;
}

FamilySpec parse_family_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_family_spec(doc);
}

json to_json(const FamilySpec& spec) {
  json doc;
  doc["ambient_dim"] = spec.ambient_dim;
  json polys = json::array();
  for (std::size_t i = 0; i < spec.vertex_lists.size(); ++i) {
    json verts = json::array();
    for (const auto& v : spec.vertex_lists[i]) verts.push_back(vector_json(v));
    polys.push_back({{"name", spec.names.at(i)}, {"vertices", std::move(verts)}});
  }
  doc["polytopes"] = std::move(polys);
  return doc;
}

FamilySpec spec_from_family(const PolytopeFamily& family) {
  FamilySpec spec;
  spec.ambient_dim = family.ambient_dim();
  for (std::size_t i = 0; i < family.size(); ++i) {
    spec.names.push_back("P" + std::to_string(i + 1));
    spec.vertex_lists.push_back(family[i].vertices());
  }
  return spec;
}

PolytopeFamily build_family(const FamilySpec& spec) {
  std::vector<LatticePolytope> members;
  for (const auto& verts : spec.vertex_lists) members.push_back(LatticePolytope::hull(verts, spec.ambient_dim));
  return PolytopeFamily(spec.ambient_dim, std::move(members));
}

}  // namespace latgenus
