#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"
#include "pierce/family.hpp"

namespace pierce {

using Json = nlohmann::ordered_json;

namespace detail {

inline Rational rat_from_json(const Json& v, const std::string& where) {
  try {
    if (v.is_string()) return rat_from_string(v.get<std::string>());
    if (v.is_number_integer())
      return Rational(mpz_class(static_cast<long>(v.get<long long>())));
    if (v.is_number_float()) return rat_from_double(v.get<double>());
  } catch (const io_error& e) {
    throw io_error(where + ": " + e.what());
  }
  throw io_error(where + ": expected a number or a rational string");
}

}  // namespace detail

// Family file: {"sets":[{"id":str,"vertices":[[num,num],...]},...],
// "colors":{id:int}?}. Plain JSON numbers carry double precision; strings
// ("3/4", "0.1") are exact. Vertices are normalized on load (dedup,
// collinear removal); invalid vertex orders are rejected.
inline FamilyR load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw io_error(path + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("sets") || !doc["sets"].is_array())
    throw io_error(path + ": top-level object with a \"sets\" array required");

  FamilyR fam;
  std::set<std::string> seen;
  std::size_t idx = 0;
  for (const auto& js : doc["sets"]) {
    const std::string where = path + ": sets[" + std::to_string(idx++) + "]";
    if (!js.is_object() || !js.contains("id") || !js["id"].is_string())
      throw io_error(where + ": string \"id\" required");
    const std::string id = js["id"].get<std::string>();
    if (!seen.insert(id).second) throw io_error(where + ": duplicate id '" + id + "'");
    if (!js.contains("vertices") || !js["vertices"].is_array() || js["vertices"].empty())
      throw io_error(where + ": nonempty \"vertices\" array required");
    std::vector<PointR> verts;
    std::size_t vi = 0;
    for (const auto& jv : js["vertices"]) {
      const std::string vwhere = where + ".vertices[" + std::to_string(vi++) + "]";
      if (!jv.is_array() || jv.size() != 2) throw io_error(vwhere + ": expected [x, y]");
      verts.push_back({detail::rat_from_json(jv[0], vwhere),
                       detail::rat_from_json(jv[1], vwhere)});
    }
    try {
      fam.sets.push_back(make_convex_set(id, std::move(verts)));
    } catch (const precondition_error& e) {
      throw io_error(where + ": " + e.what());
    }
  }

  if (doc.contains("colors")) {
    if (!doc["colors"].is_object()) throw io_error(path + ": \"colors\" must be an object");
    for (const auto& [id, jc] : doc["colors"].items()) {
      if (!seen.count(id)) throw io_error(path + ": colors: unknown id '" + id + "'");
      if (!jc.is_number_integer() || jc.get<long long>() < 0)
        throw io_error(path + ": colors['" + id + "']: nonnegative integer required");
      fam.colors[id] = static_cast<int>(jc.get<long long>());
    }
    for (const auto& s : fam.sets)
      if (!fam.colors.count(s.id))
        throw io_error(path + ": colors must cover every id ('" + s.id + "' missing)");
  }
  return fam;
}

// Vertices are written as exact rational strings, so save/load round-trips
// are identities on the normalized form.
inline Json family_to_json(const FamilyR& family) {
  Json doc;
  doc["sets"] = Json::array();
  for (const auto& s : family.sets) {
    Json js;
    js["id"] = s.id;
    js["vertices"] = Json::array();
    for (const auto& v : s.vertices)
      js["vertices"].push_back(Json::array({rat_to_string(v.x), rat_to_string(v.y)}));
    doc["sets"].push_back(std::move(js));
  }
  if (!family.colors.empty()) {
    Json jc = Json::object();
    for (const auto& [id, c] : family.colors) jc[id] = c;
    doc["colors"] = std::move(jc);
  }
  return doc;
}

inline void save_json(const Json& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write '" + path + "'");
  out << doc.dump(2) << "\n";
  if (!out) throw io_error("write failed on '" + path + "'");
}

inline void save_family(const FamilyR& family, const std::string& path) {
  save_json(family_to_json(family), path);
}

inline Json point_to_json(const PointR& p) {
  return Json::array({rat_to_string(p.x), rat_to_string(p.y)});
}

inline Json line_to_json(const LineR& l) {
  Json j;
  j["a"] = point_to_json(l.a);
  j["b"] = point_to_json(l.b);
  return j;
}

}  // namespace pierce
