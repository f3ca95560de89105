#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ec/audit.hpp"
#include "ec/catalog.hpp"

namespace ec {

using Json = nlohmann::json;

inline Json vec_to_json(const Vec& v) {
  Json a = Json::array();
  for (const Scalar& c : v) a.push_back(c.str());
  return a;
}

inline Vec vec_from_json(const Json& j) {
  if (!j.is_array()) fail(errc::parse_error, "expected an array of scalar literals");
  Vec v;
  for (const auto& c : j) v.push_back(Scalar::parse(c.get<std::string>()));
  return v;
}

inline Json mat_to_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows; ++r) rows.push_back(vec_to_json(m.row(r)));
  return rows;
}

inline Mat mat_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail(errc::parse_error, "expected a matrix");
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(r));
  return Mat::from_rows(rows);
}

inline Json space_to_json(const Space& s) {
  Json j;
  j["name"] = s.name();
  j["dimension"] = s.dim();
  j["field"] = Json{{"d", s.field().d}};
  Json gens = Json::array();
  for (const Vec& g : s.generators()) gens.push_back(vec_to_json(g));
  j["generators"] = gens;
  return j;
}

inline SpacePtr space_from_json(const Json& j) {
  if (!j.is_object()) fail(errc::parse_error, "space JSON must be an object");
  if (!j.contains("dimension") || !j.contains("generators"))
    fail(errc::parse_error, "space JSON needs \"dimension\" and \"generators\"");
  std::string name = j.value("name", std::string("space"));
  std::size_t dim = j.at("dimension").get<std::size_t>();
  Field field(j.contains("field") ? j.at("field").at("d").get<std::int64_t>() : 1);
  std::vector<Vec> gens;
  for (const auto& g : j.at("generators")) gens.push_back(vec_from_json(g));
  return Space::make(std::move(name), dim, field, std::move(gens));
}

/// Resolves a space reference: a catalog name, a "catalog:" prefixed name,
/// or a path to a space JSON file.
inline SpacePtr resolve_space(const std::string& ref) {
  if (ref.rfind("catalog:", 0) == 0) return catalog::get_space(ref.substr(8));
  try {
    return catalog::get_space(ref);
  } catch (const error& e) {
    if (e.code() != errc::unknown_name) throw;
  }
  std::ifstream in(ref);
  if (!in) fail(errc::unknown_name, "no catalog space or readable file named " + ref);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    fail(errc::parse_error, ref + ": " + e.what());
  }
  return space_from_json(j);
}

inline Json operator_to_json(const Operator& t) {
  Json j;
  j["domain"] = space_to_json(*t.domain());
  j["codomain"] = space_to_json(*t.codomain());
  j["matrix"] = mat_to_json(t.matrix());
  return j;
}

inline Operator operator_from_json(const Json& j) {
  if (!j.is_object()) fail(errc::parse_error, "operator JSON must be an object");
  auto resolve_side = [&](const char* key) -> SpacePtr {
    if (!j.contains(key))
      fail(errc::parse_error, std::string("operator JSON needs \"") + key + "\"");
    const Json& side = j.at(key);
    if (side.is_string()) return resolve_space(side.get<std::string>());
    return space_from_json(side);
  };
  SpacePtr domain = resolve_side("domain");
  SpacePtr codomain = resolve_side("codomain");
  if (j.contains("matrix"))
    return Operator(domain, codomain, mat_from_json(j.at("matrix")));
  if (j.contains("images")) {
    std::vector<Vec> images;
    for (const auto& v : j.at("images")) images.push_back(vec_from_json(v));
    return Operator::from_images(domain, codomain, images);
  }
  fail(errc::parse_error, "operator JSON needs \"matrix\" or \"images\"");
}

/// Resolves an operator reference: "catalog:ex1", a bare catalog name, or a
/// path to an operator JSON file.
inline Operator resolve_operator(const std::string& ref) {
  if (ref.rfind("catalog:", 0) == 0) return catalog::get_operator(ref.substr(8));
  try {
    return catalog::get_operator(ref);
  } catch (const error& e) {
    if (e.code() != errc::unknown_name) throw;
  }
  std::ifstream in(ref);
  if (!in) fail(errc::unknown_name, "no catalog operator or readable file named " + ref);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    fail(errc::parse_error, ref + ": " + e.what());
  }
  return operator_from_json(j);
}

inline Json active_pair_to_json(const ActivePair& p) {
  return Json{{"generator", p.gen}, {"facet", p.facet}, {"sign", p.sign}};
}

inline Json certificate_to_json(const Certificate& cert) {
  Json j;
  j["verdict"] = cert.is_extreme() ? "Extreme" : "NotExtreme";
  j["op_norm"] = cert.norm.str();
  Json active = Json::array();
  for (const ActivePair& p : cert.active) active.push_back(active_pair_to_json(p));
  j["active_pairs"] = active;
  if (cert.is_extreme()) {
    j["spanning_constraints"] = cert.spanning;
  } else {
    j["direction"] = mat_to_json(cert.direction);
    j["epsilon"] = cert.epsilon.str();
    j["t1"] = mat_to_json(cert.t1);
    j["t2"] = mat_to_json(cert.t2);
  }
  return j;
}

inline Json vertex_set_to_json(const VertexSet& vs, bool count_only) {
  Json j;
  j["count"] = vs.count();
  if (!count_only) {
    Json verts = Json::array();
    for (const Operator& v : vs.vertices) verts.push_back(mat_to_json(v.matrix()));
    j["vertices"] = verts;
  }
  return j;
}

inline Json violation_to_json(const Violation& v) {
  Json j;
  j["vertex"] = mat_to_json(v.vertex.matrix());
  j["certificate"] = certificate_to_json(v.certificate);
  Json images = Json::array();
  for (const Vec& im : v.images) images.push_back(vec_to_json(im));
  j["images"] = images;
  j["reason"] = v.reason;
  return j;
}

inline Json audit_report_to_json(const AuditReport& r,
                                 std::size_t inline_limit = SIZE_MAX) {
  Json j;
  j["domain"] = r.domain;
  j["codomain"] = r.codomain;
  j["property"] = property_name(r.property);
  j["vertex_count"] = r.vertex_count;
  j["verdict"] = r.holds ? "holds" : "fails";
  j["violations_total"] = r.violations.size();
  Json viols = Json::array();
  std::size_t shown = std::min(inline_limit, r.violations.size());
  for (std::size_t k = 0; k < shown; ++k) viols.push_back(violation_to_json(r.violations[k]));
  j["violations"] = viols;
  j["violations_truncated"] = shown < r.violations.size();
  return j;
}

inline Json lemma_report_to_json(const LemmaReport& r) {
  Json j;
  j["m"] = r.m;
  j["k"] = r.k;
  j["claim"] = r.claim == Claim::i ? "i" : "ii";
  j["holds"] = r.holds;
  j["families_checked"] = r.families_checked;
  if (r.counterexample.empty())
    j["counterexample"] = nullptr;
  else {
    Json fam = Json::array();
    for (const auto& s : r.counterexample) fam.push_back(s);
    j["counterexample"] = fam;
  }
  return j;
}

}  // namespace ec
