#include "specorder/document.hpp"

#include <fstream>
#include <set>

namespace specorder {

using nlohmann::json;

namespace {

std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) throw ParseError(at(where, item.key()), "unknown key");
  }
}

const json& required(const json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where.empty() ? "/" : where, "missing key '" + key + "'");
  return *it;
}

const std::string& as_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where, "expected a string");
  return j.get_ref<const std::string&>();
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), "cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string(), std::string("invalid JSON: ") + e.what());
  }
}

SpaceDocument space_from(const json& j, const std::filesystem::path& base_dir, const std::string& where) {
  if (j.is_string()) {
    const std::filesystem::path p = base_dir / as_string(j, where);
    return parse_space_document(read_json(p), p.string() + ":");
  }
  return parse_space_document(j, where);
}

}  // namespace

SpaceDocument parse_space_document(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where.empty() ? "/" : where, "expected an object");
  reject_unknown_keys(j, {"name", "points", "specializations"}, where);

  SpaceDocument doc;
  doc.name = as_string(required(j, "name", where), at(where, "name"));

  const json& pts = required(j, "points", where);
  if (!pts.is_array()) throw ParseError(at(where, "points"), "expected an array");
  std::vector<std::string> points;
  std::set<std::string> known;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    points.push_back(as_string(pts[i], at(where, "points/" + std::to_string(i))));
    known.insert(points.back());
  }

  const json& arrows_j = required(j, "specializations", where);
  if (!arrows_j.is_array()) throw ParseError(at(where, "specializations"), "expected an array");
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < arrows_j.size(); ++i) {
    const std::string loc = at(where, "specializations/" + std::to_string(i));
    const json& a = arrows_j[i];
    if (!a.is_array() || a.size() != 2) throw ParseError(loc, "expected a [from, to] pair");
    Arrow arrow{as_string(a[0], loc + "/0"), as_string(a[1], loc + "/1")};
    if (!known.count(arrow.first)) throw ParseError(loc + "/0", "unknown point '" + arrow.first + "'");
    if (!known.count(arrow.second)) throw ParseError(loc + "/1", "unknown point '" + arrow.second + "'");
    arrows.push_back(std::move(arrow));
  }
  doc.space = build_space(std::move(points), arrows);
  return doc;
}

MorphismDocument parse_morphism_document(const json& j, const std::filesystem::path& base_dir,
                                         const std::string& where) {
  if (!j.is_object()) throw ParseError(where.empty() ? "/" : where, "expected an object");
  reject_unknown_keys(j, {"source", "target", "map"}, where);

  MorphismDocument doc;
  doc.source = space_from(required(j, "source", where), base_dir, at(where, "source"));
  doc.target = space_from(required(j, "target", where), base_dir, at(where, "target"));

  const json& m = required(j, "map", where);
  if (!m.is_object()) throw ParseError(at(where, "map"), "expected an object");
  std::vector<std::pair<std::string, std::string>> assignments;
  for (const auto& item : m.items()) {
    const std::string loc = at(where, "map/" + item.key());
    if (!doc.source.space.find(item.key())) throw ParseError(loc, "unknown source point '" + item.key() + "'");
    const std::string& to = as_string(item.value(), loc);
    if (!doc.target.space.find(to)) throw ParseError(loc, "unknown target point '" + to + "'");
    assignments.emplace_back(item.key(), to);
  }
  doc.map = SpaceMap::from_names(doc.source.space, doc.target.space, assignments);
  return doc;
}

SpaceDocument load_space_document(const std::filesystem::path& path) {
  return parse_space_document(read_json(path), path.string() + ":");
}

MorphismDocument load_morphism_document(const std::filesystem::path& path) {
  return parse_morphism_document(read_json(path), path.parent_path(), path.string() + ":");
}

json to_json(const SpaceDocument& doc) {
  const FiniteSpace& s = doc.space;
  json arrows = json::array();
  const T0Quotient q = t0_quotient(s);
  // members of each class, in input order
  std::vector<std::vector<PointIndex>> members(q.space.size());
  for (PointIndex x = 0; x < s.size(); ++x) members[q.map[x]].push_back(x);
  for (const auto& cls : members) {
    if (cls.size() < 2) continue;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      arrows.push_back({s.name(cls[i]), s.name(cls[(i + 1) % cls.size()])});
    }
  }
  const FiniteSpace& qs = q.space;
  for (PointIndex a = 0; a < qs.size(); ++a) {
    for (PointIndex b = 0; b < qs.size(); ++b) {
      if (a == b || !qs.leq(a, b)) continue;
      if (is_closest(qs, a, b)) {
        arrows.push_back({s.name(q.representative[a]), s.name(q.representative[b])});
      }
    }
  }
  return json{{"name", doc.name}, {"points", s.points()}, {"specializations", arrows}};
}

json to_json(const MorphismDocument& doc) {
  json m = json::object();
  const auto& src = doc.map.source();
  for (PointIndex x = 0; x < src.size(); ++x) m[src.name(x)] = doc.map.target().name(doc.map(x));
  return json{{"source", to_json(doc.source)}, {"target", to_json(doc.target)}, {"map", m}};
}

MorphismDocument make_morphism_document(std::string source_name, std::string target_name,
                                        const SpaceMap& map) {
  return {{std::move(source_name), map.source()}, {std::move(target_name), map.target()}, map};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace specorder
