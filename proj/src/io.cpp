#include "jaccomb/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <utility>

namespace jaccomb {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  fail(errc::invalid_input, where + ": " + what);
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& known,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!known.count(it.key())) bad(where, "unknown key \"" + it.key() + "\"");
}

long long int_field(const json& v, const std::string& where) {
  if (!v.is_number_integer()) bad(where, "expected an integer");
  return v.get<long long>();
}

}  // namespace

CurveGraph curve_from_json(const json& j) {
  if (!j.is_object()) bad("curve", "expected a JSON object");
  reject_unknown_keys(j, {"components", "intersections", "points"}, "curve");

  if (!j.contains("components") || !j["components"].is_array() || j["components"].empty())
    bad("components", "expected a non-empty array");
  std::vector<Component> comps;
  for (std::size_t k = 0; k < j["components"].size(); ++k) {
    const json& c = j["components"][k];
    std::string where = "components[" + std::to_string(k) + "]";
    if (!c.is_object()) bad(where, "expected an object");
    reject_unknown_keys(c, {"name", "genus"}, where);
    if (!c.contains("name") || !c["name"].is_string()) bad(where, "missing string \"name\"");
    Component comp{c["name"].get<std::string>(), 0};
    if (c.contains("genus")) comp.genus = static_cast<int>(int_field(c["genus"], where + ".genus"));
    comps.push_back(std::move(comp));
  }
  int n = static_cast<int>(comps.size());

  std::vector<std::vector<long long>> mat(static_cast<std::size_t>(n),
                                          std::vector<long long>(static_cast<std::size_t>(n), 0));
  if (j.contains("intersections")) {
    if (!j["intersections"].is_array()) bad("intersections", "expected an array of [i, j, m] triples");
    for (std::size_t k = 0; k < j["intersections"].size(); ++k) {
      const json& t = j["intersections"][k];
      std::string where = "intersections[" + std::to_string(k) + "]";
      if (!t.is_array() || t.size() != 3) bad(where, "expected a triple [i, j, m]");
      long long i = int_field(t[0], where), jj = int_field(t[1], where), m = int_field(t[2], where);
      if (i < 0 || jj < 0 || i >= n || jj >= n) bad(where, "component index out of range");
      if (i >= jj) bad(where, "indices must satisfy i < j");
      if (m < 1) bad(where, "multiplicity must be a positive integer");
      if (mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)] != 0)
        bad(where, "duplicate pair");
      mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)] = m;
      mat[static_cast<std::size_t>(jj)][static_cast<std::size_t>(i)] = m;
    }
  }

  std::optional<std::vector<PointRecord>> points;
  if (j.contains("points")) {
    if (!j["points"].is_array()) bad("points", "expected an array of {\"on\": [...]} records");
    std::vector<PointRecord> recs;
    for (std::size_t k = 0; k < j["points"].size(); ++k) {
      const json& p = j["points"][k];
      std::string where = "points[" + std::to_string(k) + "]";
      if (!p.is_object()) bad(where, "expected an object");
      reject_unknown_keys(p, {"on"}, where);
      if (!p.contains("on") || !p["on"].is_array()) bad(where, "missing array \"on\"");
      PointRecord rec;
      for (const json& v : p["on"]) {
        long long i = int_field(v, where + ".on");
        if (i < 0 || i >= n) bad(where, "component index out of range");
        rec.on.push_back(static_cast<int>(i));
      }
      std::sort(rec.on.begin(), rec.on.end());
      recs.push_back(std::move(rec));
    }
    points = std::move(recs);
  }

  return CurveGraph(std::move(comps), std::move(mat), std::move(points));
}

CurveGraph curve_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::invalid_input, "cannot open curve file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(errc::invalid_input, path + ": " + e.what());
  }
  return curve_from_json(j);
}

json curve_to_json(const CurveGraph& g) {
  json comps = json::array();
  for (int i = 0; i < g.gamma(); ++i)
    comps.push_back({{"name", g.component(i).name}, {"genus", g.component(i).genus}});
  json inter = json::array();
  for (int i = 0; i < g.gamma(); ++i)
    for (int jj = i + 1; jj < g.gamma(); ++jj)
      if (g.intersection(i, jj) > 0) inter.push_back({i, jj, g.intersection(i, jj)});
  json out{{"components", std::move(comps)}, {"intersections", std::move(inter)}};
  if (g.has_points()) {
    json pts = json::array();
    for (const PointRecord& rec : g.points()) pts.push_back({{"on", rec.on}});
    out["points"] = std::move(pts);
  }
  return out;
}

Polarization polarization_from_json(const json& j) {
  if (!j.is_array() || j.empty()) bad("q", "expected a non-empty array of rationals");
  std::vector<Rat> entries;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const json& v = j[k];
    std::string where = "q[" + std::to_string(k) + "]";
    if (v.is_string())
      entries.push_back(parse_rational(v.get<std::string>()));
    else if (v.is_number_integer())
      entries.push_back(Rat(static_cast<long>(v.get<long long>())));
    else
      bad(where, "expected \"num/den\", an integer string, or an integer");
  }
  return Polarization(std::move(entries));
}

json polarization_to_json(const Polarization& q) {
  json out = json::array();
  for (int i = 0; i < q.size(); ++i) out.push_back(format_rational(q[i]));
  return out;
}

json multidegree_to_json(const Multidegree& d) {
  json out = json::array();
  for (long long x : d) out.push_back(x);
  return out;
}

}  // namespace jaccomb
