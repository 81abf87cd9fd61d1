#include "rectlay/io.hpp"

#include <fstream>
#include <sstream>

#include "rectlay/errors.hpp"

namespace rectlay {
namespace {

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing field \"") + key + "\"");
  return *it;
}

long long integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw FormatError(std::string(what) + " must be an integer");
  return j.get<long long>();
}

Json edge_list(const std::vector<Edge>& edges) {
  Json a = Json::array();
  for (auto [u, v] : edges) a.push_back({u, v});
  return a;
}

}  // namespace

Json to_json(const GraphDoc& d) {
  Json j;
  j["n"] = d.graph.vertex_count();
  j["edges"] = edge_list(d.graph.edges());
  if (d.root) j["root"] = *d.root;
  if (!d.annotations.is_null()) j["annotations"] = d.annotations;
  return j;
}

GraphDoc graph_doc_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("graph document must be an object");
  const long long n = integer(field(j, "n"), "n");
  if (n < 0 || n > 10'000'000) throw FormatError("n out of range");
  GraphDoc d;
  d.graph = Graph(static_cast<int>(n));
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) throw FormatError("edges must be an array");
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) throw FormatError("each edge must be a pair");
    d.graph.add_edge(static_cast<int>(integer(e[0], "edge endpoint")), static_cast<int>(integer(e[1], "edge endpoint")));
  }
  if (auto it = j.find("root"); it != j.end()) {
    const long long r = integer(*it, "root");
    if (r < 0 || r >= n) throw FormatError("root out of range");
    d.root = static_cast<int>(r);
  }
  if (auto it = j.find("annotations"); it != j.end()) d.annotations = *it;
  return d;
}

Json to_json(const Layout& l) {
  Json j;
  j["mode"] = to_string(l.mode);
  Json rects = Json::array();
  for (const auto& r : l.rects) {
    Json o;
    if (r.gap())
      o["gap"] = true;
    else
      o["id"] = r.id;
    o["x"] = r.x;
    o["y"] = r.y;
    o["w"] = r.w;
    o["h"] = r.h;
    rects.push_back(std::move(o));
  }
  j["rects"] = std::move(rects);
  return j;
}

Layout layout_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("layout document must be an object");
  Layout l;
  const Json& mode = field(j, "mode");
  if (mode == "strong")
    l.mode = LayoutMode::Strong;
  else if (mode == "weak")
    l.mode = LayoutMode::Weak;
  else
    throw FormatError("mode must be \"strong\" or \"weak\"");
  const Json& rects = field(j, "rects");
  if (!rects.is_array()) throw FormatError("rects must be an array");
  for (const auto& o : rects) {
    if (!o.is_object()) throw FormatError("each rect must be an object");
    Rect r;
    const bool gap = o.contains("gap") && o["gap"] == true;
    if (gap == o.contains("id")) throw FormatError("each rect needs exactly one of \"id\" and \"gap\"");
    if (!gap) {
      const long long id = integer(o["id"], "id");
      if (id < 0 || id > 10'000'000) throw FormatError("id out of range");
      r.id = static_cast<int>(id);
    }
    r.x = integer(field(o, "x"), "x");
    r.y = integer(field(o, "y"), "y");
    r.w = integer(field(o, "w"), "w");
    r.h = integer(field(o, "h"), "h");
    if (r.w <= 0 || r.h <= 0) throw FormatError("rect sides must be positive");
    l.rects.push_back(r);
  }
  return l;
}

Json to_json(const FeasibilityVerdict& v) {
  Json j;
  j["layoutable"] = v.layoutable;
  j["witness"] = to_string(v.witness);
  if (v.witness == WitnessKind::Nonplanar) j["kuratowski_edges"] = edge_list(v.kuratowski);
  if (v.witness == WitnessKind::SeparatingTriangle) j["triangle"] = v.triangle;
  return j;
}

Json to_json(const ValidationReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["missing"] = edge_list(r.missing);
  j["extra"] = edge_list(r.extra);
  Json ov = Json::array();
  for (auto [a, b] : r.overlaps) ov.push_back({a, b});
  j["overlaps"] = std::move(ov);
  j["problems"] = r.problems;
  return j;
}

Json to_json(const OracleResult& r) {
  Json j;
  j["min_area"] = r.min_area ? Json(*r.min_area) : Json(nullptr);
  j["exhausted"] = r.exhausted;
  j["max_w"] = r.max_w;
  j["max_h"] = r.max_h;
  j["nodes"] = r.nodes;
  j["witness"] = r.min_area ? to_json(r.witness) : Json(nullptr);
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
  if (!out) throw FormatError("write failed for " + path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace rectlay
