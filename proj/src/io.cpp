#include "matchstick/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "matchstick/error.hpp"

namespace matchstick {

namespace {

using nlohmann::json;

void number(std::string& out, double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::FormatError, "non-finite coordinate");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
}

void point(std::string& out, Point p) {
  out += '[';
  number(out, p.x);
  out += ',';
  number(out, p.y);
  out += ']';
}

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::FormatError, what); }

void only_keys(const json& obj, const std::set<std::string>& allowed, const char* where) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.contains(key)) bad(std::string("unknown field '") + key + "' in " + where);
  }
}

Point read_point(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    bad("a point must be [x, y]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

std::string to_json_text(const MatchstickGraph& g) {
  std::string out = "{\"version\":1,\"disk\":";
  if (const auto& d = g.disk()) {
    out += "{\"center\":";
    point(out, d->center);
    out += ",\"radius\":";
    number(out, d->radius);
    out += '}';
  } else {
    out += "null";
  }
  out += ",\n\"vertices\":[";
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    if (i) out += ",\n";
    point(out, g.vertex(static_cast<VertexId>(i)));
  }
  out += "],\n\"edges\":[";
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    if (i) out += ',';
    const Edge e = g.edge(static_cast<EdgeId>(i));
    out += '[' + std::to_string(e.u) + ',' + std::to_string(e.v) + ']';
  }
  out += "]}\n";
  return out;
}

MatchstickGraph graph_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& ex) {
    bad(std::string("not JSON: ") + ex.what());
  }
  if (!doc.is_object()) bad("top level must be an object");
  only_keys(doc, {"version", "disk", "vertices", "edges"}, "graph");
  if (!doc.contains("version") || doc["version"] != 1) bad("version must be 1");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) bad("missing vertices");
  if (!doc.contains("edges") || !doc["edges"].is_array()) bad("missing edges");

  std::optional<DiskSpec> disk;
  if (doc.contains("disk") && !doc["disk"].is_null()) {
    const json& d = doc["disk"];
    if (!d.is_object()) bad("disk must be an object or null");
    only_keys(d, {"center", "radius"}, "disk");
    if (!d.contains("radius") || !d["radius"].is_number()) bad("disk needs a radius");
    DiskSpec spec;
    spec.radius = d["radius"].get<double>();
    if (d.contains("center")) spec.center = read_point(d["center"]);
    if (!(spec.radius > 0.0) || !std::isfinite(spec.radius)) bad("disk radius must be positive");
    disk = spec;
  }

  std::vector<Point> vertices;
  vertices.reserve(doc["vertices"].size());
  for (const json& v : doc["vertices"]) vertices.push_back(read_point(v));

  std::vector<Edge> edges;
  edges.reserve(doc["edges"].size());
  for (const json& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned()) {
      bad("an edge must be [i, j] with non-negative integers");
    }
    const auto i = e[0].get<std::uint64_t>();
    const auto j = e[1].get<std::uint64_t>();
    if (i >= j) bad("edge indices must satisfy i < j");
    if (j >= vertices.size()) bad("edge index out of range");
    const Edge edge{static_cast<VertexId>(i), static_cast<VertexId>(j)};
    if (!edges.empty() && !(edges.back() < edge)) bad("edges must be sorted and distinct");
    edges.push_back(edge);
  }
  return MatchstickGraph(std::move(vertices), std::move(edges), disk);
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::FormatError, "cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw Error(ErrorCode::FormatError, "write failed: " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::FormatError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void save_graph(const MatchstickGraph& g, const std::filesystem::path& path) {
  write_text_file(path, to_json_text(g));
}

MatchstickGraph load_graph(const std::filesystem::path& path) {
  return graph_from_json_text(read_text_file(path));
}

}  // namespace matchstick
