#include "matchstick/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "matchstick/error.hpp"

namespace matchstick {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

const char* fill_for(FaceKind k) {
  switch (k) {
    case FaceKind::triangle: return "#f4a582";
    case FaceKind::rhombus: return "#92c5de";
    case FaceKind::fat_rhombus: return "#0571b0";
    case FaceKind::other: return "#e0e0e0";
    case FaceKind::outer: return "none";
  }
  return "none";
}

}  // namespace

std::string render_svg(const MatchstickGraph& g, const FaceDecomposition* fd,
                       const RenderStyle& style) {
  if (!(style.scale > 0)) throw Error(ErrorCode::InvalidArgument, "scale must be positive");
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  bool any = false;
  auto grow = [&](Point p) {
    if (!any) {
      minx = maxx = p.x;
      miny = maxy = p.y;
      any = true;
    }
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  };
  for (const Point& p : g.vertices()) grow(p);
  for (const Arrow& a : style.arrows) {
    grow(a.from);
    grow(a.to);
  }
  const bool disk = style.disk_outline && g.disk().has_value();
  if (disk) {
    const DiskSpec d = *g.disk();
    grow({d.center.x - d.radius, d.center.y - d.radius});
    grow({d.center.x + d.radius, d.center.y + d.radius});
  }
  const double s = style.scale, m = style.margin;
  const double width = (maxx - minx) * s + 2 * m;
  const double height = (maxy - miny) * s + 2 * m;
  auto X = [&](double x) { return fmt((x - minx) * s + m); };
  auto Y = [&](double y) { return fmt((maxy - y) * s + m); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(width) +
         "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) +
         "\">\n";
  if (!style.arrows.empty()) {
    out += "<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"4\" "
           "orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"#b2182b\"/></marker></defs>\n";
  }
  if (disk) {
    const DiskSpec d = *g.disk();
    out += "<circle class=\"disk\" cx=\"" + X(d.center.x) + "\" cy=\"" + Y(d.center.y) +
           "\" r=\"" + fmt(d.radius * s) + "\" fill=\"none\" stroke=\"#888888\"/>\n";
  }
  if (style.face_colors && fd) {
    const auto classes = classify_faces(g, *fd, g.disk() ? std::optional(g.disk()->radius)
                                                         : std::nullopt);
    for (FaceId f = 0; f < fd->num_faces(); ++f) {
      if (f == fd->outer_face || fd->faces[f].empty()) continue;
      out += "<polygon class=\"face " + std::string(to_string(classes[f].kind)) + "\" points=\"";
      bool first = true;
      for (VertexId v : face_vertices(g, *fd, f)) {
        if (!first) out += ' ';
        first = false;
        out += X(g.vertex(v).x) + "," + Y(g.vertex(v).y);
      }
      out += "\" fill=\"" + std::string(fill_for(classes[f].kind)) + "\" stroke=\"none\"/>\n";
    }
  }
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Edge e = g.edge(id);
    if (e.u >= g.num_vertices() || e.v >= g.num_vertices()) continue;
    const Point a = g.vertex(e.u), b = g.vertex(e.v);
    const bool dashed = style.dashed.contains(id);
    out += "<line class=\"edge" + std::string(dashed ? " dashed" : "") + "\" x1=\"" + X(a.x) +
           "\" y1=\"" + Y(a.y) + "\" x2=\"" + X(b.x) + "\" y2=\"" + Y(b.y) +
           "\" stroke=\"black\" stroke-width=\"" + (dashed ? "2.5" : "1.5") + "\"" +
           (dashed ? " stroke-dasharray=\"6,4\"" : "") + "/>\n";
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const Point p = g.vertex(v);
    out += "<circle class=\"vertex\" cx=\"" + X(p.x) + "\" cy=\"" + Y(p.y) + "\" r=\"" +
           fmt(style.vertex_radius) + "\" fill=\"black\"/>\n";
  }
  for (const auto& [v, text] : style.labels) {
    if (v >= g.num_vertices()) continue;
    const Point p = g.vertex(v);
    out += "<text x=\"" + fmt((p.x - minx) * s + m + 5) + "\" y=\"" + fmt((maxy - p.y) * s + m - 5) +
           "\" font-size=\"12\">" + escape(text) + "</text>\n";
  }
  for (const Arrow& a : style.arrows) {
    out += "<line class=\"arrow\" x1=\"" + X(a.from.x) + "\" y1=\"" + Y(a.from.y) + "\" x2=\"" +
           X(a.to.x) + "\" y2=\"" + Y(a.to.y) +
           "\" stroke=\"#b2182b\" stroke-width=\"2\" marker-end=\"url(#head)\"/>\n";
    if (!a.label.empty()) {
      out += "<text x=\"" + X(a.to.x) + "\" y=\"" + Y(a.to.y) +
             "\" font-size=\"14\" fill=\"#b2182b\">" + escape(a.label) + "</text>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace matchstick
