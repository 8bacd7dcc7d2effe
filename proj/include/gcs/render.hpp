#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>

#include "gcs/geom.hpp"
#include "gcs/graph.hpp"
#include "gcs/plan_exec.hpp"

namespace gcs {

namespace detail {

inline std::string fmt_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string fmt_short(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// Graphviz view of the constraint graph: node shape by entity kind, one edge
/// per constraint labelled with its kind and value.
inline std::string render_dot(const ConstraintGraph& g) {
  std::ostringstream os;
  os << "graph constraints {\n";
  for (const auto& e : g.entities()) {
    const char* shape = "circle";
    if (e.kind.type == EntityType::Line) shape = "box";
    if (e.kind.type == EntityType::Circle) shape = "doublecircle";
    os << "  " << detail::dot_quote(e.id) << " [shape=" << shape << "];\n";
  }
  for (const auto& c : g.constraints()) {
    std::string label(to_string(c.type));
    if (has_value(c.type)) label += " " + detail::fmt_number(c.value);
    os << "  " << detail::dot_quote(c.between[0]) << " -- " << detail::dot_quote(c.between[1])
       << " [label=" << detail::dot_quote(label) << "];\n";
  }
  os << "}\n";
  return os.str();
}

/// Drawing of a solved figure on an 800x600 canvas, scaled to fit with a 5%
/// margin. Lines are drawn long enough to cross the whole canvas.
inline std::string render_svg(const ConstraintGraph& g, const Solution& s) {
  constexpr double width = 800.0, height = 600.0, margin = 0.05;
  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
  double hi_x = -lo_x, hi_y = -lo_x;
  auto extend = [&](double x, double y) {
    lo_x = std::min(lo_x, x), hi_x = std::max(hi_x, x);
    lo_y = std::min(lo_y, y), hi_y = std::max(hi_y, y);
  };
  for (const auto& [id, p] : s.placements) {
    if (auto pt = std::get_if<geom::Point2>(&p)) extend(pt->x, pt->y);
    if (auto k = std::get_if<geom::CircleRep>(&p)) {
      extend(k->center.x - k->r, k->center.y - k->r);
      extend(k->center.x + k->r, k->center.y + k->r);
    }
  }
  for (const auto& [id, p] : s.placements) {
    if (auto l = std::get_if<geom::LineRep>(&p)) {
      // a line alone contributes its foot point from the origin
      const geom::Point2 foot = l->c * l->normal();
      extend(foot.x, foot.y);
    }
  }
  if (!std::isfinite(lo_x)) lo_x = lo_y = -1.0, hi_x = hi_y = 1.0;
  double span_x = std::max(hi_x - lo_x, 1e-9), span_y = std::max(hi_y - lo_y, 1e-9);
  if (hi_x - lo_x < 1e-9 && hi_y - lo_y < 1e-9) span_x = span_y = 1.0;
  const double scale = std::min(width * (1 - 2 * margin) / span_x, height * (1 - 2 * margin) / span_y);
  const double off_x = (width - scale * span_x) / 2.0 - scale * lo_x;
  const double off_y = (height - scale * span_y) / 2.0 + scale * hi_y;
  auto sx = [&](double x) { return detail::fmt_short(off_x + scale * x); };
  auto sy = [&](double y) { return detail::fmt_short(off_y - scale * y); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
  os << "  <rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
  for (const auto& e : g.entities()) {
    const auto it = s.placements.find(e.id);
    if (it == s.placements.end()) continue;
    if (auto l = std::get_if<geom::LineRep>(&it->second)) {
      const geom::Point2 foot = l->c * l->normal();
      const geom::Point2 d = l->direction();
      const double reach = std::hypot(span_x, span_y) + geom::norm(foot - geom::Point2{lo_x, lo_y});
      const geom::Point2 a = foot - reach * d, b = foot + reach * d;
      os << "  <line class=\"line\" x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\"" << sx(b.x) << "\" y2=\""
         << sy(b.y) << "\" stroke=\"steelblue\" stroke-width=\"1.5\"/>\n";
    } else if (auto k = std::get_if<geom::CircleRep>(&it->second)) {
      os << "  <circle class=\"circle\" cx=\"" << sx(k->center.x) << "\" cy=\"" << sy(k->center.y) << "\" r=\""
         << detail::fmt_short(scale * k->r) << "\" fill=\"none\" stroke=\"darkgreen\" stroke-width=\"1.5\"/>\n";
    }
  }
  for (const auto& c : g.constraints()) {
    if (c.type != ConstraintType::Distance) continue;
    const auto& p = std::get<geom::Point2>(s.placements.at(c.between[0]));
    const auto& q = std::get<geom::Point2>(s.placements.at(c.between[1]));
    os << "  <line class=\"distance\" x1=\"" << sx(p.x) << "\" y1=\"" << sy(p.y) << "\" x2=\"" << sx(q.x) << "\" y2=\""
       << sy(q.y) << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
  }
  for (const auto& e : g.entities()) {
    const auto it = s.placements.find(e.id);
    if (it == s.placements.end()) continue;
    if (auto p = std::get_if<geom::Point2>(&it->second)) {
      os << "  <circle class=\"point\" cx=\"" << sx(p->x) << "\" cy=\"" << sy(p->y)
         << "\" r=\"4\" fill=\"black\"/>\n";
      os << "  <text x=\"" << sx(p->x) << "\" y=\"" << sy(p->y) << "\" dx=\"6\" dy=\"-6\" font-size=\"14\">"
         << detail::xml_escape(e.id) << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace gcs
