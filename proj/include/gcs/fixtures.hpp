#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcs/geom.hpp"
#include "gcs/graph.hpp"
#include "gcs/plan_exec.hpp"

namespace gcs {

/// Triangle on points A, B, C with constraints in the order AB, AC, BC.
inline ConstraintGraph triangle_graph(double ab, double ac, double bc) {
  return build_graph({Entity::point("A"), Entity::point("B"), Entity::point("C")},
                     {Constraint::distance("A", "B", ab), Constraint::distance("A", "C", ac),
                      Constraint::distance("B", "C", bc)});
}

namespace detail {

inline std::vector<Entity> points(std::initializer_list<const char*> ids) {
  std::vector<Entity> out;
  for (const char* id : ids) out.push_back(Entity::point(id));
  return out;
}

inline Constraint unit(const char* a, const char* b) { return Constraint::distance(a, b, 1.0); }

// Quadrilateral ABCD used by both quad-angle fixtures; E completes the
// parallelogram ABCE so that AE is parallel to and as long as BC.
inline Fragment quad_embedding() {
  using geom::Point2;
  const Point2 a{0.0, 0.0}, b{1.0, 3.0}, c{4.0, 3.5}, d{5.0, 0.0};
  const Point2 e = a + (c - b);
  return {{"A", a},
          {"B", b},
          {"C", c},
          {"D", d},
          {"E", e},
          {"LAD", geom::line_through_points(a, d)},
          {"LBC", geom::line_through_points(b, c)},
          {"LAE", geom::line_through_points(a, e)}};
}

inline ConstraintGraph quad_angle_structure() {
  auto es = points({"A", "B", "C", "D"});
  es.push_back(Entity::line("LAD"));
  es.push_back(Entity::line("LBC"));
  return build_graph(std::move(es),
                     {Constraint::incidence("A", "LAD"), Constraint::incidence("D", "LAD"),
                      Constraint::incidence("B", "LBC"), Constraint::incidence("C", "LBC"), unit("A", "B"),
                      unit("B", "C"), unit("C", "D"), unit("D", "A"), Constraint::angle("LAD", "LBC", 1.0)});
}

inline ConstraintGraph quad_angle_aux_structure() {
  auto es = points({"A", "B", "C", "D", "E"});
  es.push_back(Entity::line("LAD"));
  es.push_back(Entity::line("LAE"));
  // The angle seed comes early so the A/LAD/LAE triangle forms first.
  return build_graph(std::move(es),
                     {Constraint::incidence("A", "LAD"), Constraint::incidence("A", "LAE"),
                      Constraint::angle("LAD", "LAE", 1.0), Constraint::incidence("D", "LAD"), unit("D", "A"),
                      Constraint::incidence("E", "LAE"), unit("A", "E"), unit("E", "C"), unit("C", "D"),
                      unit("C", "B"), unit("A", "B")});
}

inline Fragment moser_embedding() {
  using geom::Point2;
  const double spread = 2.0 * std::asin(1.0 / (2.0 * std::sqrt(3.0)));
  auto polar = [](double r, double a) { return Point2{r * std::cos(a), r * std::sin(a)}; };
  const double h = std::sqrt(3.0);
  const double a1 = 0.0, a2 = spread;
  const double side = geom::kPi / 6.0;
  return {{"A", Point2{0.0, 0.0}},     {"B", polar(1.0, a1 - side)}, {"C", polar(1.0, a1 + side)},
          {"D", polar(h, a1)},         {"E", polar(1.0, a2 - side)}, {"F", polar(1.0, a2 + side)},
          {"G", polar(h, a2)}};
}

}  // namespace detail

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{
      "triangle",   "k4",  "path3",  "moser-spindle", "three-prism",   "k33",
      "three-angle-triangle", "degenerate-triangle", "quad-angle", "quad-angle-aux", "cramer-castillon", "malfatti"};
  return names;
}

/// Reference placement for fixtures whose constraint values were measured from
/// a concrete figure.
inline std::optional<Fragment> fixture_embedding(std::string_view name) {
  if (name == "moser-spindle") return detail::moser_embedding();
  if (name == "quad-angle" || name == "quad-angle-aux") {
    Fragment f = detail::quad_embedding();
    if (name == "quad-angle") {
      f.erase("E");
      f.erase("LAE");
    } else {
      f.erase("LBC");
    }
    return f;
  }
  if (name == "triangle") {
    return Fragment{{"A", geom::Point2{0.0, 0.0}},
                    {"B", geom::Point2{1.0, 0.0}},
                    {"C", geom::Point2{0.5, std::sqrt(3.0) / 2.0}}};
  }
  return std::nullopt;
}

inline ConstraintGraph fixture(std::string_view name) {
  using detail::points;
  using detail::unit;
  if (name == "triangle") return triangle_graph(1.0, 1.0, 1.0);
  if (name == "k4")
    return build_graph(points({"A", "B", "C", "D"}),
                       {unit("A", "B"), unit("A", "C"), unit("A", "D"), unit("B", "C"), unit("B", "D"), unit("C", "D")});
  if (name == "path3") return build_graph(points({"A", "B", "C"}), {unit("A", "B"), unit("B", "C")});
  if (name == "moser-spindle") {
    // Rhombi ABCD and AEFG share apex A; tip edge DG closes the spindle.
    return build_graph(points({"A", "B", "C", "D", "E", "F", "G"}),
                       {unit("A", "B"), unit("A", "C"), unit("B", "C"), unit("B", "D"), unit("C", "D"), unit("A", "E"),
                        unit("A", "F"), unit("E", "F"), unit("E", "G"), unit("F", "G"), unit("D", "G")});
  }
  if (name == "three-prism")
    return build_graph(points({"A", "B", "C", "D", "E", "F"}),
                       {unit("A", "B"), unit("B", "C"), unit("C", "A"), unit("D", "E"), unit("E", "F"), unit("F", "D"),
                        unit("A", "D"), unit("B", "E"), unit("C", "F")});
  if (name == "k33")
    return build_graph(points({"A1", "A2", "A3", "B1", "B2", "B3"}),
                       {unit("A1", "B1"), unit("A1", "B2"), unit("A1", "B3"), unit("A2", "B1"), unit("A2", "B2"),
                        unit("A2", "B3"), unit("A3", "B1"), unit("A3", "B2"), unit("A3", "B3")});
  if (name == "three-angle-triangle") {
    const double third = geom::kPi / 3.0;
    return build_graph({Entity::line("L1"), Entity::line("L2"), Entity::line("L3")},
                       {Constraint::angle("L1", "L2", third), Constraint::angle("L2", "L3", third),
                        Constraint::angle("L1", "L3", third)});
  }
  if (name == "degenerate-triangle") return triangle_graph(1.0, 1.0, 2.0);
  if (name == "quad-angle") return measure(detail::quad_angle_structure(), *fixture_embedding(name));
  if (name == "quad-angle-aux") return measure(detail::quad_angle_aux_structure(), *fixture_embedding(name));
  if (name == "cramer-castillon") {
    // Circle of centre O through M, N, P (radius as three distances); the
    // given points A, B, C are pinned to O; each side of MNP passes through
    // one of them.
    auto es = points({"O", "A", "B", "C", "M", "N", "P"});
    for (const char* l : {"LMN", "LNP", "LPM"}) es.push_back(Entity::line(l));
    return build_graph(
        std::move(es),
        {Constraint::distance("O", "A", 2.0), Constraint::distance("O", "B", 2.5), Constraint::distance("O", "C", 1.5),
         Constraint::distance("A", "B", 3.0), Constraint::distance("B", "C", 3.2), Constraint::distance("O", "M", 4.0),
         Constraint::distance("O", "N", 4.0), Constraint::distance("O", "P", 4.0), Constraint::incidence("M", "LMN"),
         Constraint::incidence("N", "LMN"), Constraint::incidence("N", "LNP"), Constraint::incidence("P", "LNP"),
         Constraint::incidence("P", "LPM"), Constraint::incidence("M", "LPM"), Constraint::incidence("A", "LMN"),
         Constraint::incidence("B", "LNP"), Constraint::incidence("C", "LPM")});
  }
  if (name == "malfatti") {
    // Triangle ABC with side lines; circles K1, K2, K3 of unknown radius sit
    // in the corners A, B, C and touch each other.
    auto es = points({"A", "B", "C"});
    for (const char* l : {"LAB", "LBC", "LCA"}) es.push_back(Entity::line(l));
    for (const char* k : {"K1", "K2", "K3"}) es.push_back(Entity::circle(k));
    return build_graph(
        std::move(es),
        {Constraint::distance("A", "B", 3.0), Constraint::distance("B", "C", 4.0), Constraint::distance("C", "A", 5.0),
         Constraint::incidence("A", "LAB"), Constraint::incidence("B", "LAB"), Constraint::incidence("B", "LBC"),
         Constraint::incidence("C", "LBC"), Constraint::incidence("C", "LCA"), Constraint::incidence("A", "LCA"),
         Constraint::tangency("LAB", "K1"), Constraint::tangency("LCA", "K1"), Constraint::tangency("LAB", "K2"),
         Constraint::tangency("LBC", "K2"), Constraint::tangency("LBC", "K3"), Constraint::tangency("LCA", "K3"),
         Constraint::tangency("K1", "K2"), Constraint::tangency("K2", "K3"), Constraint::tangency("K1", "K3")});
  }
  throw Error(ErrorCode::UnknownFixture, "unknown fixture '" + std::string(name) + "'", std::string(name));
}

}  // namespace gcs
