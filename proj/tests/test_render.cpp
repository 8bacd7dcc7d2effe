#include "support.hpp"

#include <regex>

using namespace gcs;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Dot, Triangle) {
  const std::string dot = render_dot(triangle_graph(3, 4, 5));
  EXPECT_EQ(dot.rfind("graph constraints {", 0), 0u);
  EXPECT_EQ(count(dot, "[shape=circle]"), 3u);
  EXPECT_EQ(count(dot, " -- "), 3u);
  EXPECT_NE(dot.find("label=\"distance 3\""), std::string::npos);
}

TEST(Dot, ShapesByKind) {
  const std::string dot = render_dot(fixture("malfatti"));
  EXPECT_EQ(count(dot, "[shape=circle]"), 3u);
  EXPECT_EQ(count(dot, "[shape=box]"), 3u);
  EXPECT_EQ(count(dot, "[shape=doublecircle]"), 3u);
  EXPECT_NE(dot.find("label=\"tangency\""), std::string::npos);
}

TEST(Svg, TriangleHasLabelledDots) {
  const ConstraintGraph g = triangle_graph(3, 4, 5);
  const Solution s = execute(extract_plan(decompose(g), g), g);
  const std::string svg = render_svg(g, s);
  EXPECT_NE(svg.find("viewBox=\"0 0 800 600\""), std::string::npos);
  EXPECT_EQ(count(svg, "class=\"point\""), 3u);
  for (const char* id : {">A<", ">B<", ">C<"}) EXPECT_NE(svg.find(id), std::string::npos);
}

TEST(Svg, FitsCanvasWithMargin) {
  const ConstraintGraph g = fixture("moser-spindle");
  const Solution s = execute(extract_plan(decompose(g), g), g);
  const std::string svg = render_svg(g, s);
  const std::regex dot_re("class=\"point\" cx=\"([-0-9.]+)\" cy=\"([-0-9.]+)\"");
  double lo_x = 1e9, hi_x = -1e9, lo_y = 1e9, hi_y = -1e9;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), dot_re); it != std::sregex_iterator(); ++it) {
    const double x = std::stod((*it)[1]), y = std::stod((*it)[2]);
    lo_x = std::min(lo_x, x), hi_x = std::max(hi_x, x), lo_y = std::min(lo_y, y), hi_y = std::max(hi_y, y);
  }
  EXPECT_GE(lo_x, 40 - 0.01);
  EXPECT_LE(hi_x, 760 + 0.01);
  EXPECT_GE(lo_y, 30 - 0.01);
  EXPECT_LE(hi_y, 570 + 0.01);
  // One axis fills the usable band exactly.
  EXPECT_TRUE(std::abs((hi_x - lo_x) - 720) < 0.02 || std::abs((hi_y - lo_y) - 540) < 0.02);
}

TEST(Svg, DrawsLinesAndCircles) {
  Solution s;
  s.placements["P"] = geom::Point2{0, 0};
  s.placements["L"] = geom::make_line(geom::kPi / 2, 0);
  s.placements["K"] = geom::CircleRep{{0, 0}, 1};
  const ConstraintGraph g = build_graph({Entity::point("P"), Entity::line("L"), Entity::circle("K", 1)},
                                        {Constraint::incidence("P", "L")});
  const std::string svg = render_svg(g, s);
  EXPECT_EQ(count(svg, "class=\"line\""), 1u);
  EXPECT_EQ(count(svg, "class=\"circle\""), 1u);
}
