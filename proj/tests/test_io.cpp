#include "support.hpp"

using namespace gcs;

TEST(Io, TriangleRoundTrip) {
  const ConstraintGraph g = triangle_graph(3, 4, 5);
  EXPECT_EQ(parse(serialize(g)), g);
}

TEST(Io, FixturesRoundTrip) {
  for (const auto& name : fixture_names()) {
    const ConstraintGraph g = fixture(name);
    EXPECT_EQ(parse(serialize(g)), g) << name;
  }
}

TEST(Io, RandomGraphsRoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const ConstraintGraph g = oracle::random_mixed_graph(rng);
    const ConstraintGraph back = parse(serialize(g));
    ASSERT_EQ(back, g) << serialize(g);
    // Values survive bit for bit.
    for (std::size_t k = 0; k < g.m(); ++k) EXPECT_EQ(back.constraints()[k].value, g.constraints()[k].value);
  }
}

TEST(Io, Errors) {
  EXPECT_GCS_ERROR(parse(R"({"entities":[{"id":"S","kind":"sphere"}],"constraints":[]})"), ErrorCode::SyntaxError);
  EXPECT_GCS_ERROR(parse(R"({"entities":[],"constraints":[{"kind":"distance","between":["A","B"],"value":1}]})"),
                   ErrorCode::UnknownEndpoint);
  EXPECT_GCS_ERROR(parse("{not json"), ErrorCode::SyntaxError);
  EXPECT_GCS_ERROR(parse(R"({"entities":[]})"), ErrorCode::SyntaxError);
  EXPECT_GCS_ERROR(parse(R"({"entities":[{"id":"A","kind":"point"},{"id":"B","kind":"point"}],
    "constraints":[{"kind":"distance","between":["A","B"]}]})"), ErrorCode::SyntaxError);
}

TEST(Io, SolutionRoundTrip) {
  const ConstraintGraph g = triangle_graph(3, 4, 5);
  const Solution s = execute(extract_plan(decompose(g), g), g);
  const Solution back = solution_from_json(to_json(s));
  EXPECT_EQ(back.placements.size(), s.placements.size());
  EXPECT_EQ(detail::fragment_distance(back.placements, s.placements), 0.0);
  EXPECT_EQ(back.branches, s.branches);
}

TEST(Io, MixedSolutionRoundTrip) {
  Solution s;
  s.placements["P"] = geom::Point2{1.5, -2};
  s.placements["L"] = geom::make_line(0.3, -4);
  s.placements["K"] = geom::CircleRep{{1, 2}, 3};
  const Solution back = solution_from_json(to_json(s));
  EXPECT_LT(detail::fragment_distance(back.placements, s.placements), 1e-15);
}
