#include "support.hpp"

using namespace gcs;

TEST(Dof, ByEntityKind) {
  EXPECT_EQ(dof(EntityKind::point()), 2);
  EXPECT_EQ(dof(EntityKind::line()), 2);
  EXPECT_EQ(dof(EntityKind::circle(false)), 3);
  EXPECT_EQ(dof(EntityKind::circle(true)), 2);
}

TEST(BuildGraph, ValidTriangle) {
  const ConstraintGraph g = triangle_graph(3, 4, 5);
  EXPECT_EQ(g.n(), 3u);
  EXPECT_EQ(g.m(), 3u);
  EXPECT_TRUE(g.point_only());
}

TEST(BuildGraph, Errors) {
  EXPECT_GCS_ERROR(build_graph({Entity::point("A")}, {Constraint::distance("A", "Z", 1)}), ErrorCode::UnknownEndpoint);
  EXPECT_GCS_ERROR(build_graph({Entity::point("A"), Entity::point("B")}, {Constraint::angle("A", "B", 1)}),
                   ErrorCode::KindMismatch);
  EXPECT_GCS_ERROR(build_graph({Entity::point("A"), Entity::line("L")}, {Constraint::distance("A", "L", 1)}),
                   ErrorCode::KindMismatch);
  EXPECT_GCS_ERROR(build_graph({Entity::point("A"), Entity::point("A")}, {}), ErrorCode::DuplicateId);
  EXPECT_GCS_ERROR(build_graph({Entity::point("A")}, {Constraint::distance("A", "A", 1)}), ErrorCode::SelfLoop);
  EXPECT_GCS_ERROR(build_graph({Entity::point("A"), Entity::point("B")}, {Constraint::distance("A", "B", 0)}),
                   ErrorCode::BadValue);
  EXPECT_GCS_ERROR(build_graph({Entity::point("A"), Entity::point("B")}, {Constraint::distance("A", "B", -2)}),
                   ErrorCode::BadValue);
  EXPECT_GCS_ERROR(build_graph({Entity::line("L"), Entity::line("M")}, {Constraint::angle("L", "M", 0)}),
                   ErrorCode::BadValue);
  EXPECT_GCS_ERROR(build_graph({Entity::line("L"), Entity::line("M")}, {Constraint::angle("L", "M", geom::kPi)}),
                   ErrorCode::BadValue);
}

TEST(InducedSubgraph, Examples) {
  const ConstraintGraph tri = triangle_graph(3, 4, 5);
  const ConstraintGraph ab = induced_subgraph(tri, {"A", "B"});
  EXPECT_EQ(ab.n(), 2u);
  ASSERT_EQ(ab.m(), 1u);
  EXPECT_EQ(ab.constraints()[0], Constraint::distance("A", "B", 3));
  EXPECT_EQ(induced_subgraph(tri, {"A", "B", "C"}), tri);

  const ConstraintGraph k4 = fixture("k4");
  const ConstraintGraph abc = induced_subgraph(k4, {"A", "B", "C"});
  EXPECT_EQ(abc.n(), 3u);
  EXPECT_EQ(abc.m(), 3u);
  EXPECT_GCS_ERROR(induced_subgraph(tri, {"A", "Q"}), ErrorCode::UnknownEndpoint);
}

TEST(Deficiency, Examples) {
  EXPECT_EQ(deficiency(triangle_graph(3, 4, 5)), 0);
  EXPECT_EQ(deficiency(fixture("k4")), 2 * 4 - 3 - 6);
  EXPECT_EQ(deficiency(fixture("three-angle-triangle")), 0);
  EXPECT_GCS_ERROR(deficiency(build_graph({Entity::point("A")}, {})), ErrorCode::TooSmall);
}

TEST(Fixtures, Counts) {
  const ConstraintGraph moser = fixture("moser-spindle");
  EXPECT_EQ(moser.n(), 7u);
  EXPECT_EQ(moser.m(), 11u);
  const ConstraintGraph tat = fixture("three-angle-triangle");
  EXPECT_EQ(tat.n(), 3u);
  double sum = 0;
  for (const auto& c : tat.constraints()) sum += c.value;
  EXPECT_NEAR(sum, geom::kPi, 1e-12);
  const ConstraintGraph k33 = fixture("k33");
  EXPECT_EQ(k33.n(), 6u);
  EXPECT_EQ(k33.m(), 9u);
  const ConstraintGraph quad = fixture("quad-angle");
  EXPECT_EQ(quad.n(), 6u);
  EXPECT_EQ(quad.m(), 9u);
  EXPECT_GCS_ERROR(fixture("nope"), ErrorCode::UnknownFixture);
  for (const auto& name : fixture_names()) EXPECT_NO_THROW(fixture(name)) << name;
}

TEST(Fixtures, K33IsTriangleFree) {
  const ConstraintGraph g = fixture("k33");
  const auto& es = g.entities();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      for (std::size_t k = j + 1; k < es.size(); ++k)
        EXPECT_LT(induced_subgraph(g, {es[i].id, es[j].id, es[k].id}).m(), 3u);
}

TEST(Fixtures, MoserEmbeddingHasUnitEdges) {
  const ConstraintGraph g = fixture("moser-spindle");
  const Fragment f = *fixture_embedding("moser-spindle");
  for (const auto& c : g.constraints()) {
    const auto p = std::get<geom::Point2>(f.at(c.between[0]));
    const auto q = std::get<geom::Point2>(f.at(c.between[1]));
    EXPECT_NEAR(geom::dist(p, q), 1.0, 1e-9) << c.between[0] << c.between[1];
  }
}

TEST(Fixtures, QuadAuxParallelogram) {
  const Fragment f = *fixture_embedding("quad-angle-aux");
  const auto a = std::get<geom::Point2>(f.at("A")), b = std::get<geom::Point2>(f.at("B"));
  const auto c = std::get<geom::Point2>(f.at("C")), e = std::get<geom::Point2>(f.at("E"));
  // AE parallel to and as long as BC.
  EXPECT_NEAR((e - a).x, (c - b).x, 1e-12);
  EXPECT_NEAR((e - a).y, (c - b).y, 1e-12);
}
