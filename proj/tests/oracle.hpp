#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "gcs/gcs.hpp"

// Independent reference computations shared by the unit and acceptance tests.
namespace gcs::oracle {

// Apex of triangle ABC with A = (0,0), B = (ab,0) from the law of cosines;
// the upper root.
inline geom::Point2 triangle_apex(double ab, double ac, double bc) {
  const double cos_a = (ab * ab + ac * ac - bc * bc) / (2 * ab * ac);
  return {ac * cos_a, ac * std::sqrt(std::max(0.0, 1 - cos_a * cos_a))};
}

// True when `s` equals `sample` after some rigid motion, possibly with a
// reflection. The motion is fixed by two placed points that are far apart.
inline bool matches_up_to_motion(const Fragment& s, const Fragment& sample, double tol) {
  std::vector<std::string> pts;
  for (const auto& [id, p] : sample)
    if (std::holds_alternative<geom::Point2>(p) && s.count(id)) pts.push_back(id);
  if (pts.size() < 2) return false;
  std::string a = pts[0], b = pts[1];
  double best = -1;
  for (const auto& x : pts)
    for (const auto& y : pts) {
      const double d = geom::dist(std::get<geom::Point2>(sample.at(x)), std::get<geom::Point2>(sample.at(y)));
      if (d > best) best = d, a = x, b = y;
    }
  const auto sa = std::get<geom::Point2>(s.at(a)), sb = std::get<geom::Point2>(s.at(b));
  const auto da = std::get<geom::Point2>(sample.at(a)), db = std::get<geom::Point2>(sample.at(b));
  for (bool reflect : {false, true}) {
    geom::Motion m;
    try {
      m = geom::rigid_align(sa, sb, da, db, reflect);
    } catch (const Error&) {
      return false;
    }
    Fragment moved;
    for (const auto& [id, p] : s) moved[id] = detail::transform(m, p);
    bool ok = true;
    for (const auto& [id, p] : sample) {
      if (!moved.count(id) || detail::placement_distance(moved.at(id), p) > tol) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

// Random point-only figure for the structure of `g`.
inline Fragment random_points(const ConstraintGraph& g, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-5, 5);
  Fragment f;
  for (const auto& e : g.entities()) f[e.id] = geom::Point2{u(rng), u(rng)};
  return f;
}

// Random quadrilateral ABCD, its parallelogram point E = A + C - B and the
// lines LAD, LBC, LAE, jittered around the reference figure.
inline Fragment random_quad(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> j(-0.5, 0.5);
  const geom::Point2 a{j(rng), j(rng)}, b{1 + j(rng), 3 + j(rng)}, c{4 + j(rng), 3.5 + j(rng)}, d{5 + j(rng), j(rng)};
  const geom::Point2 e = a + (c - b);
  return {{"A", a}, {"B", b}, {"C", c}, {"D", d}, {"E", e},
          {"LAD", geom::line_through_points(a, d)}, {"LAE", geom::line_through_points(a, e)}};
}

// Graph of random structure, mixing kinds, with values drawn at random.
inline ConstraintGraph random_mixed_graph(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(2, 8), kind(0, 3);
  std::uniform_real_distribution<double> len(0.1, 10.0), ang(0.05, 3.0);
  std::vector<Entity> es;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    const std::string id = "e" + std::to_string(i);
    switch (kind(rng)) {
      case 0: es.push_back(Entity::point(id)); break;
      case 1: es.push_back(Entity::line(id)); break;
      case 2: es.push_back(Entity::circle(id)); break;
      default: es.push_back(Entity::circle(id, len(rng))); break;
    }
  }
  std::vector<Constraint> cs;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int tries = 0; tries < 3 * n; ++tries) {
    const Entity& a = es[static_cast<std::size_t>(pick(rng))];
    const Entity& b = es[static_cast<std::size_t>(pick(rng))];
    if (a.id == b.id) continue;
    const EntityType ta = a.kind.type, tb = b.kind.type;
    if (ta == EntityType::Point && tb == EntityType::Point) cs.push_back(Constraint::distance(a.id, b.id, len(rng)));
    else if (ta == EntityType::Line && tb == EntityType::Line) cs.push_back(Constraint::angle(a.id, b.id, ang(rng)));
    else if (ta == EntityType::Point && tb == EntityType::Line)
      cs.push_back(Constraint::point_line_distance(a.id, b.id, len(rng)));
    else if (ta == EntityType::Point || tb == EntityType::Point) cs.push_back(Constraint::incidence(a.id, b.id));
    else cs.push_back(Constraint::tangency(a.id, b.id));
  }
  return build_graph(std::move(es), std::move(cs));
}

}  // namespace gcs::oracle
