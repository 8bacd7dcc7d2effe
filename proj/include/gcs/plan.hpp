#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gcs/decomp.hpp"
#include "gcs/graph.hpp"

namespace gcs {

enum class StepKind { Base, PlaceByTwoLoci, AlignCluster, TriangleMerge };

constexpr std::string_view to_string(StepKind k) {
  switch (k) {
    case StepKind::Base: return "base";
    case StepKind::PlaceByTwoLoci: return "place_by_two_loci";
    case StepKind::AlignCluster: return "align_cluster";
    case StepKind::TriangleMerge: return "triangle_merge";
  }
  return "?";
}

/// Distance between two shared points, either read from a constraint or
/// measured in an already solved frame.
struct VirtualDistance {
  std::string a, b;
  int constraint = -1;
  int source_frame = -1;

  friend bool operator==(const VirtualDistance&, const VirtualDistance&) = default;
};

/// One construction instruction. Every step writes into `frame`, the local
/// coordinate system of the cluster being assembled.
///
///   Base            entities = both endpoints of constraints[0]
///   PlaceByTwoLoci  target placed from constraints[0..1]
///   AlignCluster    copies frame `source` in by matching `entities` (a pair)
///   TriangleMerge   places entities (three points) from virtual_distances;
///                   constraints lists seeds realized by those distances
struct Step {
  StepKind kind = StepKind::Base;
  int frame = 0;
  std::string target;
  std::vector<int> constraints;
  std::vector<std::string> entities;
  int source = -1;
  std::vector<VirtualDistance> virtual_distances;

  friend bool operator==(const Step&, const Step&) = default;
};

struct Plan {
  int root_frame = 0;
  std::vector<Step> steps;
  std::vector<int> residual;  // constraints only checked after construction
};

namespace detail {

class PlanBuilder {
 public:
  PlanBuilder(const DecompositionResult& result, const ConstraintGraph& g) : result_(result), g_(g) {}

  Plan run() {
    Plan plan;
    plan.root_frame = build(result_.final_clusters.front().id);
    plan.steps = std::move(steps_);
    std::set<int> covered;
    for (const auto& s : plan.steps)
      if (s.kind != StepKind::AlignCluster) covered.insert(s.constraints.begin(), s.constraints.end());
    for (int i = 0; i < static_cast<int>(g_.m()); ++i)
      if (!covered.count(i)) plan.residual.push_back(i);
    return plan;
  }

 private:
  const Cluster& cluster(int id) const { return result_.history.at(static_cast<std::size_t>(id)); }
  EntityType type_of(const std::string& id) const { return g_.entity(id).kind.type; }

  [[noreturn]] void unsupported(const std::string& what, const std::string& subject = {}) const {
    throw Error(ErrorCode::UnsupportedStep, what, subject);
  }

  int build(int id) {
    const Cluster& k = cluster(id);
    switch (k.rule) {
      case MergeRule::Seed: return base(k);
      case MergeRule::R2: return merge_r2(k);
      case MergeRule::R1: return merge_r1(k);
    }
    return id;
  }

  int base(const Cluster& k) {
    const Constraint& c = g_.constraints()[k.constraints[0]];
    const EntityType a = type_of(c.between[0]), b = type_of(c.between[1]);
    auto pair = [&](EntityType x, EntityType y) { return (a == x && b == y) || (a == y && b == x); };
    bool ok = false;
    switch (c.type) {
      case ConstraintType::Distance: ok = true; break;
      case ConstraintType::PointLineDistance: ok = true; break;
      case ConstraintType::Angle: ok = true; break;
      case ConstraintType::Incidence:
        ok = pair(EntityType::Point, EntityType::Line) ||
             (pair(EntityType::Point, EntityType::Circle) &&
              g_.entity(a == EntityType::Circle ? c.between[0] : c.between[1]).kind.radius_known);
        break;
      case ConstraintType::Tangency: ok = false; break;
    }
    if (!ok) unsupported("no base placement for a " + std::string(to_string(c.type)) + " seed", c.between[0]);
    Step s;
    s.kind = StepKind::Base;
    s.frame = k.id;
    s.constraints = k.constraints;
    s.entities = {c.between[0], c.between[1]};
    steps_.push_back(std::move(s));
    return k.id;
  }

  int merge_r2(const Cluster& k) {
    const Cluster* first = &cluster(k.children[0]);
    const Cluster* second = &cluster(k.children[1]);
    auto subset = [](const Cluster& x, const Cluster& y) {
      return std::includes(y.entities.begin(), y.entities.end(), x.entities.begin(), x.entities.end());
    };
    if (subset(*first, *second) && !subset(*second, *first)) std::swap(first, second);
    const int frame = build(first->id);
    if (subset(*second, *first)) return frame;  // adds no entity, only residual checks
    const int source = build(second->id);
    Step s;
    s.kind = StepKind::AlignCluster;
    s.frame = frame;
    s.source = source;
    s.entities = alignment_pair(k.shared);
    steps_.push_back(std::move(s));
    return frame;
  }

  std::vector<std::string> alignment_pair(const std::vector<std::string>& shared) const {
    for (std::size_t i = 0; i < shared.size(); ++i)
      for (std::size_t j = i + 1; j < shared.size(); ++j)
        if (type_of(shared[i]) == EntityType::Point && type_of(shared[j]) == EntityType::Point)
          return {shared[i], shared[j]};
    for (const auto& p : shared)
      for (const auto& l : shared)
        if (type_of(p) == EntityType::Point && type_of(l) == EntityType::Line) return {p, l};
    unsupported("clusters share no point pair or point-line pair", shared.front());
  }

  void check_locus(const std::string& target, int ci) const {
    const Constraint& c = g_.constraints()[ci];
    const EntityType t = type_of(target);
    const EntityType o = type_of(c.other(target));
    bool ok = false;
    if (t == EntityType::Point) {
      ok = (c.type == ConstraintType::Distance) ||
           (c.type == ConstraintType::Incidence && (o == EntityType::Line || o == EntityType::Circle)) ||
           (c.type == ConstraintType::PointLineDistance);
    } else if (t == EntityType::Line) {
      ok = (c.type == ConstraintType::Incidence && o == EntityType::Point) || c.type == ConstraintType::Angle;
    }
    if (!ok)
      unsupported("cannot place " + std::string(to_string(t)) + " '" + target + "' from a " +
                      std::string(to_string(c.type)) + " constraint",
                  target);
  }

  int merge_r1(const Cluster& k) {
    const auto& ch = k.children;
    // Case (a): two seed children meet at an entity the third child lacks.
    for (int x = 0; x < 3; ++x) {
      const Cluster& y = cluster(ch[(x + 1) % 3]);
      const Cluster& z = cluster(ch[(x + 2) % 3]);
      if (y.nontrivial() || z.nontrivial()) continue;
      const Cluster& first = y.id < z.id ? y : z;
      const Cluster& second = y.id < z.id ? z : y;
      const std::string target = detail::common(first.entities, second.entities).front();
      check_locus(target, first.constraints[0]);
      check_locus(target, second.constraints[0]);
      const int frame = build(ch[x]);
      Step s;
      s.kind = StepKind::PlaceByTwoLoci;
      s.frame = frame;
      s.target = target;
      s.constraints = {first.constraints[0], second.constraints[0]};
      steps_.push_back(std::move(s));
      return frame;
    }

    // Case (b): assemble a triangle of the three shared points from distances
    // measured inside the children, then bring each child in.
    for (const auto& e : k.shared)
      if (type_of(e) != EntityType::Point) unsupported("triangle merge needs three shared points", e);
    const std::string& p = k.shared[0];  // children 0,1
    const std::string& q = k.shared[1];  // children 0,2
    const std::string& r = k.shared[2];  // children 1,2
    const std::array<std::array<std::string, 2>, 3> pairs{{{p, q}, {p, r}, {q, r}}};

    std::vector<int> frames(3, -1);
    Step tri;
    tri.kind = StepKind::TriangleMerge;
    tri.frame = k.id;
    tri.entities = {p, q, r};
    for (int i = 0; i < 3; ++i) {
      const Cluster& child = cluster(ch[i]);
      VirtualDistance vd{pairs[i][0], pairs[i][1], -1, -1};
      if (!child.nontrivial()) {
        if (g_.constraints()[child.constraints[0]].type != ConstraintType::Distance)
          unsupported("triangle merge seed must be a distance", pairs[i][0]);
        vd.constraint = child.constraints[0];
        tri.constraints.push_back(child.constraints[0]);
      } else {
        frames[i] = build(child.id);
        vd.source_frame = frames[i];
      }
      tri.virtual_distances.push_back(vd);
    }
    steps_.push_back(tri);
    for (int i = 0; i < 3; ++i) {
      if (frames[i] < 0) continue;
      Step s;
      s.kind = StepKind::AlignCluster;
      s.frame = k.id;
      s.source = frames[i];
      s.entities = {pairs[i][0], pairs[i][1]};
      steps_.push_back(std::move(s));
    }
    return k.id;
  }

  const DecompositionResult& result_;
  const ConstraintGraph& g_;
  std::vector<Step> steps_;
};

}  // namespace detail

/// Turns the merge tree of a fully reducible graph into an ordered list of
/// ruler-and-compass steps. Clusters are solved in local frames and brought
/// together by rigid motions; the root frame fixes the gauge.
inline Plan extract_plan(const DecompositionResult& result, const ConstraintGraph& g) {
  if (result.cls.kind != Reducibility::Fully || result.final_clusters.size() != 1)
    throw Error(ErrorCode::NotReducible, "graph does not reduce to a single cluster");
  return detail::PlanBuilder(result, g).run();
}

}  // namespace gcs
