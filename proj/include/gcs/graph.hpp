#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gcs/error.hpp"

namespace gcs {

enum class EntityType { Point, Line, Circle };

struct EntityKind {
  EntityType type = EntityType::Point;
  bool radius_known = false;  // circles only

  static constexpr EntityKind point() { return {EntityType::Point, false}; }
  static constexpr EntityKind line() { return {EntityType::Line, false}; }
  static constexpr EntityKind circle(bool radius_known) { return {EntityType::Circle, radius_known}; }

  friend bool operator==(const EntityKind& a, const EntityKind& b) {
    if (a.type != b.type) return false;
    return a.type != EntityType::Circle || a.radius_known == b.radius_known;
  }
};

/// Degrees of freedom of an entity in the plane. Only a circle whose radius
/// is itself unknown carries a third parameter.
constexpr int dof(EntityKind kind) {
  return (kind.type == EntityType::Circle && !kind.radius_known) ? 3 : 2;
}

constexpr std::string_view to_string(EntityType t) {
  switch (t) {
    case EntityType::Point: return "point";
    case EntityType::Line: return "line";
    case EntityType::Circle: return "circle";
  }
  return "?";
}

struct Entity {
  std::string id;
  EntityKind kind;
  std::optional<double> radius;  // present iff kind is a known-radius circle

  static Entity point(std::string id) { return {std::move(id), EntityKind::point(), std::nullopt}; }
  static Entity line(std::string id) { return {std::move(id), EntityKind::line(), std::nullopt}; }
  static Entity circle(std::string id) { return {std::move(id), EntityKind::circle(false), std::nullopt}; }
  static Entity circle(std::string id, double radius) {
    return {std::move(id), EntityKind::circle(true), radius};
  }

  friend bool operator==(const Entity&, const Entity&) = default;
};

enum class ConstraintType { Distance, PointLineDistance, Incidence, Angle, Tangency };

constexpr std::string_view to_string(ConstraintType t) {
  switch (t) {
    case ConstraintType::Distance: return "distance";
    case ConstraintType::PointLineDistance: return "point_line_distance";
    case ConstraintType::Incidence: return "incidence";
    case ConstraintType::Angle: return "angle";
    case ConstraintType::Tangency: return "tangency";
  }
  return "?";
}

constexpr bool has_value(ConstraintType t) {
  return t == ConstraintType::Distance || t == ConstraintType::PointLineDistance ||
         t == ConstraintType::Angle;
}

/// A binary constraint; each one removes exactly one degree of freedom.
struct Constraint {
  std::array<std::string, 2> between;
  ConstraintType type = ConstraintType::Distance;
  double value = 0.0;  // length or radians; unused by incidence and tangency

  static Constraint distance(std::string a, std::string b, double d) {
    return {{std::move(a), std::move(b)}, ConstraintType::Distance, d};
  }
  static Constraint point_line_distance(std::string p, std::string l, double d) {
    return {{std::move(p), std::move(l)}, ConstraintType::PointLineDistance, d};
  }
  static Constraint incidence(std::string a, std::string b) {
    return {{std::move(a), std::move(b)}, ConstraintType::Incidence, 0.0};
  }
  static Constraint angle(std::string l1, std::string l2, double radians) {
    return {{std::move(l1), std::move(l2)}, ConstraintType::Angle, radians};
  }
  static Constraint tangency(std::string a, std::string b) {
    return {{std::move(a), std::move(b)}, ConstraintType::Tangency, 0.0};
  }

  bool touches(std::string_view id) const { return between[0] == id || between[1] == id; }
  const std::string& other(std::string_view id) const { return between[0] == id ? between[1] : between[0]; }

  friend bool operator==(const Constraint& a, const Constraint& b) {
    if (a.between != b.between || a.type != b.type) return false;
    return !has_value(a.type) || a.value == b.value;
  }
};

namespace detail {

inline bool admissible(ConstraintType type, EntityType a, EntityType b) {
  auto is = [&](EntityType x, EntityType y) { return (a == x && b == y) || (a == y && b == x); };
  switch (type) {
    case ConstraintType::Distance: return is(EntityType::Point, EntityType::Point);
    case ConstraintType::PointLineDistance: return is(EntityType::Point, EntityType::Line);
    case ConstraintType::Incidence:
      return is(EntityType::Point, EntityType::Line) || is(EntityType::Point, EntityType::Circle);
    case ConstraintType::Angle: return is(EntityType::Line, EntityType::Line);
    case ConstraintType::Tangency:
      return is(EntityType::Line, EntityType::Circle) || is(EntityType::Circle, EntityType::Circle);
  }
  return false;
}

}  // namespace detail

class ConstraintGraph;
ConstraintGraph build_graph(std::vector<Entity> entities, std::vector<Constraint> constraints);

/// Immutable constraint graph: entities are the vertices, constraints the
/// (multi)edges. Only build_graph() constructs one, so every instance is valid.
class ConstraintGraph {
 public:
  ConstraintGraph() = default;

  const std::vector<Entity>& entities() const { return entities_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  std::size_t n() const { return entities_.size(); }
  std::size_t m() const { return constraints_.size(); }

  bool contains(std::string_view id) const { return index_.count(std::string(id)) != 0; }

  std::optional<std::size_t> index_of(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const Entity& entity(std::string_view id) const {
    auto idx = index_of(id);
    if (!idx) throw Error(ErrorCode::UnknownEndpoint, "unknown entity '" + std::string(id) + "'", std::string(id));
    return entities_[*idx];
  }

  bool point_only() const {
    for (const auto& e : entities_)
      if (e.kind.type != EntityType::Point) return false;
    for (const auto& c : constraints_)
      if (c.type != ConstraintType::Distance) return false;
    return true;
  }

  friend bool operator==(const ConstraintGraph& a, const ConstraintGraph& b) {
    return a.entities_ == b.entities_ && a.constraints_ == b.constraints_;
  }

 private:
  friend ConstraintGraph build_graph(std::vector<Entity>, std::vector<Constraint>);

  std::vector<Entity> entities_;
  std::vector<Constraint> constraints_;
  std::unordered_map<std::string, std::size_t> index_;
};

inline ConstraintGraph build_graph(std::vector<Entity> entities, std::vector<Constraint> constraints) {
  ConstraintGraph g;
  for (std::size_t i = 0; i < entities.size(); ++i) {
    const Entity& e = entities[i];
    if (e.id.empty()) throw Error(ErrorCode::BadValue, "entity id must be nonempty");
    if (!g.index_.emplace(e.id, i).second)
      throw Error(ErrorCode::DuplicateId, "duplicate entity id '" + e.id + "'", e.id);
    const bool wants_radius = e.kind.type == EntityType::Circle && e.kind.radius_known;
    if (wants_radius != e.radius.has_value())
      throw Error(ErrorCode::BadValue, "radius must be given exactly for known-radius circles ('" + e.id + "')", e.id);
    if (e.radius && !(*e.radius > 0.0 && std::isfinite(*e.radius)))
      throw Error(ErrorCode::BadValue, "circle radius must be positive ('" + e.id + "')", e.id);
  }

  for (const Constraint& c : constraints) {
    for (const auto& end : c.between) {
      if (!g.index_.count(end))
        throw Error(ErrorCode::UnknownEndpoint, "constraint endpoint '" + end + "' is not an entity", end);
    }
    if (c.between[0] == c.between[1])
      throw Error(ErrorCode::SelfLoop, "constraint joins '" + c.between[0] + "' to itself", c.between[0]);
    const auto ta = entities[g.index_.at(c.between[0])].kind.type;
    const auto tb = entities[g.index_.at(c.between[1])].kind.type;
    if (!detail::admissible(c.type, ta, tb))
      throw Error(ErrorCode::KindMismatch,
                  std::string(to_string(c.type)) + " cannot join a " + std::string(to_string(ta)) + " and a " +
                      std::string(to_string(tb)),
                  c.between[0]);
    const double v = c.value;
    bool ok = true;
    switch (c.type) {
      case ConstraintType::Distance: ok = std::isfinite(v) && v > 0.0; break;
      case ConstraintType::PointLineDistance: ok = std::isfinite(v) && v >= 0.0; break;
      case ConstraintType::Angle: ok = v > 0.0 && v < std::numbers::pi; break;
      default: break;
    }
    if (!ok)
      throw Error(ErrorCode::BadValue,
                  "bad " + std::string(to_string(c.type)) + " value between '" + c.between[0] + "' and '" +
                      c.between[1] + "'",
                  c.between[0]);
  }

  g.entities_ = std::move(entities);
  g.constraints_ = std::move(constraints);
  return g;
}

/// Subgraph on `ids` holding exactly the constraints with both endpoints in
/// `ids`. Entity and constraint order follow `g`.
template <typename Ids>
ConstraintGraph induced_subgraph(const ConstraintGraph& g, const Ids& ids) {
  std::vector<bool> keep(g.n(), false);
  for (const auto& id : ids) {
    auto idx = g.index_of(id);
    if (!idx) throw Error(ErrorCode::UnknownEndpoint, "unknown entity '" + std::string(id) + "'", std::string(id));
    keep[*idx] = true;
  }
  std::vector<Entity> es;
  for (std::size_t i = 0; i < g.n(); ++i)
    if (keep[i]) es.push_back(g.entities()[i]);
  std::vector<Constraint> cs;
  for (const auto& c : g.constraints())
    if (keep[*g.index_of(c.between[0])] && keep[*g.index_of(c.between[1])]) cs.push_back(c);
  return build_graph(std::move(es), std::move(cs));
}

inline ConstraintGraph induced_subgraph(const ConstraintGraph& g, std::initializer_list<std::string_view> ids) {
  return induced_subgraph<std::initializer_list<std::string_view>>(g, ids);
}

inline int total_dof(const ConstraintGraph& g) {
  int sum = 0;
  for (const auto& e : g.entities()) sum += dof(e.kind);
  return sum;
}

/// Σdof − 3 − m: zero for an exact count, positive when constraints are missing.
inline int deficiency(const ConstraintGraph& g) {
  if (g.n() < 2) throw Error(ErrorCode::TooSmall, "at least two entities are needed");
  return total_dof(g) - 3 - static_cast<int>(g.m());
}

}  // namespace gcs
