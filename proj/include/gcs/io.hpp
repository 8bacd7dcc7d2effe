#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gcs/decomp.hpp"
#include "gcs/graph.hpp"
#include "gcs/plan.hpp"
#include "gcs/plan_exec.hpp"
#include "gcs/rigidity.hpp"

namespace gcs {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Graph files
// ---------------------------------------------------------------------------

inline json to_json(const ConstraintGraph& g) {
  json entities = json::array();
  for (const auto& e : g.entities()) {
    json j{{"id", e.id}, {"kind", std::string(to_string(e.kind.type))}};
    if (e.kind.type == EntityType::Circle) {
      j["radius_known"] = e.kind.radius_known;
      if (e.radius) j["radius"] = *e.radius;
    }
    entities.push_back(std::move(j));
  }
  json constraints = json::array();
  for (const auto& c : g.constraints()) {
    json j{{"kind", std::string(to_string(c.type))}, {"between", {c.between[0], c.between[1]}}};
    if (has_value(c.type)) j["value"] = c.value;
    constraints.push_back(std::move(j));
  }
  return {{"entities", std::move(entities)}, {"constraints", std::move(constraints)}};
}

inline std::string serialize(const ConstraintGraph& g) { return to_json(g).dump(); }

namespace detail {

[[noreturn]] inline void syntax(const std::string& what) { throw Error(ErrorCode::SyntaxError, what); }

inline const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) syntax(std::string("missing field '") + key + "'");
  return obj.at(key);
}

inline std::string string_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_string()) syntax(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

inline double number_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_number()) syntax(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

}  // namespace detail

inline ConstraintGraph from_json(const json& doc) {
  using detail::syntax;
  if (!doc.is_object()) syntax("graph document must be a JSON object");
  const json& ents = detail::field(doc, "entities");
  const json& cons = detail::field(doc, "constraints");
  if (!ents.is_array() || !cons.is_array()) syntax("'entities' and 'constraints' must be arrays");

  std::vector<Entity> entities;
  for (const auto& j : ents) {
    std::string id = detail::string_field(j, "id");
    const std::string kind = detail::string_field(j, "kind");
    if (kind == "point") {
      entities.push_back(Entity::point(std::move(id)));
    } else if (kind == "line") {
      entities.push_back(Entity::line(std::move(id)));
    } else if (kind == "circle") {
      bool known = false;
      if (j.contains("radius_known")) {
        if (!j["radius_known"].is_boolean()) syntax("'radius_known' must be a boolean");
        known = j["radius_known"].get<bool>();
      }
      Entity e = Entity::circle(std::move(id));
      e.kind.radius_known = known;
      if (j.contains("radius")) e.radius = detail::number_field(j, "radius");
      entities.push_back(std::move(e));
    } else {
      syntax("unknown entity kind '" + kind + "'");
    }
  }

  std::vector<Constraint> constraints;
  for (const auto& j : cons) {
    const std::string kind = detail::string_field(j, "kind");
    const json& between = detail::field(j, "between");
    if (!between.is_array() || between.size() != 2 || !between[0].is_string() || !between[1].is_string())
      syntax("'between' must hold two entity ids");
    Constraint c;
    c.between = {between[0].get<std::string>(), between[1].get<std::string>()};
    if (kind == "distance") c.type = ConstraintType::Distance;
    else if (kind == "point_line_distance") c.type = ConstraintType::PointLineDistance;
    else if (kind == "incidence") c.type = ConstraintType::Incidence;
    else if (kind == "angle") c.type = ConstraintType::Angle;
    else if (kind == "tangency") c.type = ConstraintType::Tangency;
    else syntax("unknown constraint kind '" + kind + "'");
    if (has_value(c.type)) c.value = detail::number_field(j, "value");
    constraints.push_back(std::move(c));
  }
  return build_graph(std::move(entities), std::move(constraints));
}

inline ConstraintGraph parse(std::string_view text) {
  json doc = json::parse(text.begin(), text.end(), nullptr, false);
  if (doc.is_discarded()) throw Error(ErrorCode::SyntaxError, "input is not valid JSON");
  return from_json(doc);
}

// ---------------------------------------------------------------------------
// Analysis results
// ---------------------------------------------------------------------------

inline json to_json(const Diagnosis& d) {
  json j{{"diagnosis", std::string(to_string(d.verdict))}};
  if (d.verdict == Verdict::Under) j["deficit"] = d.deficit;
  if (d.verdict == Verdict::Over) j["witness"] = d.witness;
  return j;
}

inline json to_json(const Cluster& k) {
  json j{{"id", k.id}, {"entities", k.entities}, {"constraints", k.constraints}, {"rule", std::string(to_string(k.rule))}};
  if (k.nontrivial()) {
    j["children"] = k.children;
    j["shared"] = k.shared;
  }
  if (!k.rigid) j["rigid"] = false;
  return j;
}

inline json to_json(const DecompositionResult& r) {
  json clusters = json::array();
  for (const auto& k : r.final_clusters) clusters.push_back(to_json(k));
  json log = json::array();
  for (const auto& m : r.merge_log)
    log.push_back({{"rule", std::string(to_string(m.rule))}, {"result", m.result}, {"children", m.children}, {"shared", m.shared}});
  return {{"class", std::string(to_string(r.cls.kind))},
          {"nontrivial_cluster_count", r.cls.nontrivial_cluster_count},
          {"clusters", std::move(clusters)},
          {"merge_log", std::move(log)}};
}

inline json to_json(const Plan& p) {
  json steps = json::array();
  for (const auto& s : p.steps) {
    json j{{"kind", std::string(to_string(s.kind))}, {"frame", s.frame}};
    switch (s.kind) {
      case StepKind::Base:
        j["entities"] = s.entities;
        j["constraint"] = s.constraints.at(0);
        break;
      case StepKind::PlaceByTwoLoci:
        j["target"] = s.target;
        j["constraints"] = s.constraints;
        break;
      case StepKind::AlignCluster:
        j["source"] = s.source;
        j["shared_pair"] = s.entities;
        break;
      case StepKind::TriangleMerge: {
        j["points"] = s.entities;
        json vds = json::array();
        for (const auto& vd : s.virtual_distances) {
          json v{{"between", {vd.a, vd.b}}};
          if (vd.constraint >= 0) v["constraint"] = vd.constraint;
          else v["source"] = vd.source_frame;
          vds.push_back(std::move(v));
        }
        j["virtual_distances"] = std::move(vds);
        break;
      }
    }
    steps.push_back(std::move(j));
  }
  return {{"root_frame", p.root_frame}, {"steps", std::move(steps)}, {"residual", p.residual}};
}

// ---------------------------------------------------------------------------
// Solutions
// ---------------------------------------------------------------------------

inline json to_json(const Placement& p) {
  if (auto pt = std::get_if<geom::Point2>(&p)) return {{"point", {pt->x, pt->y}}};
  if (auto l = std::get_if<geom::LineRep>(&p)) return {{"line", {{"theta", l->theta}, {"c", l->c}}}};
  const auto& k = std::get<geom::CircleRep>(p);
  return {{"circle", {{"center", {k.center.x, k.center.y}}, {"r", k.r}}}};
}

inline json to_json(const Solution& s) {
  json placements = json::object();
  for (const auto& [id, p] : s.placements) placements[id] = to_json(p);
  json j{{"placements", std::move(placements)}, {"branches", s.branches}};
  if (!s.degenerate.empty()) j["degenerate"] = s.degenerate;
  return j;
}

inline Solution solution_from_json(const json& doc) {
  using detail::syntax;
  auto pair = [](const json& v) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) syntax("expected [x, y]");
    return geom::Point2{v[0].get<double>(), v[1].get<double>()};
  };
  Solution s;
  const json& placements = detail::field(doc, "placements");
  if (!placements.is_object()) syntax("'placements' must be an object");
  for (const auto& [id, p] : placements.items()) {
    if (p.contains("point")) {
      s.placements[id] = pair(p["point"]);
    } else if (p.contains("line")) {
      s.placements[id] = geom::make_line(detail::number_field(p["line"], "theta"), detail::number_field(p["line"], "c"));
    } else if (p.contains("circle")) {
      s.placements[id] = geom::CircleRep{pair(detail::field(p["circle"], "center")), detail::number_field(p["circle"], "r")};
    } else {
      syntax("placement for '" + id + "' has no point, line or circle");
    }
  }
  if (doc.contains("branches") && doc["branches"].is_array())
    for (const auto& b : doc["branches"]) s.branches.push_back(b.get<int>());
  if (doc.contains("degenerate") && doc["degenerate"].is_array())
    for (const auto& d : doc["degenerate"]) s.degenerate.push_back(d.get<std::string>());
  return s;
}

}  // namespace gcs
