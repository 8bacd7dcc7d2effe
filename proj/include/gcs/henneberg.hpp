#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gcs/graph.hpp"
#include "gcs/rigidity.hpp"

namespace gcs {

// Structural edges carry this value until a realization assigns lengths.
inline constexpr double kPlaceholderLength = 1.0;

struct HennebergStep {
  enum class Op { H1, H2 };
  Op op = Op::H1;
  std::string added;
  std::array<std::string, 2> pair;  // H1: attachment vertices; H2: the split edge
  std::string third;                // H2 only

  friend bool operator==(const HennebergStep&, const HennebergStep&) = default;
};

/// A base edge plus the vertex additions that rebuild a graph, in the order
/// they are applied.
struct HennebergSequence {
  std::array<std::string, 2> base;
  std::vector<HennebergStep> steps;
};

namespace detail {

inline void require_point_only(const ConstraintGraph& g) {
  if (!g.point_only()) throw Error(ErrorCode::KindMismatch, "Henneberg operations apply to point-distance graphs");
}

inline void require_fresh(const ConstraintGraph& g, const std::string& id) {
  if (g.contains(id)) throw Error(ErrorCode::DuplicateId, "entity '" + id + "' already exists", id);
}

inline void require_present(const ConstraintGraph& g, const std::string& id) {
  if (!g.contains(id)) throw Error(ErrorCode::UnknownEndpoint, "unknown entity '" + id + "'", id);
}

inline std::vector<std::string> neighbours(const ConstraintGraph& g, const std::string& id) {
  std::vector<std::string> out;
  for (const auto& c : g.constraints())
    if (c.touches(id)) out.push_back(c.other(id));
  return out;
}

}  // namespace detail

inline ConstraintGraph extend_h1(const ConstraintGraph& g, const std::string& new_id, const std::string& u,
                                 const std::string& w) {
  detail::require_point_only(g);
  detail::require_fresh(g, new_id);
  detail::require_present(g, u);
  detail::require_present(g, w);
  if (u == w) throw Error(ErrorCode::BadValue, "H1 needs two distinct attachment vertices", u);
  auto es = g.entities();
  auto cs = g.constraints();
  es.push_back(Entity::point(new_id));
  cs.push_back(Constraint::distance(new_id, u, kPlaceholderLength));
  cs.push_back(Constraint::distance(new_id, w, kPlaceholderLength));
  return build_graph(std::move(es), std::move(cs));
}

inline ConstraintGraph extend_h2(const ConstraintGraph& g, const std::string& new_id, const std::string& u,
                                 const std::string& w, const std::string& z) {
  detail::require_point_only(g);
  detail::require_fresh(g, new_id);
  for (const auto* id : {&u, &w, &z}) detail::require_present(g, *id);
  if (z == u || z == w) throw Error(ErrorCode::BadValue, "H2 third vertex must lie off the split edge", z);
  auto cs = g.constraints();
  auto hit = std::find_if(cs.begin(), cs.end(), [&](const Constraint& c) { return c.touches(u) && c.touches(w) && u != w; });
  if (hit == cs.end()) throw Error(ErrorCode::MissingEdge, "no edge between '" + u + "' and '" + w + "'", u);
  cs.erase(hit);
  auto es = g.entities();
  es.push_back(Entity::point(new_id));
  cs.push_back(Constraint::distance(new_id, u, kPlaceholderLength));
  cs.push_back(Constraint::distance(new_id, w, kPlaceholderLength));
  cs.push_back(Constraint::distance(new_id, z, kPlaceholderLength));
  return build_graph(std::move(es), std::move(cs));
}

inline ConstraintGraph apply_step(const ConstraintGraph& g, const HennebergStep& s) {
  if (s.op == HennebergStep::Op::H1) return extend_h1(g, s.added, s.pair[0], s.pair[1]);
  return extend_h2(g, s.added, s.pair[0], s.pair[1], s.third);
}

inline ConstraintGraph replay(const HennebergSequence& seq) {
  ConstraintGraph g = build_graph({Entity::point(seq.base[0]), Entity::point(seq.base[1])},
                                  {Constraint::distance(seq.base[0], seq.base[1], kPlaceholderLength)});
  for (const auto& s : seq.steps) g = apply_step(g, s);
  return g;
}

/// Random minimally rigid graph on vertices v0..v{n-1}: a base edge grown by
/// H1 steps, or H2 steps with probability p_h2 once a third vertex exists.
inline ConstraintGraph random_laman(int n, std::uint64_t seed, double p_h2) {
  if (n < 2) throw Error(ErrorCode::BadValue, "random_laman needs n >= 2");
  if (!(p_h2 >= 0.0 && p_h2 <= 1.0)) throw Error(ErrorCode::BadValue, "p_h2 must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  auto name = [](int i) { return "v" + std::to_string(i); };
  auto pick = [&](int bound) { return static_cast<int>(std::uniform_int_distribution<int>(0, bound - 1)(rng)); };

  ConstraintGraph g = build_graph({Entity::point(name(0)), Entity::point(name(1))},
                                  {Constraint::distance(name(0), name(1), kPlaceholderLength)});
  std::bernoulli_distribution use_h2(p_h2);
  for (int k = 2; k < n; ++k) {
    const int have = static_cast<int>(g.n());
    if (have >= 3 && use_h2(rng)) {
      const auto& edge = g.constraints()[pick(static_cast<int>(g.m()))];
      std::vector<std::string> others;
      for (const auto& e : g.entities())
        if (!edge.touches(e.id)) others.push_back(e.id);
      const std::string z = others[pick(static_cast<int>(others.size()))];
      g = extend_h2(g, name(k), edge.between[0], edge.between[1], z);
    } else {
      const int a = pick(have);
      int b = pick(have - 1);
      if (b >= a) ++b;
      g = extend_h1(g, name(k), g.entities()[a].id, g.entities()[b].id);
    }
  }
  return g;
}

namespace detail {

inline ConstraintGraph without_vertex(const ConstraintGraph& g, const std::string& id) {
  std::vector<std::string> keep;
  for (const auto& e : g.entities())
    if (e.id != id) keep.push_back(e.id);
  return induced_subgraph(g, keep);
}

inline bool reduce(const ConstraintGraph& g, HennebergSequence& seq) {
  if (g.n() == 2) {
    if (g.m() != 1) return false;
    seq.base = g.constraints()[0].between;
    return true;
  }
  for (const auto& e : g.entities()) {
    auto nb = neighbours(g, e.id);
    std::set<std::string> distinct(nb.begin(), nb.end());
    if (distinct.size() != nb.size()) continue;
    if (nb.size() == 2) {
      if (!reduce(without_vertex(g, e.id), seq)) continue;
      seq.steps.push_back({HennebergStep::Op::H1, e.id, {nb[0], nb[1]}, {}});
      return true;
    }
    if (nb.size() == 3) {
      const ConstraintGraph rest = without_vertex(g, e.id);
      const std::array<std::array<int, 3>, 3> splits{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
      for (const auto& [a, b, z] : splits) {
        auto cs = rest.constraints();
        cs.push_back(Constraint::distance(nb[a], nb[b], kPlaceholderLength));
        ConstraintGraph candidate = build_graph(rest.entities(), std::move(cs));
        if (!is_laman(candidate)) continue;
        const std::size_t mark = seq.steps.size();
        if (!reduce(candidate, seq)) {
          seq.steps.resize(mark);
          continue;
        }
        seq.steps.push_back({HennebergStep::Op::H2, e.id, {nb[a], nb[b]}, nb[z]});
        return true;
      }
    }
  }
  return false;
}

}  // namespace detail

/// Inverse Henneberg search: peels degree-2 vertices (inverse H1) or degree-3
/// vertices with a re-inserted neighbour edge (inverse H2) down to one edge.
/// Returns the sequence in construction order, or nullopt for non-Laman input.
inline std::optional<HennebergSequence> reduction_sequence(const ConstraintGraph& g) {
  detail::require_point_only(g);
  if (g.n() < 2 || !is_laman(g)) return std::nullopt;
  HennebergSequence seq;
  if (!detail::reduce(g, seq)) return std::nullopt;
  return seq;
}

}  // namespace gcs
