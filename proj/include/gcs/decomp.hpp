#pragma once

#include <algorithm>
#include <iterator>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcs/graph.hpp"

namespace gcs {

enum class MergeRule { Seed, R1, R2 };

constexpr std::string_view to_string(MergeRule r) {
  switch (r) {
    case MergeRule::Seed: return "seed";
    case MergeRule::R1: return "R1";
    case MergeRule::R2: return "R2";
  }
  return "?";
}

/// A rigid sub-assembly. Seeds hold one constraint; merged clusters record
/// the children they came from and the entities shared between them.
///
/// For R1, `shared` is ordered (s01, s02, s12), sIJ being the entity common
/// to children I and J. For R2 it lists the common entities sorted.
struct Cluster {
  int id = 0;
  std::vector<std::string> entities;  // sorted
  std::vector<int> constraints;       // sorted indices into the graph
  MergeRule rule = MergeRule::Seed;
  std::vector<int> children;
  std::vector<std::string> shared;
  // A seed joining two 3-DOF entities is not rigid and never merges.
  bool rigid = true;

  bool nontrivial() const { return rule != MergeRule::Seed; }
  friend bool operator==(const Cluster&, const Cluster&) = default;
};

struct MergeRecord {
  MergeRule rule = MergeRule::R1;
  int result = 0;
  std::vector<int> children;
  std::vector<std::string> shared;

  friend bool operator==(const MergeRecord&, const MergeRecord&) = default;
};

enum class Reducibility { Fully, Partially, Irreducible };

constexpr std::string_view to_string(Reducibility r) {
  switch (r) {
    case Reducibility::Fully: return "fully_reducible";
    case Reducibility::Partially: return "partially_reducible";
    case Reducibility::Irreducible: return "irreducible";
  }
  return "?";
}

struct ReducibilityClass {
  Reducibility kind = Reducibility::Irreducible;
  int nontrivial_cluster_count = 0;

  friend bool operator==(const ReducibilityClass&, const ReducibilityClass&) = default;
};

struct DecompositionResult {
  std::vector<Cluster> final_clusters;  // ascending id
  std::vector<MergeRecord> merge_log;
  ReducibilityClass cls;
  std::vector<Cluster> history;  // every cluster ever formed, indexed by id
};

namespace detail {

inline std::vector<std::string> common(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

template <typename T>
std::vector<T> merged(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace detail

/// One seed per constraint: the two endpoints and the constraint joining them.
inline std::vector<Cluster> seed_clusters(const ConstraintGraph& g) {
  std::vector<Cluster> out;
  for (std::size_t i = 0; i < g.m(); ++i) {
    const auto& c = g.constraints()[i];
    Cluster k;
    k.id = static_cast<int>(i);
    k.entities = {c.between[0], c.between[1]};
    std::sort(k.entities.begin(), k.entities.end());
    k.constraints = {static_cast<int>(i)};
    k.rigid = dof(g.entity(c.between[0]).kind) + dof(g.entity(c.between[1]).kind) - 3 == 1;
    out.push_back(std::move(k));
  }
  return out;
}

/// Applies `rec` to the active cluster list, returning the new cluster.
inline Cluster apply_merge(std::vector<Cluster>& clusters, const MergeRecord& rec) {
  Cluster k;
  k.id = rec.result;
  k.rule = rec.rule;
  k.children = rec.children;
  k.shared = rec.shared;
  for (int child : rec.children) {
    auto it = std::find_if(clusters.begin(), clusters.end(), [&](const Cluster& c) { return c.id == child; });
    k.entities = detail::merged(k.entities, it->entities);
    k.constraints = detail::merged(k.constraints, it->constraints);
    clusters.erase(it);
  }
  clusters.push_back(k);
  std::sort(clusters.begin(), clusters.end(), [](const Cluster& a, const Cluster& b) { return a.id < b.id; });
  return k;
}

/// Finds the first applicable merge: R2 (two clusters sharing at least two
/// entities) before R1 (three clusters pairwise sharing one entity, the three
/// shared entities distinct), candidates in lexicographic order of their
/// sorted cluster ids. Returns nullopt at the fixpoint.
inline std::optional<std::pair<MergeRecord, std::vector<Cluster>>> merge_step(std::vector<Cluster> clusters) {
  std::sort(clusters.begin(), clusters.end(), [](const Cluster& a, const Cluster& b) { return a.id < b.id; });
  const std::size_t c = clusters.size();
  int next_id = 0;
  for (const auto& k : clusters) next_id = std::max(next_id, k.id + 1);

  // shared[i][j] holds the common entities of clusters i and j
  std::vector<std::vector<std::vector<std::string>>> shared(c, std::vector<std::vector<std::string>>(c));
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = i + 1; j < c; ++j)
      if (clusters[i].rigid && clusters[j].rigid) shared[i][j] = detail::common(clusters[i].entities, clusters[j].entities);

  auto finish = [&](MergeRecord rec) {
    rec.result = next_id;
    apply_merge(clusters, rec);
    return std::make_optional(std::make_pair(std::move(rec), std::move(clusters)));
  };

  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = i + 1; j < c; ++j)
      if (shared[i][j].size() >= 2) return finish({MergeRule::R2, 0, {clusters[i].id, clusters[j].id}, shared[i][j]});

  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = i + 1; j < c; ++j) {
      if (shared[i][j].size() != 1) continue;
      for (std::size_t k = j + 1; k < c; ++k) {
        if (shared[i][k].size() != 1 || shared[j][k].size() != 1) continue;
        const auto& a = shared[i][j][0];
        const auto& b = shared[i][k][0];
        const auto& d = shared[j][k][0];
        if (a == b || a == d || b == d) continue;
        return finish({MergeRule::R1, 0, {clusters[i].id, clusters[j].id, clusters[k].id}, {a, b, d}});
      }
    }
  return std::nullopt;
}

inline ReducibilityClass classify_clusters(const ConstraintGraph& g, const std::vector<Cluster>& finals,
                                           std::size_t merges) {
  int nontrivial = 0;
  for (const auto& k : finals) nontrivial += k.nontrivial() ? 1 : 0;
  if (finals.size() == 1 && finals[0].entities.size() == g.n()) return {Reducibility::Fully, nontrivial};
  if (merges == 0 && finals.size() > 1) return {Reducibility::Irreducible, 0};
  return {Reducibility::Partially, nontrivial};
}

/// Bottom-up decomposition: merge seed clusters until no rule applies, then
/// classify what is left.
inline DecompositionResult decompose(const ConstraintGraph& g) {
  if (g.n() < 2) throw Error(ErrorCode::TooSmall, "at least two entities are needed");
  DecompositionResult out;
  std::vector<Cluster> active = seed_clusters(g);
  out.history = active;
  while (auto step = merge_step(active)) {
    active = std::move(step->second);
    out.merge_log.push_back(step->first);
    auto it = std::find_if(active.begin(), active.end(), [&](const Cluster& k) { return k.id == step->first.result; });
    out.history.push_back(*it);
  }
  out.final_clusters = std::move(active);
  out.cls = classify_clusters(g, out.final_clusters, out.merge_log.size());
  return out;
}

inline ReducibilityClass classify(const ConstraintGraph& g) { return decompose(g).cls; }

}  // namespace gcs
