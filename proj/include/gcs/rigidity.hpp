#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcs/graph.hpp"

namespace gcs {

enum class Verdict { Well, Under, Over };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Well: return "well";
    case Verdict::Under: return "under";
    case Verdict::Over: return "over";
  }
  return "?";
}

struct Diagnosis {
  Verdict verdict = Verdict::Well;
  int deficit = 0;                   // Under only
  std::vector<std::string> witness;  // Over only, sorted ids

  friend bool operator==(const Diagnosis&, const Diagnosis&) = default;
};

/// True when the subgraph induced by `ids` holds more constraints than
/// Σdof − 3 allows.
template <typename Ids>
bool violates_count(const ConstraintGraph& g, const Ids& ids) {
  const ConstraintGraph sub = induced_subgraph(g, ids);
  return static_cast<int>(sub.m()) > total_dof(sub) - 3;
}

inline constexpr std::size_t kCountingLimit = 24;

/// Exhaustive oracle: checks the count on every vertex subset of size >= 2.
/// The witness is a smallest violating subset, ties broken by comparing the
/// sorted id lists lexicographically.
inline Diagnosis diagnose_counting(const ConstraintGraph& g) {
  const std::size_t n = g.n();
  if (n < 2) throw Error(ErrorCode::TooSmall, "at least two entities are needed");
  if (n > kCountingLimit) throw Error(ErrorCode::BadValue, "exhaustive counting is limited to 24 entities");

  std::vector<int> weight(n);
  for (std::size_t i = 0; i < n; ++i) weight[i] = dof(g.entities()[i].kind);
  std::vector<std::uint32_t> edge_mask;
  edge_mask.reserve(g.m());
  for (const auto& c : g.constraints())
    edge_mask.push_back((1u << *g.index_of(c.between[0])) | (1u << *g.index_of(c.between[1])));

  auto ids_of = [&](std::uint32_t mask) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) out.push_back(g.entities()[i].id);
    std::sort(out.begin(), out.end());
    return out;
  };

  std::optional<std::vector<std::string>> best;
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    const int size = std::popcount(mask);
    if (size < 2) continue;
    if (best && static_cast<std::size_t>(size) > best->size()) continue;
    int edges = 0;
    for (auto em : edge_mask)
      if ((em & mask) == em) ++edges;
    int budget = -3;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) budget += weight[i];
    if (edges <= budget) continue;
    auto ids = ids_of(mask);
    if (!best || ids.size() < best->size() || (ids.size() == best->size() && ids < *best)) best = std::move(ids);
  }

  if (best) return {Verdict::Over, 0, std::move(*best)};
  const int def = deficiency(g);
  if (def > 0) return {Verdict::Under, def, {}};
  return {};
}

namespace detail {

// Pebble game for the count Σk_v − 3 with k_v = dof(v). Accepted edges are
// oriented away from the vertex whose pebble covers them.
class PebbleGame {
 public:
  explicit PebbleGame(std::vector<int> capacity) : pebbles_(std::move(capacity)), out_(pebbles_.size()) {}

  bool insert(int u, int v) {
    while (pebbles_[u] + pebbles_[v] < 4) {
      if (!collect(u, v) && !collect(v, u)) return false;
    }
    if (pebbles_[u] > 0) {
      --pebbles_[u];
      out_[u].push_back(v);
    } else {
      --pebbles_[v];
      out_[v].push_back(u);
    }
    return true;
  }

  std::vector<int> reach(int u, int v) const {
    std::vector<bool> seen(pebbles_.size(), false);
    std::vector<int> stack{u, v};
    seen[u] = seen[v] = true;
    std::vector<int> out;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      out.push_back(x);
      for (int y : out_[x])
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
    }
    return out;
  }

  int free_pebbles() const {
    int s = 0;
    for (int p : pebbles_) s += p;
    return s;
  }

 private:
  // Move one free pebble to `root` by reversing a directed path, never
  // taking it from `blocked`.
  bool collect(int root, int blocked) {
    const std::size_t n = pebbles_.size();
    std::vector<int> parent(n, -1);
    std::vector<bool> seen(n, false);
    seen[root] = seen[blocked] = true;
    std::vector<int> stack{root};
    int found = -1;
    while (!stack.empty() && found < 0) {
      int x = stack.back();
      stack.pop_back();
      for (int y : out_[x]) {
        if (seen[y]) continue;
        seen[y] = true;
        parent[y] = x;
        if (pebbles_[y] > 0) {
          found = y;
          break;
        }
        stack.push_back(y);
      }
    }
    if (found < 0) return false;
    for (int y = found; y != root; y = parent[y]) {
      int x = parent[y];
      auto& edges = out_[x];
      edges.erase(std::find(edges.begin(), edges.end(), y));
      out_[y].push_back(x);
    }
    --pebbles_[found];
    ++pebbles_[root];
    return true;
  }

  std::vector<int> pebbles_;
  std::vector<std::vector<int>> out_;
};

}  // namespace detail

/// Same verdict as diagnose_counting in O(n·m) per edge. On an over-count the
/// witness is the set of vertices reachable from the rejected edge.
inline Diagnosis diagnose_pebble(const ConstraintGraph& g) {
  if (g.n() < 2) throw Error(ErrorCode::TooSmall, "at least two entities are needed");
  std::vector<int> capacity;
  capacity.reserve(g.n());
  for (const auto& e : g.entities()) capacity.push_back(dof(e.kind));
  detail::PebbleGame game(std::move(capacity));

  for (const auto& c : g.constraints()) {
    const int u = static_cast<int>(*g.index_of(c.between[0]));
    const int v = static_cast<int>(*g.index_of(c.between[1]));
    if (!game.insert(u, v)) {
      std::vector<std::string> witness;
      for (int x : game.reach(u, v)) witness.push_back(g.entities()[x].id);
      std::sort(witness.begin(), witness.end());
      return {Verdict::Over, 0, std::move(witness)};
    }
  }
  const int leftover = game.free_pebbles() - 3;
  if (leftover > 0) return {Verdict::Under, leftover, {}};
  return {};
}

inline std::optional<std::vector<std::string>> overconstrained_witness(const ConstraintGraph& g) {
  Diagnosis d = diagnose_pebble(g);
  if (d.verdict != Verdict::Over) return std::nullopt;
  return std::move(d.witness);
}

inline bool is_laman(const ConstraintGraph& g) {
  if (!g.point_only())
    throw Error(ErrorCode::KindMismatch, "Laman test needs point entities joined by distances only");
  return diagnose_pebble(g).verdict == Verdict::Well;
}

}  // namespace gcs
