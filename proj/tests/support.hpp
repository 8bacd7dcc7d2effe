#pragma once

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "gcs/gcs.hpp"
#include "oracle.hpp"

// Runs `stmt` and checks that it throws gcs::Error with the given code.
#define EXPECT_GCS_ERROR(stmt, expected_code)                                        \
  do {                                                                               \
    try {                                                                            \
      (void)(stmt);                                                                  \
      ADD_FAILURE() << "expected " << gcs::to_string(expected_code) << ", no throw"; \
    } catch (const gcs::Error& e) {                                                  \
      EXPECT_EQ(e.code(), expected_code) << e.what();                                \
    }                                                                                \
  } while (0)

namespace gcs::test {

// Copy of `g` with one constraint dropped.
inline ConstraintGraph without_constraint(const ConstraintGraph& g, std::size_t index) {
  std::vector<Constraint> cs = g.constraints();
  cs.erase(cs.begin() + static_cast<std::ptrdiff_t>(index));
  return build_graph(g.entities(), std::move(cs));
}

// Copy of `g` with one extra distance constraint.
inline ConstraintGraph with_constraint(const ConstraintGraph& g, Constraint c) {
  std::vector<Constraint> cs = g.constraints();
  cs.push_back(std::move(c));
  return build_graph(g.entities(), std::move(cs));
}

// Random distance between two distinct points of a point-only graph.
inline Constraint random_edge(const ConstraintGraph& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, g.n() - 1);
  std::size_t a = pick(rng), b = pick(rng);
  while (b == a) b = pick(rng);
  return Constraint::distance(g.entities()[a].id, g.entities()[b].id, 1.0);
}

}  // namespace gcs::test
