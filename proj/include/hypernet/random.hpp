#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hypernet/cnf.hpp"
#include "hypernet/hypergraph.hpp"
#include "hypernet/reduction.hpp"

namespace hypernet {

using Rng = std::mt19937_64;

/// Uniform 3-CNF with n in [3, max_vars] and m in [1, max_clauses].
CnfFormula random_3cnf(Rng& rng, std::uint32_t max_vars, std::size_t max_clauses);

/// The unsatisfiable 3-CNF over v1..v3 that lists all eight sign patterns.
CnfFormula all_sign_patterns_3cnf();

struct RandomHypergraphShape {
  std::size_t vertices = 6;
  std::size_t edges = 8;
  std::size_t max_tail = 2;
  std::size_t max_head = 2;
  bool f_edges_only = false;  // every tail is a singleton
  bool acyclic = false;       // tails precede heads in a hidden vertex order
  bool allow_empty_sides = false;
};

Hypergraph random_hypergraph(Rng& rng, const RandomHypergraphShape& shape);

struct BatchInstance {
  std::uint64_t seed = 0;
  CnfFormula formula;
  VerifyReport report;
};

/// Runs verify_equivalence on `count` random formulas. Instance i is drawn
/// from seed + i, so results do not depend on scheduling; instances are
/// spread over `threads` workers and returned in seed order.
std::vector<BatchInstance> verify_random_batch(std::size_t count, std::uint64_t seed,
                                               std::uint32_t max_vars,
                                               std::size_t max_clauses,
                                               std::uint64_t node_budget = kDefaultNodeBudget,
                                               unsigned threads = 0);

} // namespace hypernet
