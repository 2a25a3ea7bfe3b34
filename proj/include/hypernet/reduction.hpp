#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "hypernet/cnf.hpp"
#include "hypernet/hyperpath.hpp"

namespace hypernet {

/// Where a literal sits: 1-based clause index and position 1..3.
struct Occurrence {
  std::uint32_t clause = 1;
  std::uint32_t position = 1;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// Per-variable occurrence lists; entry i belongs to variable i + 1.
struct OccurrenceIndex {
  std::vector<std::vector<Occurrence>> positive;
  std::vector<std::vector<Occurrence>> negative;
};

struct VariableEdges {
  EdgeId false_edge = 0;  // head holds the positive occurrences
  EdgeId true_edge = 0;   // head holds the negative occurrences

  friend bool operator==(const VariableEdges&, const VariableEdges&) = default;
};

/// Names every vertex and edge of the 3-SAT gadget. Vectors are 0-based:
/// p[i] is p_i for i in 0..n, q[k][j] is q_{k+1,j+1}, variable_edges[i] and
/// clause_edges[k] belong to variable i + 1 and clause k + 1.
struct ReductionMap {
  std::vector<VertexId> p;
  VertexId q0 = 0;
  std::vector<std::array<VertexId, 3>> q;
  VertexId f = 0;
  std::vector<VariableEdges> variable_edges;
  std::vector<std::array<EdgeId, 3>> clause_edges;
  EdgeId forced_edge = 0;     // ({p_n}, {q_0})
  EdgeId connector_edge = 0;  // ({q_0}, {q_{1,1}, q_{1,2}, q_{1,3}})

  std::size_t n_vars() const noexcept { return variable_edges.size(); }
  std::size_t n_clauses() const noexcept { return clause_edges.size(); }
  VertexId source() const { return p.front(); }
  VertexId target() const noexcept { return f; }

  friend bool operator==(const ReductionMap&, const ReductionMap&) = default;
};

struct Reduction {
  Hypergraph graph;
  ReductionMap map;
};

/// Assignment read off a gadget hyperpath plus the literal position (1..3)
/// its clause edges pick.
struct DecodedHyperpath {
  Assignment assignment;
  std::vector<std::uint32_t> witnesses;
};

OccurrenceIndex build_occurrences(const CnfFormula& f);

/// Builds the layered F-hypergraph for `f`. Vertex ids are p_0..p_n, q_0,
/// the clause vertices row by row, then f. Edge ids are the variable pairs
/// (false edge first), the forced edge, the connector, then clause edges.
Reduction build_reduction(const CnfFormula& f);

DecodedHyperpath decode_assignment(std::span<const EdgeId> hyperpath_edges,
                                   const ReductionMap& map);

/// Lowest satisfied literal position for every clause.
std::vector<std::uint32_t> default_witnesses(const CnfFormula& f, const Assignment& a);

/// Edge set of the hyperpath picked by an assignment and a satisfied literal
/// per clause. Throws WitnessNotSatisfying when a chosen literal is false.
EdgeSet encode_hyperpath(const CnfFormula& f, const Assignment& a,
                         std::span<const std::uint32_t> witnesses,
                         const ReductionMap& map);

struct CheckResult {
  bool pass = false;
  std::string check;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool satisfiable = false;
  bool forcible = false;

  bool all_pass() const;
};

inline constexpr std::uint32_t kVerifyMaxVars = 12;
inline constexpr std::size_t kVerifyMaxClauses = 12;

/// Cross-checks the gadget against brute-force SAT: structure of the
/// hypergraph, agreement of the forced-edge search with satisfiability, and
/// the decode/encode round trip when a witness exists.
VerifyReport verify_equivalence(const CnfFormula& f,
                                std::uint64_t node_budget = kDefaultNodeBudget);

} // namespace hypernet
