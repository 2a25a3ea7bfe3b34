#pragma once

#include <optional>

#include "hypernet/hyperpath.hpp"

namespace hypernet {

/// Union of the vertices and edges of a family of hyperpaths. An empty
/// family gives empty vertex and edge sets.
struct Hypernetwork {
  VertexId s = 0;
  std::optional<VertexId> d;
  VertexSet vertices;
  EdgeSet edges;

  bool empty() const noexcept { return edges.empty() && vertices.empty(); }
  SubhypergraphView view() const { return {vertices, edges}; }

  friend bool operator==(const Hypernetwork&, const Hypernetwork&) = default;
};

struct SolverOptions {
  std::size_t hyperpath_limit = kDefaultHyperpathLimit;
  std::uint64_t node_budget = kDefaultNodeBudget;
};

inline constexpr std::size_t kOracleMaxEdges = 15;

/// Some hyperpath from s to d contains `edge`; the witness is returned.
std::optional<Hyperpath> fhep_decide(const Hypergraph& h, VertexId s, VertexId d,
                                     EdgeId edge, const SolverOptions& options = {});

std::optional<Hyperpath> fhep_decide(const Hypergraph& h, VertexId s, VertexId d,
                                     EdgeId edge, NodeBudget& budget);

/// The (s,d)-hypernetwork. One enumeration pass when the hyperpath count
/// stays under the limit, otherwise one forced-edge search per edge.
Hypernetwork sdhp_compute(const Hypergraph& h, VertexId s, VertexId d,
                          const SolverOptions& options = {});

/// Union of the (s,x)-hypernetworks over every vertex x.
Hypernetwork s_hypernetwork(const Hypergraph& h, VertexId s,
                            const SolverOptions& options = {});

/// Exhaustive reference: every edge subset is tested with is_hyperpath.
/// Throws OracleTooLarge above kOracleMaxEdges edges.
Hypernetwork sdhp_oracle(const Hypergraph& h, VertexId s, VertexId d);

/// Builds a hypernetwork from a family of edge sets.
Hypernetwork hypernetwork_from_edges(const Hypergraph& h, VertexId s,
                                     std::optional<VertexId> d, EdgeSet edges);

} // namespace hypernet
