#include "hypernet/solver.hpp"

#include <algorithm>

namespace hypernet {

Hypernetwork hypernetwork_from_edges(const Hypergraph& h, VertexId s,
                                     std::optional<VertexId> d, EdgeSet edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  Hypernetwork net;
  net.s = s;
  net.d = d;
  if (edges.empty()) return net;
  net.vertices = incident_vertices(h, edges);
  // Every hyperpath carries s, whether or not an edge touches it.
  if (!std::binary_search(net.vertices.begin(), net.vertices.end(), s))
    net.vertices.insert(std::lower_bound(net.vertices.begin(), net.vertices.end(), s), s);
  net.edges = std::move(edges);
  return net;
}

std::optional<Hyperpath> fhep_decide(const Hypergraph& h, VertexId s, VertexId d,
                                     EdgeId edge, const SolverOptions& options) {
  NodeBudget budget(options.node_budget);
  return fhep_decide(h, s, d, edge, budget);
}

std::optional<Hyperpath> fhep_decide(const Hypergraph& h, VertexId s, VertexId d,
                                     EdgeId edge, NodeBudget& budget) {
  auto found = enumerate_hyperpaths_through(h, s, d, edge, 1, budget, true);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

namespace {

EdgeSet forcible_edges_by_fhep(const Hypergraph& h, VertexId s, VertexId d,
                               NodeBudget& budget) {
  std::vector<char> known(h.edge_count(), 0);
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    if (known[e]) continue;
    if (auto witness = fhep_decide(h, s, d, e, budget))
      for (auto g : witness->edges) known[g] = 1;
  }
  EdgeSet out;
  for (EdgeId e = 0; e < h.edge_count(); ++e)
    if (known[e]) out.push_back(e);
  return out;
}

} // namespace

Hypernetwork sdhp_compute(const Hypergraph& h, VertexId s, VertexId d,
                          const SolverOptions& options) {
  NodeBudget budget(options.node_budget);
  EdgeSet edges;
  try {
    for (const auto& p : enumerate_hyperpaths(h, s, d, options.hyperpath_limit, budget))
      edges.insert(edges.end(), p.edges.begin(), p.edges.end());
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::LimitExceeded) throw;
    edges = forcible_edges_by_fhep(h, s, d, budget);
  }
  return hypernetwork_from_edges(h, s, d, std::move(edges));
}

Hypernetwork s_hypernetwork(const Hypergraph& h, VertexId s,
                            const SolverOptions& options) {
  check_vertex(h, s);
  EdgeSet edges;
  for (VertexId x = 0; x < h.vertex_count(); ++x) {
    if (x == s) continue;
    auto net = sdhp_compute(h, s, x, options);
    edges.insert(edges.end(), net.edges.begin(), net.edges.end());
  }
  return hypernetwork_from_edges(h, s, std::nullopt, std::move(edges));
}

Hypernetwork sdhp_oracle(const Hypergraph& h, VertexId s, VertexId d) {
  check_vertex(h, s);
  check_vertex(h, d);
  if (s == d) throw Error(ErrorKind::DegenerateEndpoints, "source and target coincide");
  if (h.edge_count() > kOracleMaxEdges)
    throw Error(ErrorKind::OracleTooLarge,
                std::to_string(h.edge_count()) + " edges (max " +
                    std::to_string(kOracleMaxEdges) + ")");
  const auto m = h.edge_count();
  std::vector<char> member(m, 0);
  EdgeSet subset;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    subset.clear();
    for (EdgeId e = 0; e < m; ++e)
      if (mask & (1u << e)) subset.push_back(e);
    if (is_hyperpath(h, subset, s, d))
      for (auto e : subset) member[e] = 1;
  }
  EdgeSet edges;
  for (EdgeId e = 0; e < m; ++e)
    if (member[e]) edges.push_back(e);
  return hypernetwork_from_edges(h, s, d, std::move(edges));
}

} // namespace hypernet
