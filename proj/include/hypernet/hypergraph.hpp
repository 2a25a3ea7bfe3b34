#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hypernet/error.hpp"

namespace hypernet {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// Sorted, duplicate-free id lists are the exchange currency for vertex and
// edge sets throughout the library.
using VertexSet = std::vector<VertexId>;
using EdgeSet = std::vector<EdgeId>;

struct Hyperedge {
  EdgeId id = 0;
  VertexSet tail;
  VertexSet head;
};

enum class EdgeClass { B, F, Both, Neither };
enum class HypergraphClass { B, F, BF, General };

std::string_view to_string(EdgeClass c);
std::string_view to_string(HypergraphClass c);

/// Directed hypergraph with a fixed vertex count and an append-only multiset
/// of hyperedges. Two edges may share tail and head; they are told apart by id.
class Hypergraph {
public:
  Hypergraph() = default;
  explicit Hypergraph(std::size_t n_vertices);

  /// Appends an edge and returns its id. Tail and head are sorted; duplicate
  /// members, out-of-range vertices and tail/head overlap throw
  /// InvalidHypergraph.
  EdgeId add_edge(VertexSet tail, VertexSet head);

  std::size_t vertex_count() const noexcept { return n_vertices_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Hyperedge& edge(EdgeId e) const;
  const std::vector<Hyperedge>& edges() const noexcept { return edges_; }

  /// Edges whose tail contains v.
  const EdgeSet& out_edges(VertexId v) const;
  /// Edges whose head contains v.
  const EdgeSet& in_edges(VertexId v) const;

  bool has_vertex(VertexId v) const noexcept { return v < n_vertices_; }
  bool has_edge(EdgeId e) const noexcept { return e < edges_.size(); }

  // Labels are optional, unique and non-empty. They exist so reduction
  // outputs stay readable (p0, q1,2, f).
  void set_label(VertexId v, std::string label);
  std::optional<std::string_view> label(VertexId v) const;
  std::optional<VertexId> find_label(std::string_view label) const;
  bool has_labels() const noexcept { return !labels_.empty(); }

  /// Label when present, otherwise the decimal index.
  std::string vertex_name(VertexId v) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b);

private:
  std::size_t n_vertices_ = 0;
  std::vector<Hyperedge> edges_;
  std::vector<EdgeSet> out_;
  std::vector<EdgeSet> in_;
  std::vector<std::string> labels_;  // empty, or one slot per vertex
  std::unordered_map<std::string, VertexId> label_index_;
};

bool operator==(const Hyperedge& a, const Hyperedge& b);

/// Vertex and edge ids that select a piece of a host hypergraph.
struct SubhypergraphView {
  VertexSet vertices;
  EdgeSet edges;

  friend bool operator==(const SubhypergraphView&, const SubhypergraphView&) = default;
};

/// Plain digraph over the host's vertices.
struct Digraph {
  std::vector<VertexSet> successors;

  std::size_t vertex_count() const noexcept { return successors.size(); }
  std::size_t arc_count() const noexcept;
};

EdgeClass classify_edge(const Hyperedge& e);
HypergraphClass classify_hypergraph(const Hypergraph& h);

/// True iff the view only names host elements and every edge it keeps has
/// its tail and head inside the kept vertex set. Unknown ids throw
/// InvalidReference.
bool is_subhypergraph(const SubhypergraphView& sub, const Hypergraph& host);

/// Same test, relative to a view of the host instead of the whole host.
bool is_subhypergraph(const SubhypergraphView& sub,
                      const SubhypergraphView& super,
                      const Hypergraph& host);

SubhypergraphView full_view(const Hypergraph& h);

/// Arc u->v for every edge with u in its tail and v in its head.
Digraph reachability_digraph(const Hypergraph& h);

/// Vertices reachable from `from` in `g`, `from` itself included.
std::vector<char> digraph_reachable(const Digraph& g, VertexId from);

/// Existence of a hypergraph path from s to d. For s == d this asks for a
/// cycle through s.
bool simple_path_exists(const Hypergraph& h, VertexId s, VertexId d);

bool is_acyclic(const Hypergraph& h);

/// Swaps tail and head of every edge. Ids and labels are kept.
Hypergraph reverse(const Hypergraph& h);

/// Hypergraph on the same vertices with only the selected edges, renumbered
/// in the order given. Labels are kept.
Hypergraph edge_subgraph(const Hypergraph& h, std::span<const EdgeId> edges);

/// Sorted union of tails and heads of the selected edges.
VertexSet incident_vertices(const Hypergraph& h, std::span<const EdgeId> edges);

void check_vertex(const Hypergraph& h, VertexId v);
void check_edges(const Hypergraph& h, std::span<const EdgeId> edges);

} // namespace hypernet
