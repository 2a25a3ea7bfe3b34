#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hypernet/hypergraph.hpp"

namespace hypernet {

/// Fixpoint of firing edges whose whole tail is already reached, seeded
/// with {s}. `fired` is the firing order.
struct Closure {
  VertexSet reached;
  std::vector<EdgeId> fired;
  EdgeSet unfired;
};

/// A hyperpath from s to d in some host hypergraph. `order` is a witness
/// sequence for the edges; `vertices` is s plus every tail and head vertex.
struct Hyperpath {
  VertexId s = 0;
  VertexId d = 0;
  EdgeSet edges;
  std::vector<EdgeId> order;
  VertexSet vertices;

  friend bool operator==(const Hyperpath&, const Hyperpath&) = default;
};

/// Alternating vertex/edge sequence (v1, e1, v2, ..., eq, v_{q+1}).
struct SimplePath {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  friend bool operator==(const SimplePath&, const SimplePath&) = default;
};

inline constexpr std::size_t kDefaultHyperpathLimit = 10'000;
inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// Counts search nodes across one or more searches. Exceeding the limit
/// throws BudgetExceeded.
class NodeBudget {
public:
  explicit NodeBudget(std::uint64_t limit = kDefaultNodeBudget) : limit_(limit) {}

  void spend();
  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }

private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

/// Repeatedly fires the lowest-id unfired edge of `edge_subset` whose tail is
/// covered by the reached set. Duplicate ids in the subset are ignored.
Closure forward_closure(const Hypergraph& h, VertexId s,
                        std::span<const EdgeId> edge_subset);

/// Some ordering of the subset satisfies the tail-coverage condition and ends
/// with an edge whose head holds d. Firing is monotone, so greedy closure with
/// each candidate last edge held back decides this.
bool is_valid_ordered(const Hypergraph& h, std::span<const EdgeId> edge_subset,
                      VertexId s, VertexId d);

/// Returns the hyperpath spanned by `edge_subset` when the subset is a
/// minimal s-d carrier, with the canonical greedy ordering as witness.
std::optional<Hyperpath> certify_hyperpath(const Hypergraph& h,
                                           std::span<const EdgeId> edge_subset,
                                           VertexId s, VertexId d);

bool is_hyperpath(const Hypergraph& h, std::span<const EdgeId> edge_subset,
                  VertexId s, VertexId d);

/// Checks a caller-supplied ordering: it must be a permutation of the edge
/// set, cover every tail from s and earlier heads, and end with d in the last
/// head. Minimality is not part of this check.
bool is_valid_ordering(const Hypergraph& h, std::span<const EdgeId> order,
                       VertexId s, VertexId d);

/// All hyperpaths from s to d, sorted by edge set. More than `limit` results
/// throws LimitExceeded.
std::vector<Hyperpath> enumerate_hyperpaths(const Hypergraph& h, VertexId s,
                                            VertexId d,
                                            std::size_t limit = kDefaultHyperpathLimit);

std::vector<Hyperpath> enumerate_hyperpaths(const Hypergraph& h, VertexId s,
                                            VertexId d, std::size_t limit,
                                            NodeBudget& budget);

/// Hyperpaths from s to d that contain `through`. With `stop_at_first` the
/// search ends after the first hit.
std::vector<Hyperpath> enumerate_hyperpaths_through(const Hypergraph& h,
                                                    VertexId s, VertexId d,
                                                    EdgeId through,
                                                    std::size_t limit,
                                                    NodeBudget& budget,
                                                    bool stop_at_first = false);

/// The single path inside a hyperpath of an F-hypergraph, traced backwards
/// from d through the unique edge holding each vertex in its head.
SimplePath contained_simple_path(const Hypergraph& h, const Hyperpath& p);

/// Hyperpath with its edges swapped, read as a candidate from d to s in
/// reverse(h). Edge ids are preserved by reverse().
Hyperpath reversed_image(const Hyperpath& p);

} // namespace hypernet
