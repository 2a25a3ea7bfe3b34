#include "hypernet/hypergraph.hpp"

#include <algorithm>
#include <deque>

namespace hypernet {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::InvalidHypergraph: return "InvalidHypergraph";
  case ErrorKind::InvalidReference: return "InvalidReference";
  case ErrorKind::DegenerateEndpoints: return "DegenerateEndpoints";
  case ErrorKind::LimitExceeded: return "LimitExceeded";
  case ErrorKind::BudgetExceeded: return "BudgetExceeded";
  case ErrorKind::NotFHypergraph: return "NotFHypergraph";
  case ErrorKind::MultipleTerminalEdges: return "MultipleTerminalEdges";
  case ErrorKind::ParseError: return "ParseError";
  case ErrorKind::Not3Sat: return "Not3Sat";
  case ErrorKind::EmptyFormula: return "EmptyFormula";
  case ErrorKind::MalformedHyperpath: return "MalformedHyperpath";
  case ErrorKind::WitnessNotSatisfying: return "WitnessNotSatisfying";
  case ErrorKind::TooLarge: return "TooLarge";
  case ErrorKind::OracleTooLarge: return "OracleTooLarge";
  }
  return "Unknown";
}

std::string_view to_string(EdgeClass c) {
  switch (c) {
  case EdgeClass::B: return "B";
  case EdgeClass::F: return "F";
  case EdgeClass::Both: return "Both";
  case EdgeClass::Neither: return "Neither";
  }
  return "?";
}

std::string_view to_string(HypergraphClass c) {
  switch (c) {
  case HypergraphClass::B: return "B";
  case HypergraphClass::F: return "F";
  case HypergraphClass::BF: return "BF";
  case HypergraphClass::General: return "General";
  }
  return "?";
}

Hypergraph::Hypergraph(std::size_t n_vertices)
    : n_vertices_(n_vertices), out_(n_vertices), in_(n_vertices) {}

namespace {

void normalize_side(VertexSet& side, std::size_t n, const char* what) {
  std::sort(side.begin(), side.end());
  if (std::adjacent_find(side.begin(), side.end()) != side.end())
    throw Error(ErrorKind::InvalidHypergraph,
                std::string("duplicate vertex in ") + what);
  if (!side.empty() && side.back() >= n)
    throw Error(ErrorKind::InvalidHypergraph,
                std::string(what) + " vertex " + std::to_string(side.back()) +
                    " out of range");
}

bool sorted_intersects(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

} // namespace

EdgeId Hypergraph::add_edge(VertexSet tail, VertexSet head) {
  normalize_side(tail, n_vertices_, "tail");
  normalize_side(head, n_vertices_, "head");
  if (sorted_intersects(tail, head))
    throw Error(ErrorKind::InvalidHypergraph, "tail and head overlap");

  const auto id = static_cast<EdgeId>(edges_.size());
  for (VertexId v : tail) out_[v].push_back(id);
  for (VertexId v : head) in_[v].push_back(id);
  edges_.push_back(Hyperedge{id, std::move(tail), std::move(head)});
  return id;
}

const Hyperedge& Hypergraph::edge(EdgeId e) const {
  if (!has_edge(e))
    throw Error(ErrorKind::InvalidReference, "edge " + std::to_string(e));
  return edges_[e];
}

const EdgeSet& Hypergraph::out_edges(VertexId v) const {
  check_vertex(*this, v);
  return out_[v];
}

const EdgeSet& Hypergraph::in_edges(VertexId v) const {
  check_vertex(*this, v);
  return in_[v];
}

void Hypergraph::set_label(VertexId v, std::string label) {
  check_vertex(*this, v);
  if (label.empty())
    throw Error(ErrorKind::InvalidHypergraph, "empty label");
  if (auto it = label_index_.find(label); it != label_index_.end() && it->second != v)
    throw Error(ErrorKind::InvalidHypergraph, "duplicate label " + label);
  if (labels_.empty()) labels_.resize(n_vertices_);
  if (!labels_[v].empty()) label_index_.erase(labels_[v]);
  label_index_[label] = v;
  labels_[v] = std::move(label);
}

std::optional<std::string_view> Hypergraph::label(VertexId v) const {
  check_vertex(*this, v);
  if (labels_.empty() || labels_[v].empty()) return std::nullopt;
  return std::string_view(labels_[v]);
}

std::optional<VertexId> Hypergraph::find_label(std::string_view label) const {
  auto it = label_index_.find(std::string(label));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

std::string Hypergraph::vertex_name(VertexId v) const {
  if (auto l = label(v)) return std::string(*l);
  return std::to_string(v);
}

bool operator==(const Hyperedge& a, const Hyperedge& b) {
  return a.id == b.id && a.tail == b.tail && a.head == b.head;
}

bool operator==(const Hypergraph& a, const Hypergraph& b) {
  if (a.n_vertices_ != b.n_vertices_ || a.edges_ != b.edges_) return false;
  for (VertexId v = 0; v < a.n_vertices_; ++v)
    if (a.label(v) != b.label(v)) return false;
  return true;
}

std::size_t Digraph::arc_count() const noexcept {
  std::size_t total = 0;
  for (const auto& s : successors) total += s.size();
  return total;
}

EdgeClass classify_edge(const Hyperedge& e) {
  const bool b = e.head.size() == 1;
  const bool f = e.tail.size() == 1;
  if (b && f) return EdgeClass::Both;
  if (b) return EdgeClass::B;
  if (f) return EdgeClass::F;
  return EdgeClass::Neither;
}

HypergraphClass classify_hypergraph(const Hypergraph& h) {
  bool all_b = true;
  bool all_f = true;
  bool all_bf = true;
  for (const auto& e : h.edges()) {
    switch (classify_edge(e)) {
    case EdgeClass::Both: break;
    case EdgeClass::B: all_f = false; break;
    case EdgeClass::F: all_b = false; break;
    case EdgeClass::Neither: all_b = all_f = all_bf = false; break;
    }
  }
  // With no edges every predicate holds; BF is the tightest class that
  // states "both" without picking a side.
  if (all_b && all_f) return HypergraphClass::BF;
  if (all_f) return HypergraphClass::F;
  if (all_b) return HypergraphClass::B;
  if (all_bf) return HypergraphClass::BF;
  return HypergraphClass::General;
}

namespace {

std::vector<char> membership(std::size_t n, std::span<const VertexId> ids) {
  std::vector<char> in(n, 0);
  for (auto v : ids) in[v] = 1;
  return in;
}

} // namespace

bool is_subhypergraph(const SubhypergraphView& sub, const Hypergraph& host) {
  return is_subhypergraph(sub, full_view(host), host);
}

bool is_subhypergraph(const SubhypergraphView& sub,
                      const SubhypergraphView& super,
                      const Hypergraph& host) {
  for (auto v : sub.vertices) check_vertex(host, v);
  for (auto v : super.vertices) check_vertex(host, v);
  check_edges(host, sub.edges);
  check_edges(host, super.edges);

  const auto super_v = membership(host.vertex_count(), super.vertices);
  std::vector<char> super_e(host.edge_count(), 0);
  for (auto e : super.edges) super_e[e] = 1;
  const auto sub_v = membership(host.vertex_count(), sub.vertices);

  for (auto v : sub.vertices)
    if (!super_v[v]) return false;
  for (auto e : sub.edges) {
    if (!super_e[e]) return false;
    const auto& edge = host.edge(e);
    for (auto v : edge.tail)
      if (!sub_v[v]) return false;
    for (auto v : edge.head)
      if (!sub_v[v]) return false;
  }
  return true;
}

SubhypergraphView full_view(const Hypergraph& h) {
  SubhypergraphView view;
  view.vertices.resize(h.vertex_count());
  for (VertexId v = 0; v < h.vertex_count(); ++v) view.vertices[v] = v;
  view.edges.resize(h.edge_count());
  for (EdgeId e = 0; e < h.edge_count(); ++e) view.edges[e] = e;
  return view;
}

Digraph reachability_digraph(const Hypergraph& h) {
  Digraph g;
  g.successors.resize(h.vertex_count());
  for (const auto& e : h.edges())
    for (auto u : e.tail)
      g.successors[u].insert(g.successors[u].end(), e.head.begin(), e.head.end());
  for (auto& succ : g.successors) {
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
  }
  return g;
}

std::vector<char> digraph_reachable(const Digraph& g, VertexId from) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::deque<VertexId> queue{from};
  seen[from] = 1;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (auto v : g.successors[u])
      if (!seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
      }
  }
  return seen;
}

bool simple_path_exists(const Hypergraph& h, VertexId s, VertexId d) {
  check_vertex(h, s);
  check_vertex(h, d);
  const auto g = reachability_digraph(h);
  // A path takes at least one step, so search from the successors of s.
  for (auto v : g.successors[s]) {
    if (v == d) return true;
    if (digraph_reachable(g, v)[d]) return true;
  }
  return false;
}

bool is_acyclic(const Hypergraph& h) {
  const auto g = reachability_digraph(h);
  // Kahn's algorithm: every vertex is removed iff there is no cycle.
  std::vector<std::size_t> indegree(g.vertex_count(), 0);
  for (const auto& succ : g.successors)
    for (auto v : succ) ++indegree[v];
  std::vector<VertexId> ready;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t removed = 0;
  while (!ready.empty()) {
    auto u = ready.back();
    ready.pop_back();
    ++removed;
    for (auto v : g.successors[u])
      if (--indegree[v] == 0) ready.push_back(v);
  }
  return removed == g.vertex_count();
}

Hypergraph reverse(const Hypergraph& h) {
  Hypergraph r(h.vertex_count());
  for (const auto& e : h.edges()) r.add_edge(e.head, e.tail);
  for (VertexId v = 0; v < h.vertex_count(); ++v)
    if (auto l = h.label(v)) r.set_label(v, std::string(*l));
  return r;
}

Hypergraph edge_subgraph(const Hypergraph& h, std::span<const EdgeId> edges) {
  check_edges(h, edges);
  Hypergraph sub(h.vertex_count());
  for (auto e : edges) sub.add_edge(h.edge(e).tail, h.edge(e).head);
  for (VertexId v = 0; v < h.vertex_count(); ++v)
    if (auto l = h.label(v)) sub.set_label(v, std::string(*l));
  return sub;
}

VertexSet incident_vertices(const Hypergraph& h, std::span<const EdgeId> edges) {
  check_edges(h, edges);
  VertexSet out;
  for (auto e : edges) {
    const auto& edge = h.edge(e);
    out.insert(out.end(), edge.tail.begin(), edge.tail.end());
    out.insert(out.end(), edge.head.begin(), edge.head.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_vertex(const Hypergraph& h, VertexId v) {
  if (!h.has_vertex(v))
    throw Error(ErrorKind::InvalidReference, "vertex " + std::to_string(v));
}

void check_edges(const Hypergraph& h, std::span<const EdgeId> edges) {
  for (auto e : edges)
    if (!h.has_edge(e))
      throw Error(ErrorKind::InvalidReference, "edge " + std::to_string(e));
}

} // namespace hypernet
