#include "hypernet/hyperpath.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace hypernet {

void NodeBudget::spend() {
  if (++used_ > limit_)
    throw Error(ErrorKind::BudgetExceeded,
                "search exceeded " + std::to_string(limit_) + " nodes");
}

namespace {

void check_endpoints(const Hypergraph& h, VertexId s, VertexId d) {
  check_vertex(h, s);
  check_vertex(h, d);
  if (s == d)
    throw Error(ErrorKind::DegenerateEndpoints,
                "source and target coincide (" + std::to_string(s) + ")");
}

EdgeSet sorted_unique(std::span<const EdgeId> ids) {
  EdgeSet out(ids.begin(), ids.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Fires every allowed edge whose tail is inside `reached`, growing `reached`
// in place. Ready edges leave a min-heap so the lowest id always fires first.
// Returns the firing order. `fired` receives one flag per edge.
template <class Allowed>
std::vector<EdgeId> saturate(const Hypergraph& h, std::vector<char>& reached,
                             Allowed allowed, std::vector<char>& fired) {
  const auto m = h.edge_count();
  std::vector<std::uint32_t> missing(m, 0);
  std::priority_queue<EdgeId, std::vector<EdgeId>, std::greater<>> ready;
  fired.assign(m, 0);

  for (EdgeId e = 0; e < m; ++e) {
    if (!allowed(e)) continue;
    std::uint32_t count = 0;
    for (auto v : h.edge(e).tail)
      if (!reached[v]) ++count;
    missing[e] = count;
    if (count == 0) ready.push(e);
  }

  std::vector<EdgeId> order;
  while (!ready.empty()) {
    const EdgeId e = ready.top();
    ready.pop();
    if (fired[e]) continue;
    fired[e] = 1;
    order.push_back(e);
    for (auto v : h.edge(e).head) {
      if (reached[v]) continue;
      reached[v] = 1;
      for (auto g : h.out_edges(v))
        if (allowed(g) && --missing[g] == 0) ready.push(g);
    }
  }
  return order;
}

// Buffers for order-free saturation, reused across the many closures a
// search runs.
struct Workspace {
  std::vector<std::uint32_t> missing;
  std::vector<EdgeId> stack;
  std::vector<char> reached;
  std::vector<char> fired;

  // Same fixpoint as saturate() without recording an order. Starts from
  // `start` and leaves the result in `reached` and `fired`.
  template <class Allowed>
  void close(const Hypergraph& h, const std::vector<char>& start, Allowed allowed) {
    const auto m = h.edge_count();
    reached = start;
    fired.assign(m, 0);
    missing.resize(m);
    stack.clear();
    for (EdgeId e = 0; e < m; ++e) {
      if (!allowed(e)) continue;
      std::uint32_t count = 0;
      for (auto v : h.edge(e).tail)
        if (!reached[v]) ++count;
      missing[e] = count;
      if (count == 0) stack.push_back(e);
    }
    while (!stack.empty()) {
      const EdgeId e = stack.back();
      stack.pop_back();
      fired[e] = 1;
      for (auto v : h.edge(e).head) {
        if (reached[v]) continue;
        reached[v] = 1;
        for (auto g : h.out_edges(v))
          if (allowed(g) && --missing[g] == 0) stack.push_back(g);
      }
    }
  }
};

std::vector<char> seed(const Hypergraph& h, VertexId s) {
  std::vector<char> reached(h.vertex_count(), 0);
  reached[s] = 1;
  return reached;
}

Hyperpath make_hyperpath(const Hypergraph& h, VertexId s, VertexId d,
                         EdgeSet edges, std::vector<EdgeId> order) {
  Hyperpath p;
  p.s = s;
  p.d = d;
  p.vertices = incident_vertices(h, edges);
  if (!std::binary_search(p.vertices.begin(), p.vertices.end(), s))
    p.vertices.insert(std::lower_bound(p.vertices.begin(), p.vertices.end(), s), s);
  p.edges = std::move(edges);
  p.order = std::move(order);
  return p;
}

// Decision on an already-deduplicated subset.
std::optional<Hyperpath> certify_sorted(const Hypergraph& h, const EdgeSet& edges,
                                        VertexId s, VertexId d, Workspace& ws) {
  std::vector<char> in_subset(h.edge_count(), 0);
  for (auto e : edges) in_subset[e] = 1;
  const auto start = seed(h, s);
  auto member = [&](EdgeId e) { return in_subset[e] != 0; };

  ws.close(h, start, member);
  if (!ws.reached[d]) return std::nullopt;
  for (auto e : edges)
    if (!ws.fired[e]) return std::nullopt;

  // Closure is monotone, so a proper subset reaching d exists iff dropping a
  // single edge still reaches d.
  for (auto dropped : edges) {
    in_subset[dropped] = 0;
    ws.close(h, start, member);
    in_subset[dropped] = 1;
    if (ws.reached[d]) return std::nullopt;
  }

  // Minimality leaves nothing to fire after d first appears, so the greedy
  // order already ends with an edge whose head holds d.
  auto reached = start;
  std::vector<char> fired;
  auto order = saturate(h, reached, member, fired);
  return make_hyperpath(h, s, d, edges, std::move(order));
}

// Include/exclude search over fireable edges. At each node the lowest-id
// undecided edge whose tail is reached is either taken or dropped, so every
// set of edges that fires completely is visited at most once. Pruning:
//  - once d is reached the current set is the only candidate in the subtree;
//  - a taken edge must add a not-yet-reached vertex that can still reach d,
//    otherwise deleting it from any completion keeps d reachable;
//  - the subtree dies when d (or the required edge) cannot fire even with
//    every undecided edge allowed.
class HyperpathSearch {
public:
  HyperpathSearch(const Hypergraph& h, VertexId s, VertexId d,
                  std::optional<EdgeId> required, std::size_t limit,
                  bool stop_at_first, NodeBudget& budget)
      : h_(h), s_(s), d_(d), required_(required), limit_(limit),
        stop_at_first_(stop_at_first), budget_(budget),
        state_(h.edge_count(), kUndecided), reached_(seed(h, s)),
        leads_to_d_(digraph_reachable(reachability_digraph(reverse(h)), d)) {}

  std::vector<Hyperpath> run() {
    explore();
    std::sort(found_.begin(), found_.end(),
              [](const Hyperpath& a, const Hyperpath& b) { return a.edges < b.edges; });
    return std::move(found_);
  }

private:
  static constexpr char kUndecided = 0;
  static constexpr char kTaken = 1;
  static constexpr char kDropped = 2;

  bool done() const { return stop_at_first_ && !found_.empty(); }

  void explore() {
    if (done()) return;
    budget_.spend();

    if (reached_[d_]) {
      if (required_ && state_[*required_] != kTaken) return;
      EdgeSet taken;
      for (EdgeId e = 0; e < state_.size(); ++e)
        if (state_[e] == kTaken) taken.push_back(e);
      if (auto p = certify_sorted(h_, taken, s_, d_, ws_)) {
        found_.push_back(std::move(*p));
        if (found_.size() > limit_)
          throw Error(ErrorKind::LimitExceeded,
                      "more than " + std::to_string(limit_) + " hyperpaths");
      }
      return;
    }

    if (!feasible()) return;

    // Lowest undecided edge that can fire now. Feasibility guarantees one.
    std::optional<EdgeId> next;
    for (EdgeId e = 0; e < state_.size() && !next; ++e) {
      if (state_[e] != kUndecided) continue;
      const auto& tail = h_.edge(e).tail;
      if (std::all_of(tail.begin(), tail.end(), [&](VertexId v) { return reached_[v] != 0; }))
        next = e;
    }
    if (!next) return;
    const EdgeId e = *next;

    std::vector<VertexId> added;
    bool useful = false;
    for (auto v : h_.edge(e).head)
      if (!reached_[v]) {
        added.push_back(v);
        useful = useful || leads_to_d_[v];
      }

    if (useful) {
      state_[e] = kTaken;
      for (auto v : added) reached_[v] = 1;
      explore();
      for (auto v : added) reached_[v] = 0;
      state_[e] = kUndecided;
      if (done()) return;
    }

    if (required_ && *required_ == e) return;
    state_[e] = kDropped;
    explore();
    state_[e] = kUndecided;
  }

  bool feasible() {
    ws_.close(h_, reached_, [&](EdgeId e) { return state_[e] != kDropped; });
    if (!ws_.reached[d_]) return false;
    return !required_ || ws_.fired[*required_];
  }

  const Hypergraph& h_;
  VertexId s_;
  VertexId d_;
  std::optional<EdgeId> required_;
  std::size_t limit_;
  bool stop_at_first_;
  NodeBudget& budget_;
  std::vector<char> state_;
  std::vector<char> reached_;
  std::vector<char> leads_to_d_;
  Workspace ws_;
  std::vector<Hyperpath> found_;
};

} // namespace

Closure forward_closure(const Hypergraph& h, VertexId s,
                        std::span<const EdgeId> edge_subset) {
  check_vertex(h, s);
  check_edges(h, edge_subset);
  const auto edges = sorted_unique(edge_subset);
  std::vector<char> in_subset(h.edge_count(), 0);
  for (auto e : edges) in_subset[e] = 1;

  std::vector<char> fired;
  auto reached = seed(h, s);
  Closure c;
  c.fired = saturate(h, reached, [&](EdgeId e) { return in_subset[e] != 0; }, fired);
  for (VertexId v = 0; v < h.vertex_count(); ++v)
    if (reached[v]) c.reached.push_back(v);
  for (auto e : edges)
    if (!fired[e]) c.unfired.push_back(e);
  return c;
}

bool is_valid_ordered(const Hypergraph& h, std::span<const EdgeId> edge_subset,
                      VertexId s, VertexId d) {
  check_endpoints(h, s, d);
  const auto edges = sorted_unique(edge_subset);
  const auto c = forward_closure(h, s, edges);
  if (!c.unfired.empty() || !std::binary_search(c.reached.begin(), c.reached.end(), d))
    return false;
  // Some edge with d in its head has to be able to fire last.
  std::vector<EdgeId> rest;
  for (auto last : edges) {
    const auto& head = h.edge(last).head;
    if (!std::binary_search(head.begin(), head.end(), d)) continue;
    rest.clear();
    for (auto e : edges)
      if (e != last) rest.push_back(e);
    const auto before = forward_closure(h, s, rest);
    if (!before.unfired.empty()) continue;
    const auto& tail = h.edge(last).tail;
    if (std::includes(before.reached.begin(), before.reached.end(), tail.begin(), tail.end()))
      return true;
  }
  return false;
}

std::optional<Hyperpath> certify_hyperpath(const Hypergraph& h,
                                           std::span<const EdgeId> edge_subset,
                                           VertexId s, VertexId d) {
  check_endpoints(h, s, d);
  check_edges(h, edge_subset);
  Workspace ws;
  return certify_sorted(h, sorted_unique(edge_subset), s, d, ws);
}

bool is_hyperpath(const Hypergraph& h, std::span<const EdgeId> edge_subset,
                  VertexId s, VertexId d) {
  return certify_hyperpath(h, edge_subset, s, d).has_value();
}

bool is_valid_ordering(const Hypergraph& h, std::span<const EdgeId> order,
                       VertexId s, VertexId d) {
  check_endpoints(h, s, d);
  check_edges(h, order);
  if (order.empty() || sorted_unique(order).size() != order.size()) return false;
  auto reached = seed(h, s);
  for (auto e : order) {
    const auto& edge = h.edge(e);
    for (auto v : edge.tail)
      if (!reached[v]) return false;
    for (auto v : edge.head) reached[v] = 1;
  }
  const auto& last = h.edge(order.back()).head;
  return std::binary_search(last.begin(), last.end(), d);
}

std::vector<Hyperpath> enumerate_hyperpaths(const Hypergraph& h, VertexId s,
                                            VertexId d, std::size_t limit) {
  NodeBudget budget;
  return enumerate_hyperpaths(h, s, d, limit, budget);
}

std::vector<Hyperpath> enumerate_hyperpaths(const Hypergraph& h, VertexId s,
                                            VertexId d, std::size_t limit,
                                            NodeBudget& budget) {
  check_endpoints(h, s, d);
  return HyperpathSearch(h, s, d, std::nullopt, limit, false, budget).run();
}

std::vector<Hyperpath> enumerate_hyperpaths_through(const Hypergraph& h,
                                                    VertexId s, VertexId d,
                                                    EdgeId through,
                                                    std::size_t limit,
                                                    NodeBudget& budget,
                                                    bool stop_at_first) {
  check_endpoints(h, s, d);
  h.edge(through);
  return HyperpathSearch(h, s, d, through, limit, stop_at_first, budget).run();
}

SimplePath contained_simple_path(const Hypergraph& h, const Hyperpath& p) {
  check_edges(h, p.edges);
  for (auto e : p.edges)
    if (h.edge(e).tail.size() != 1)
      throw Error(ErrorKind::NotFHypergraph,
                  "edge " + std::to_string(e) + " does not have a single tail vertex");

  std::vector<char> remaining(h.edge_count(), 0);
  for (auto e : p.edges) remaining[e] = 1;

  SimplePath path;
  path.vertices.push_back(p.d);
  VertexId current = p.d;
  while (current != p.s) {
    std::optional<EdgeId> entering;
    for (auto e : h.in_edges(current)) {
      if (!remaining[e]) continue;
      if (entering)
        throw Error(ErrorKind::MultipleTerminalEdges,
                    "vertex " + std::to_string(current) + " has several entering edges");
      entering = e;
    }
    if (!entering)
      throw Error(ErrorKind::MalformedHyperpath,
                  "no edge enters vertex " + std::to_string(current));
    remaining[*entering] = 0;
    current = h.edge(*entering).tail.front();
    path.edges.push_back(*entering);
    path.vertices.push_back(current);
  }
  std::reverse(path.vertices.begin(), path.vertices.end());
  std::reverse(path.edges.begin(), path.edges.end());
  return path;
}

Hyperpath reversed_image(const Hyperpath& p) {
  Hyperpath r = p;
  std::swap(r.s, r.d);
  std::reverse(r.order.begin(), r.order.end());
  return r;
}

} // namespace hypernet
