// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>

#include "hypernet/random.hpp"
#include "hypernet/reduction.hpp"
#include "hypernet/solver.hpp"
#include "oracles.hpp"

using namespace hypernet;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

template <class Body>
void criterion(int index, const char* name, double max_seconds, Body body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  bool pass = o.pass;
  std::string timing = "time=" + std::to_string(seconds).substr(0, 6) + "s";
  if (max_seconds > 0) {
    timing += " limit=" + std::to_string(static_cast<int>(max_seconds)) + "s";
    if (seconds >= max_seconds) pass = false;
  }
  if (!pass) ++failures;
  std::printf("%s %d %s: %s %s\n", pass ? "PASS" : "FAIL", index, name, o.detail.c_str(),
              timing.c_str());
  std::fflush(stdout);
}

bool has(const EdgeSet& edges, EdgeId e) { return std::binary_search(edges.begin(), edges.end(), e); }

std::vector<CnfFormula> equivalence_instances() {
  Rng rng(20240601);
  std::vector<CnfFormula> out;
  for (int i = 0; i < 200; ++i) out.push_back(random_3cnf(rng, 6, 6));
  out.push_back(all_sign_patterns_3cnf());
  return out;
}

Outcome sample_gadget() {
  const auto f = oracle::sample_formula();
  const auto r = build_reduction(f);
  const auto& h = r.graph;
  const auto& forced = h.edge(r.map.forced_edge);
  const bool shape = classify_hypergraph(h) == HypergraphClass::F && is_acyclic(h) &&
                     h.vertex_count() == 13 && h.edge_count() == 16 &&
                     forced.tail == VertexSet{r.map.p[4]} && forced.head == VertexSet{r.map.q0};
  const auto w = fhep_decide(h, r.map.source(), r.map.target(), r.map.forced_edge);
  bool decoded_ok = false;
  if (w) decoded_ok = evaluate(f, decode_assignment(w->edges, r.map).assignment);
  return {shape && w && decoded_ok,
          "vertices=" + std::to_string(h.vertex_count()) + " edges=" +
              std::to_string(h.edge_count()) + " fhep=" + (w ? "YES" : "NO") +
              " decode_satisfies=" + (decoded_ok ? "yes" : "no")};
}

Outcome gadget_invariants() {
  Rng rng(7001);
  std::size_t bad = 0;
  for (int i = 0; i < 500; ++i) {
    const auto f = random_3cnf(rng, 8, 8);
    const auto r = build_reduction(f);
    const auto n = f.n_vars;
    const auto m = f.clauses.size();
    const bool ok = classify_hypergraph(r.graph) == HypergraphClass::F && is_acyclic(r.graph) &&
                    r.graph.vertex_count() == n + 3 * m + 3 &&
                    r.graph.edge_count() == 2 * n + 3 * m + 2;
    bad += !ok;
  }
  return {bad == 0, "instances=500 failures=" + std::to_string(bad)};
}

Outcome sat_equivalence(const std::vector<CnfFormula>& instances) {
  std::size_t disagreements = 0, sat = 0;
  for (const auto& f : instances) {
    const auto r = build_reduction(f);
    const bool forcible =
        fhep_decide(r.graph, r.map.source(), r.map.target(), r.map.forced_edge).has_value();
    const bool satisfiable = sat_brute_force(f).has_value();
    disagreements += forcible != satisfiable;
    sat += satisfiable;
  }
  const bool pinned_unsat = !sat_brute_force(instances.back()).has_value();
  return {disagreements == 0 && pinned_unsat,
          "instances=" + std::to_string(instances.size()) + " sat=" + std::to_string(sat) +
              " disagreements=" + std::to_string(disagreements)};
}

Outcome contained_paths() {
  Rng rng(4242);
  std::size_t hyperpaths = 0, bad = 0;
  for (int i = 0; i < 300; ++i) {
    RandomHypergraphShape shape;
    shape.vertices = 2 + rng() % 9;
    shape.edges = 1 + rng() % 10;
    shape.max_head = 3;
    shape.f_edges_only = true;
    shape.acyclic = true;
    const auto h = random_hypergraph(rng, shape);
    if (classify_hypergraph(h) != HypergraphClass::F && classify_hypergraph(h) != HypergraphClass::BF)
      ++bad;
    if (!is_acyclic(h)) ++bad;
    for (VertexId d = 1; d < h.vertex_count(); ++d) {
      for (const auto& p : enumerate_hyperpaths(h, 0, d)) {
        ++hyperpaths;
        std::size_t terminal = 0;
        for (auto e : p.edges) terminal += oracle::contains(h.edge(e).head, d);
        bool ok = terminal == 1 && oracle::count_paths(h, p.edges, 0, d) == 1;
        try {
          const auto path = contained_simple_path(h, p);
          ok = ok && path.vertices.front() == 0 && path.vertices.back() == d &&
               path.edges.size() + 1 == path.vertices.size();
        } catch (const Error&) {
          ok = false;
        }
        bad += !ok;
      }
    }
  }
  return {bad == 0 && hyperpaths > 0, "hypergraphs=300 hyperpaths=" + std::to_string(hyperpaths) +
                                          " failures=" + std::to_string(bad)};
}

Outcome sdhp_equivalence() {
  Rng rng(99173);
  std::size_t disagreements = 0, nonempty = 0;
  for (int i = 0; i < 200; ++i) {
    RandomHypergraphShape shape;
    shape.vertices = 3 + rng() % 6;
    shape.edges = 1 + rng() % 12;
    shape.max_tail = 1 + rng() % 3;
    shape.max_head = 1 + rng() % 3;
    const auto h = random_hypergraph(rng, shape);
    const VertexId d = 1 + static_cast<VertexId>(rng() % (h.vertex_count() - 1));
    const auto net = sdhp_compute(h, 0, d);
    const auto oracle_net = sdhp_oracle(h, 0, d);
    EdgeSet forcible;
    for (EdgeId e = 0; e < h.edge_count(); ++e)
      if (fhep_decide(h, 0, d, e)) forcible.push_back(e);
    auto vertices = incident_vertices(h, forcible);
    if (!forcible.empty() && !std::binary_search(vertices.begin(), vertices.end(), VertexId{0})) {
      vertices.push_back(0);
      std::sort(vertices.begin(), vertices.end());
    }
    const bool ok = net == oracle_net && net.edges == forcible && net.vertices == vertices;
    disagreements += !ok;
    nonempty += !net.empty();
  }
  return {disagreements == 0, "hypergraphs=200 nonempty=" + std::to_string(nonempty) +
                                  " disagreements=" + std::to_string(disagreements)};
}

Outcome round_trip(const std::vector<CnfFormula>& instances) {
  std::size_t satisfiable = 0, enumerated = 0, bad = 0;
  for (const auto& f : instances) {
    if (!sat_brute_force(f)) continue;
    ++satisfiable;
    const auto r = build_reduction(f);
    const auto s = r.map.source();
    const auto d = r.map.target();
    const auto w = fhep_decide(r.graph, s, d, r.map.forced_edge);
    if (!w) {
      ++bad;
      continue;
    }
    const auto decoded = decode_assignment(w->edges, r.map);
    const auto again = encode_hyperpath(f, decoded.assignment, decoded.witnesses, r.map);
    if (!(is_hyperpath(r.graph, again, s, d) && has(again, r.map.forced_edge) && again == w->edges))
      ++bad;

    NodeBudget budget;
    const auto paths = enumerate_hyperpaths_through(r.graph, s, d, r.map.forced_edge,
                                                    kDefaultHyperpathLimit, budget);
    for (const auto& p : paths) {
      ++enumerated;
      const auto dp = decode_assignment(p.edges, r.map);
      if (!evaluate(f, dp.assignment) ||
          encode_hyperpath(f, dp.assignment, dp.witnesses, r.map) != p.edges)
        ++bad;
    }
    if (paths.size() != oracle::witness_pairs(f)) ++bad;
  }
  return {bad == 0, "satisfiable=" + std::to_string(satisfiable) +
                        " forced_hyperpaths=" + std::to_string(enumerated) +
                        " failures=" + std::to_string(bad)};
}

Outcome asymmetry() {
  // s=0 splits into a=1 and b=2; only a continues to d=3.
  Hypergraph h(4);
  h.add_edge({0}, {1, 2});
  h.add_edge({1}, {3});
  const auto paths = enumerate_hyperpaths(h, 0, 3);
  if (paths.size() != 1 || classify_hypergraph(h) != HypergraphClass::F)
    return {false, "pinned instance changed"};
  const auto back = reversed_image(paths[0]);
  const bool fails = !is_hyperpath(reverse(h), back.edges, back.s, back.d);
  return {fails, std::string("forward=hyperpath reversed=") + (fails ? "not-hyperpath" : "hyperpath")};
}

} // namespace

int main() {
  const auto instances = equivalence_instances();
  criterion(1, "sample-gadget", 1.0, sample_gadget);
  criterion(2, "gadget-invariants", 10.0, gadget_invariants);
  criterion(3, "sat-iff-forcible", 60.0, [&] { return sat_equivalence(instances); });
  criterion(4, "contained-simple-path", 0, contained_paths);
  criterion(5, "sdhp-oracle", 120.0, sdhp_equivalence);
  criterion(6, "encode-decode", 0, [&] { return round_trip(instances); });
  criterion(7, "reversal-asymmetry", 0, asymmetry);
  std::printf("%s %d failed\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
