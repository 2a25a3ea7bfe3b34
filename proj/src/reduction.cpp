#include "hypernet/reduction.hpp"

#include <algorithm>
#include <sstream>

#include "hypernet/solver.hpp"

namespace hypernet {

OccurrenceIndex build_occurrences(const CnfFormula& f) {
  validate(f);
  OccurrenceIndex index;
  index.positive.resize(f.n_vars);
  index.negative.resize(f.n_vars);
  for (std::uint32_t k = 0; k < f.clauses.size(); ++k)
    for (std::uint32_t j = 0; j < 3; ++j) {
      const auto& lit = f.clauses[k][j];
      auto& list = lit.positive ? index.positive : index.negative;
      list[lit.var - 1].push_back(Occurrence{k + 1, j + 1});
    }
  return index;
}

Reduction build_reduction(const CnfFormula& f) {
  if (f.clauses.empty()) throw Error(ErrorKind::EmptyFormula, "formula has no clauses");
  const auto occurrences = build_occurrences(f);
  const std::size_t n = f.n_vars;
  const std::size_t m = f.clauses.size();

  Reduction r{Hypergraph(n + 3 * m + 3), {}};
  auto& map = r.map;
  auto& h = r.graph;

  VertexId next = 0;
  for (std::size_t i = 0; i <= n; ++i) map.p.push_back(next++);
  map.q0 = next++;
  map.q.resize(m);
  for (auto& row : map.q)
    for (auto& v : row) v = next++;
  map.f = next++;

  auto q_at = [&](const Occurrence& o) { return map.q[o.clause - 1][o.position - 1]; };
  auto occurrence_head = [&](VertexId p_i, const std::vector<Occurrence>& list) {
    VertexSet head{p_i};
    for (const auto& o : list) head.push_back(q_at(o));
    return head;
  };

  for (std::size_t i = 1; i <= n; ++i) {
    VariableEdges pair;
    // Assigning false blocks the clauses where the variable appears positively.
    pair.false_edge = h.add_edge({map.p[i - 1]}, occurrence_head(map.p[i], occurrences.positive[i - 1]));
    pair.true_edge = h.add_edge({map.p[i - 1]}, occurrence_head(map.p[i], occurrences.negative[i - 1]));
    map.variable_edges.push_back(pair);
  }

  map.forced_edge = h.add_edge({map.p[n]}, {map.q0});
  map.connector_edge = h.add_edge({map.q0}, {map.q[0][0], map.q[0][1], map.q[0][2]});

  for (std::size_t k = 0; k < m; ++k) {
    std::array<EdgeId, 3> row{};
    for (std::size_t j = 0; j < 3; ++j) {
      VertexSet head = k + 1 < m ? VertexSet{map.q[k + 1][0], map.q[k + 1][1], map.q[k + 1][2]}
                                 : VertexSet{map.f};
      row[j] = h.add_edge({map.q[k][j]}, std::move(head));
    }
    map.clause_edges.push_back(row);
  }

  for (std::size_t i = 0; i <= n; ++i) h.set_label(map.p[i], "p" + std::to_string(i));
  h.set_label(map.q0, "q0");
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t j = 0; j < 3; ++j)
      h.set_label(map.q[k][j], "q" + std::to_string(k + 1) + "," + std::to_string(j + 1));
  h.set_label(map.f, "f");
  return r;
}

DecodedHyperpath decode_assignment(std::span<const EdgeId> hyperpath_edges,
                                   const ReductionMap& map) {
  EdgeSet edges(hyperpath_edges.begin(), hyperpath_edges.end());
  std::sort(edges.begin(), edges.end());
  auto has = [&](EdgeId e) { return std::binary_search(edges.begin(), edges.end(), e); };

  if (!has(map.forced_edge))
    throw Error(ErrorKind::MalformedHyperpath, "hyperpath does not use the forced edge");

  DecodedHyperpath out;
  out.assignment.values.resize(map.n_vars());
  for (std::size_t i = 0; i < map.n_vars(); ++i) {
    const bool f = has(map.variable_edges[i].false_edge);
    const bool t = has(map.variable_edges[i].true_edge);
    if (f == t)
      throw Error(ErrorKind::MalformedHyperpath,
                  "variable " + std::to_string(i + 1) + " has " + (f ? "both" : "neither") +
                      " of its edges");
    out.assignment.values[i] = t;
  }
  for (std::size_t k = 0; k < map.n_clauses(); ++k) {
    std::uint32_t chosen = 0;
    for (std::uint32_t j = 0; j < 3; ++j) {
      if (!has(map.clause_edges[k][j])) continue;
      if (chosen != 0)
        throw Error(ErrorKind::MalformedHyperpath,
                    "clause " + std::to_string(k + 1) + " has several edges");
      chosen = j + 1;
    }
    if (chosen == 0)
      throw Error(ErrorKind::MalformedHyperpath,
                  "clause " + std::to_string(k + 1) + " has no edge");
    out.witnesses.push_back(chosen);
  }
  return out;
}

std::vector<std::uint32_t> default_witnesses(const CnfFormula& f, const Assignment& a) {
  std::vector<std::uint32_t> out;
  for (std::size_t k = 0; k < f.clauses.size(); ++k) {
    std::uint32_t chosen = 0;
    for (std::uint32_t j = 0; j < 3 && chosen == 0; ++j)
      if (a.satisfies(f.clauses[k][j])) chosen = j + 1;
    if (chosen == 0)
      throw Error(ErrorKind::WitnessNotSatisfying,
                  "clause " + std::to_string(k + 1) + " is false under the assignment");
    out.push_back(chosen);
  }
  return out;
}

EdgeSet encode_hyperpath(const CnfFormula& f, const Assignment& a,
                         std::span<const std::uint32_t> witnesses,
                         const ReductionMap& map) {
  if (a.values.size() != f.n_vars || map.n_vars() != f.n_vars ||
      map.n_clauses() != f.clauses.size() || witnesses.size() != f.clauses.size())
    throw Error(ErrorKind::InvalidReference, "assignment, witnesses and map disagree in size");

  EdgeSet edges;
  for (std::size_t i = 0; i < map.n_vars(); ++i)
    edges.push_back(a.values[i] ? map.variable_edges[i].true_edge
                                : map.variable_edges[i].false_edge);
  edges.push_back(map.forced_edge);
  edges.push_back(map.connector_edge);
  for (std::size_t k = 0; k < f.clauses.size(); ++k) {
    const auto j = witnesses[k];
    if (j < 1 || j > 3 || !a.satisfies(f.clauses[k][j - 1]))
      throw Error(ErrorKind::WitnessNotSatisfying,
                  "clause " + std::to_string(k + 1) + " position " + std::to_string(j));
    edges.push_back(map.clause_edges[k][j - 1]);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

VerifyReport verify_equivalence(const CnfFormula& f, std::uint64_t node_budget) {
  if (f.n_vars > kVerifyMaxVars || f.clauses.size() > kVerifyMaxClauses)
    throw Error(ErrorKind::TooLarge, "verification needs n <= 12 and m <= 12");

  VerifyReport report;
  auto check = [&](bool pass, std::string name, std::string detail) {
    report.checks.push_back({pass, std::move(name), std::move(detail)});
  };

  const auto reduction = build_reduction(f);
  const auto& h = reduction.graph;
  const auto& map = reduction.map;
  const auto n = f.n_vars;
  const auto m = f.clauses.size();

  const auto cls = classify_hypergraph(h);
  check(cls == HypergraphClass::F, "gadget-f-hypergraph", "class=" + std::string(to_string(cls)));
  check(is_acyclic(h), "gadget-acyclic", "");
  check(h.vertex_count() == n + 3 * m + 3, "size-vertices",
        std::to_string(h.vertex_count()) + " expected " + std::to_string(n + 3 * m + 3));
  check(h.edge_count() == 2 * n + 3 * m + 2, "size-edges",
        std::to_string(h.edge_count()) + " expected " + std::to_string(2 * n + 3 * m + 2));
  const auto& forced = h.edge(map.forced_edge);
  check(forced.tail == VertexSet{map.p.back()} && forced.head == VertexSet{map.q0},
        "forced-edge-shape", "edge " + std::to_string(map.forced_edge));

  NodeBudget budget(node_budget);
  const auto witness = fhep_decide(h, map.source(), map.target(), map.forced_edge, budget);
  const auto model = sat_brute_force(f);
  report.satisfiable = model.has_value();
  report.forcible = witness.has_value();
  check(report.satisfiable == report.forcible, "sat-iff-forcible",
        std::string("fhep=") + (report.forcible ? "YES" : "NO") +
            " sat=" + (report.satisfiable ? "SAT" : "UNSAT"));

  if (witness) {
    try {
      const auto decoded = decode_assignment(witness->edges, map);
      check(evaluate(f, decoded.assignment), "decode-satisfies", "");
      const auto again = encode_hyperpath(f, decoded.assignment, decoded.witnesses, map);
      check(again == witness->edges, "witness-roundtrip", "encode(decode(witness)) == witness");
    } catch (const Error& err) {
      check(false, "witness-structure", err.what());
    }
  }
  if (model) {
    try {
      const auto edges = encode_hyperpath(f, *model, default_witnesses(f, *model), map);
      const bool ok = is_hyperpath(h, edges, map.source(), map.target()) &&
                      std::binary_search(edges.begin(), edges.end(), map.forced_edge);
      check(ok, "model-encode", "brute-force model with lowest witnesses");
      if (ok) check(decode_assignment(edges, map).assignment == *model, "model-decode-inverse", "");
    } catch (const Error& err) {
      check(false, "model-encode", err.what());
    }
  }
  return report;
}

} // namespace hypernet
