#include "hypernet/random.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <thread>

namespace hypernet {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

} // namespace

CnfFormula random_3cnf(Rng& rng, std::uint32_t max_vars, std::size_t max_clauses) {
  if (max_vars < 3 || max_clauses < 1)
    throw Error(ErrorKind::TooLarge, "random 3-CNF needs at least 3 variables and 1 clause");
  CnfFormula f;
  f.n_vars = static_cast<std::uint32_t>(uniform(rng, 3, max_vars));
  const auto m = uniform(rng, 1, max_clauses);
  std::vector<std::uint32_t> vars(f.n_vars);
  std::iota(vars.begin(), vars.end(), 1u);
  for (std::size_t k = 0; k < m; ++k) {
    std::shuffle(vars.begin(), vars.end(), rng);
    Clause c;
    for (std::size_t j = 0; j < 3; ++j) c[j] = Literal{vars[j], uniform(rng, 0, 1) == 1};
    f.clauses.push_back(c);
  }
  return f;
}

CnfFormula all_sign_patterns_3cnf() {
  CnfFormula f;
  f.n_vars = 3;
  for (unsigned mask = 0; mask < 8; ++mask)
    f.clauses.push_back(Clause{Literal{1, (mask & 1) != 0}, Literal{2, (mask & 2) != 0},
                               Literal{3, (mask & 4) != 0}});
  return f;
}

Hypergraph random_hypergraph(Rng& rng, const RandomHypergraphShape& shape) {
  const auto n = shape.vertices;
  Hypergraph h(n);
  if (n < 2) return h;
  // Position of each vertex in the hidden order used for acyclic instances.
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::shuffle(order.begin(), order.end(), rng);

  const std::size_t min_side = shape.allow_empty_sides ? 0 : 1;
  for (std::size_t i = 0; i < shape.edges; ++i) {
    std::vector<VertexId> pool = order;
    VertexSet tail, head;
    if (shape.acyclic) {
      // Split the hidden order: tail from the prefix, head from the suffix.
      const auto cut = uniform(rng, 1, n - 1);
      std::vector<VertexId> before(order.begin(), order.begin() + cut);
      std::vector<VertexId> after(order.begin() + cut, order.end());
      std::shuffle(before.begin(), before.end(), rng);
      std::shuffle(after.begin(), after.end(), rng);
      const auto t = shape.f_edges_only ? 1 : uniform(rng, min_side, std::min(shape.max_tail, before.size()));
      const auto hd = uniform(rng, min_side, std::min(shape.max_head, after.size()));
      tail.assign(before.begin(), before.begin() + t);
      head.assign(after.begin(), after.begin() + hd);
    } else {
      std::shuffle(pool.begin(), pool.end(), rng);
      const auto t = shape.f_edges_only ? 1 : uniform(rng, min_side, std::min(shape.max_tail, n - 1));
      const auto hd = uniform(rng, min_side, std::min(shape.max_head, n - t));
      tail.assign(pool.begin(), pool.begin() + t);
      head.assign(pool.begin() + t, pool.begin() + t + hd);
    }
    h.add_edge(std::move(tail), std::move(head));
  }
  return h;
}

std::vector<BatchInstance> verify_random_batch(std::size_t count, std::uint64_t seed,
                                               std::uint32_t max_vars,
                                               std::size_t max_clauses,
                                               std::uint64_t node_budget, unsigned threads) {
  std::vector<BatchInstance> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i].seed = seed + i;
    Rng rng(out[i].seed);
    out[i].formula = random_3cnf(rng, max_vars, max_clauses);
  }

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::vector<std::future<void>> workers;
  for (unsigned w = 0; w < threads; ++w)
    workers.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < count; i += threads)
        out[i].report = verify_equivalence(out[i].formula, node_budget);
    }));
  for (auto& worker : workers) worker.get();
  return out;
}

} // namespace hypernet
