#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hypernet/hyperpath.hpp"
#include "hypernet/reduction.hpp"
#include "hypernet/solver.hpp"

namespace hypernet {

// Hypergraph exchange format:
//
//   hypergraph <n_vertices> <n_edges>
//   edge <id>: <tail csv> -> <head csv>      (one per edge, ids in order)
//   label <vertex> <string>                  (optional)
//
// An empty side is written as '-'. Blank lines and '#' comments are skipped.
Hypergraph read_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(std::string_view text);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

/// `hyperpath s=<v> d=<v> edges=<csv> order=<csv>`
std::string format_certificate(const Hyperpath& p);

struct Certificate {
  VertexId s = 0;
  VertexId d = 0;
  EdgeSet edges;
  std::vector<EdgeId> order;
};

Certificate parse_certificate(std::string_view line);

/// `hypernetwork s=<v> d=<v|->`, then `vertices: <csv>` and `edges: <csv>`.
void write_hypernetwork(std::ostream& out, const Hypernetwork& net);
Hypernetwork read_hypernetwork(std::istream& in);

// Reduction sidecar: `forced`, `connector`, `vertex <name> <id>`,
// `varedge <i> false <id> true <id>`, `clauseedge <i> <j> <id>`.
void write_reduction_map(std::ostream& out, const ReductionMap& map);
ReductionMap read_reduction_map(std::istream& in);

/// `PASS|FAIL <check> <detail>` per line.
void write_verify_report(std::ostream& out, const VerifyReport& report);

struct DotOptions {
  EdgeSet highlight;
  std::string name = "hypergraph";
};

/// Each hyperedge becomes a small square junction; tail vertices point into
/// it and it points to the head vertices. Highlighted edges and their
/// vertices are drawn red.
void write_dot(std::ostream& out, const Hypergraph& h, const DotOptions& options = {});

std::string format_csv(std::span<const std::uint32_t> ids);
std::vector<std::uint32_t> parse_csv(std::string_view csv);

nlohmann::json to_json(const Hypergraph& h);
nlohmann::json to_json(const Hyperpath& p);
nlohmann::json to_json(const Hypernetwork& net);
nlohmann::json to_json(const ReductionMap& map);
nlohmann::json to_json(const VerifyReport& report);

} // namespace hypernet
