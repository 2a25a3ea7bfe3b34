#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hypernet/io.hpp"
#include "hypernet/random.hpp"

namespace hypernet::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Hypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return read_hypergraph(in);
}

// Labels take precedence over indices so that reduction outputs can be
// addressed as p0, q1,2, f.
VertexId resolve_vertex(const Hypergraph& h, const std::string& name) {
  if (auto v = h.find_label(name)) return *v;
  VertexId v = 0;
  auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), v);
  if (name.empty() || ec != std::errc() || ptr != name.data() + name.size() || !h.has_vertex(v))
    throw Error(ErrorKind::InvalidReference, "unknown vertex '" + name + "'");
  return v;
}

struct Options {
  std::string format = "text";
  std::uint64_t budget = kDefaultNodeBudget;
  std::uint64_t seed = 0;

  std::string input;
  std::string second_input;
  std::string s;
  std::string d;
  std::size_t limit = kDefaultHyperpathLimit;
  EdgeId edge = 0;
  std::string out;
  std::string highlight;
  std::size_t random_count = 0;
  std::uint32_t max_vars = 6;
  std::size_t max_clauses = 6;

  bool json() const { return format == "json"; }
};

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_classify(const Options& o, std::ostream& out) {
  const auto h = load_hypergraph(o.input);
  const auto cls = std::string(to_string(classify_hypergraph(h)));
  if (o.json()) print_json(out, {{"class", cls}});
  else out << cls << '\n';
  return kSuccess;
}

int cmd_acyclic(const Options& o, std::ostream& out) {
  const auto h = load_hypergraph(o.input);
  const bool acyclic = is_acyclic(h);
  if (o.json()) print_json(out, {{"acyclic", acyclic}});
  else out << (acyclic ? "acyclic" : "cyclic") << '\n';
  return kSuccess;
}

int cmd_check_hyperpath(const Options& o, std::ostream& out) {
  const auto h = load_hypergraph(o.input);
  std::istringstream text(read_file(o.second_input));
  std::string line;
  while (std::getline(text, line) && line.find_first_not_of(" \t\r") == std::string::npos) {}
  const auto cert = parse_certificate(line);

  std::string reason;
  check_vertex(h, cert.s);
  check_vertex(h, cert.d);
  check_edges(h, cert.edges);
  auto sorted_order = cert.order;
  std::sort(sorted_order.begin(), sorted_order.end());
  if (sorted_order != cert.edges) reason = "order is not a permutation of edges";
  else if (!is_valid_ordering(h, cert.order, cert.s, cert.d)) reason = "order violates tail coverage or does not end at d";
  else if (!is_hyperpath(h, cert.edges, cert.s, cert.d)) reason = "edge set is not minimal";

  if (o.json()) print_json(out, {{"valid", reason.empty()}, {"reason", reason}});
  else if (reason.empty()) out << "VALID\n";
  else out << "INVALID " << reason << '\n';
  return reason.empty() ? kSuccess : kInvalid;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const auto h = load_hypergraph(o.input);
  const auto s = resolve_vertex(h, o.s);
  const auto d = resolve_vertex(h, o.d);
  NodeBudget budget(o.budget);
  const auto paths = enumerate_hyperpaths(h, s, d, o.limit, budget);
  if (o.json()) {
    json arr = json::array();
    for (const auto& p : paths) arr.push_back(to_json(p));
    print_json(out, {{"count", paths.size()}, {"hyperpaths", arr}});
  } else {
    for (const auto& p : paths) out << format_certificate(p) << '\n';
  }
  return kSuccess;
}

int cmd_fhep(const Options& o, std::ostream& out) {
  const auto h = load_hypergraph(o.input);
  const auto s = resolve_vertex(h, o.s);
  const auto d = resolve_vertex(h, o.d);
  h.edge(o.edge);
  NodeBudget budget(o.budget);
  const auto witness = fhep_decide(h, s, d, o.edge, budget);
  if (o.json()) {
    print_json(out, {{"forcible", witness.has_value()},
                     {"witness", witness ? to_json(*witness) : json(nullptr)}});
  } else if (witness) {
    out << "YES\n" << format_certificate(*witness) << '\n';
  } else {
    out << "NO\n";
  }
  return kSuccess;
}

int report_network(const Options& o, const Hypernetwork& net, std::ostream& out) {
  if (o.json()) print_json(out, {{"hypernetwork", to_json(net)}});
  else write_hypernetwork(out, net);
  return kSuccess;
}

int cmd_sdhp(const Options& o, std::ostream& out) {
  const auto h = load_hypergraph(o.input);
  const auto s = resolve_vertex(h, o.s);
  const auto d = resolve_vertex(h, o.d);
  SolverOptions opts;
  opts.hyperpath_limit = o.limit;
  opts.node_budget = o.budget;
  const auto net = sdhp_compute(h, s, d, opts);
  report_network(o, net, out);
  return net.empty() ? kEmptyResult : kSuccess;
}

int cmd_s_hypernetwork(const Options& o, std::ostream& out) {
  const auto h = load_hypergraph(o.input);
  const auto s = resolve_vertex(h, o.s);
  SolverOptions opts;
  opts.hyperpath_limit = o.limit;
  opts.node_budget = o.budget;
  return report_network(o, s_hypernetwork(h, s, opts), out);
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const auto formula = parse_dimacs(read_file(o.input));
  const auto reduction = build_reduction(formula);
  std::string prefix = o.out;
  if (prefix.empty()) {
    std::filesystem::path p(o.input);
    prefix = (p.parent_path() / p.stem()).string();
  }
  const auto hg_path = prefix + ".hg";
  const auto map_path = prefix + ".map";
  {
    std::ofstream hg(hg_path);
    std::ofstream map(map_path);
    if (!hg || !map) throw Error(ErrorKind::ParseError, "cannot write " + prefix + ".{hg,map}");
    write_hypergraph(hg, reduction.graph);
    write_reduction_map(map, reduction.map);
  }
  if (o.json()) {
    print_json(out, {{"vertices", reduction.graph.vertex_count()},
                     {"edges", reduction.graph.edge_count()},
                     {"forced", reduction.map.forced_edge},
                     {"hypergraph", hg_path},
                     {"map", map_path}});
  } else {
    out << "vertices " << reduction.graph.vertex_count() << '\n'
        << "edges " << reduction.graph.edge_count() << '\n'
        << "forced " << reduction.map.forced_edge << '\n'
        << "wrote " << hg_path << '\n'
        << "wrote " << map_path << '\n';
  }
  return kSuccess;
}

int cmd_verify(const Options& o, std::ostream& out) {
  bool all_pass = true;
  json instances = json::array();

  auto emit = [&](const std::string& name, const VerifyReport& report) {
    all_pass = all_pass && report.all_pass();
    if (o.json()) {
      auto j = to_json(report);
      j["instance"] = name;
      instances.push_back(j);
    } else {
      if (!name.empty()) out << "# " << name << '\n';
      write_verify_report(out, report);
    }
  };

  if (!o.input.empty()) emit(o.input, verify_equivalence(parse_dimacs(read_file(o.input)), o.budget));
  if (o.random_count > 0)
    for (const auto& inst : verify_random_batch(o.random_count, o.seed, o.max_vars, o.max_clauses, o.budget))
      emit("seed " + std::to_string(inst.seed), inst.report);

  if (o.json()) print_json(out, {{"pass", all_pass}, {"instances", instances}});
  return all_pass ? kSuccess : kInvalid;
}

int cmd_dot(const Options& o, std::ostream& out) {
  const auto h = load_hypergraph(o.input);
  DotOptions dot;
  if (!o.highlight.empty()) dot.highlight = parse_csv(o.highlight);
  if (o.out.empty()) {
    write_dot(out, h, dot);
  } else {
    std::ofstream file(o.out);
    if (!file) throw Error(ErrorKind::ParseError, "cannot write " + o.out);
    write_dot(file, h, dot);
  }
  return kSuccess;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::LimitExceeded:
  case ErrorKind::BudgetExceeded: return kBudgetExceeded;
  default: return kInvalid;
  }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Directed hypergraphs: hyperpaths, hypernetworks and the 3-SAT gadget", "hypernet"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--budget", o.budget, "Search node budget")->capture_default_str();
  app.add_option("--seed", o.seed, "Seed for randomized commands")->capture_default_str();

  auto add_input = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", o.input, what)->required();
  };
  auto add_s = [&](CLI::App* sub) {
    sub->add_option("--s", o.s, "Source vertex (label or index)")->required();
  };
  auto add_d = [&](CLI::App* sub) {
    sub->add_option("--d", o.d, "Target vertex (label or index)")->required();
  };

  auto* classify = app.add_subcommand("classify", "Print B, F, BF or General");
  add_input(classify, "Hypergraph file");
  auto* acyclic = app.add_subcommand("acyclic", "Print acyclic or cyclic");
  add_input(acyclic, "Hypergraph file");

  auto* check = app.add_subcommand("check-hyperpath", "Validate a hyperpath certificate");
  add_input(check, "Hypergraph file");
  check->add_option("certificate", o.second_input, "Certificate file")->required();

  auto* enumerate = app.add_subcommand("enumerate", "List every s-d hyperpath");
  add_input(enumerate, "Hypergraph file");
  add_s(enumerate);
  add_d(enumerate);
  enumerate->add_option("--limit", o.limit, "Maximum hyperpath count")->capture_default_str();

  auto* fhep = app.add_subcommand("fhep", "Is some s-d hyperpath through --edge?");
  add_input(fhep, "Hypergraph file");
  add_s(fhep);
  add_d(fhep);
  fhep->add_option("--edge", o.edge, "Edge id")->required();

  auto* sdhp = app.add_subcommand("sdhp", "Compute the (s,d)-hypernetwork");
  add_input(sdhp, "Hypergraph file");
  add_s(sdhp);
  add_d(sdhp);
  sdhp->add_option("--limit", o.limit, "Hyperpath count before per-edge search")->capture_default_str();

  auto* snet = app.add_subcommand("s-hypernetwork", "Compute the s-hypernetwork");
  add_input(snet, "Hypergraph file");
  add_s(snet);
  snet->add_option("--limit", o.limit, "Hyperpath count before per-edge search")->capture_default_str();

  auto* reduce = app.add_subcommand("reduce", "Build the gadget for a DIMACS 3-CNF");
  add_input(reduce, "DIMACS CNF file");
  reduce->add_option("--out", o.out, "Output prefix (default: input without extension)");

  auto* verify = app.add_subcommand("verify", "Check the reduction against brute-force SAT");
  verify->add_option("input", o.input, "DIMACS CNF file");
  verify->add_option("--random", o.random_count, "Number of random instances");
  verify->add_option("--max-vars", o.max_vars, "Random instance variables")
      ->check(CLI::Range(3u, kVerifyMaxVars))
      ->capture_default_str();
  verify->add_option("--max-clauses", o.max_clauses, "Random instance clauses")
      ->check(CLI::Range(std::size_t{1}, kVerifyMaxClauses))
      ->capture_default_str();

  auto* dot = app.add_subcommand("dot", "Write Graphviz DOT");
  add_input(dot, "Hypergraph file");
  dot->add_option("--highlight", o.highlight, "Edge ids to colour, comma separated");
  dot->add_option("--out", o.out, "Output file (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }

  try {
    if (verify->parsed() && o.input.empty() && o.random_count == 0)
      throw Error(ErrorKind::ParseError, "verify needs a CNF file or --random N");
    if (classify->parsed()) return cmd_classify(o, out);
    if (acyclic->parsed()) return cmd_acyclic(o, out);
    if (check->parsed()) return cmd_check_hyperpath(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (fhep->parsed()) return cmd_fhep(o, out);
    if (sdhp->parsed()) return cmd_sdhp(o, out);
    if (snet->parsed()) return cmd_s_hypernetwork(o, out);
    if (reduce->parsed()) return cmd_reduce(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (dot->parsed()) return cmd_dot(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kInvalid;
}

} // namespace hypernet::cli
