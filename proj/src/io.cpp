#include "hypernet/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace hypernet {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::uint32_t parse_id(std::string_view token) {
  token = trim(token);
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
    throw Error(ErrorKind::ParseError, "bad id '" + std::string(token) + "'");
  return value;
}

bool starts_with_word(std::string_view line, std::string_view word) {
  return line.substr(0, word.size()) == word &&
         (line.size() == word.size() || line[word.size()] == ' ' || line[word.size()] == '\t');
}

// Reads `key=value` from a whitespace-separated token.
std::string_view value_of(std::string_view token, std::string_view key) {
  if (token.size() <= key.size() || token.substr(0, key.size()) != key ||
      token[key.size()] != '=')
    throw Error(ErrorKind::ParseError, "expected " + std::string(key) + "=, got '" +
                                           std::string(token) + "'");
  return token.substr(key.size() + 1);
}

std::vector<std::string> split_ws(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

} // namespace

std::string format_csv(std::span<const std::uint32_t> ids) {
  if (ids.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(ids[i]);
  }
  return out;
}

std::vector<std::uint32_t> parse_csv(std::string_view csv) {
  csv = trim(csv);
  if (csv == "-") return {};
  std::vector<std::uint32_t> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = csv.find(',', start);
    out.push_back(parse_id(csv.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Hypergraph read_hypergraph(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<Hypergraph> h;
  std::size_t declared_edges = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    try {
      if (!h) {
        const auto tokens = split_ws(line);
        if (tokens.size() != 3 || tokens[0] != "hypergraph")
          throw Error(ErrorKind::ParseError, "expected 'hypergraph <n_vertices> <n_edges>'");
        h.emplace(parse_id(tokens[1]));
        declared_edges = parse_id(tokens[2]);
        continue;
      }
      if (starts_with_word(line, "edge")) {
        const auto colon = line.find(':');
        const auto arrow = line.find("->");
        if (colon == std::string_view::npos || arrow == std::string_view::npos || arrow < colon)
          throw Error(ErrorKind::ParseError, "expected 'edge <id>: <tail> -> <head>'");
        const auto id = parse_id(line.substr(4, colon - 4));
        if (id != h->edge_count())
          throw Error(ErrorKind::ParseError, "edge " + std::to_string(id) + " out of order");
        auto tail = parse_csv(line.substr(colon + 1, arrow - colon - 1));
        auto head = parse_csv(line.substr(arrow + 2));
        h->add_edge(std::move(tail), std::move(head));
      } else if (starts_with_word(line, "label")) {
        auto rest = trim(line.substr(5));
        const auto space = rest.find_first_of(" \t");
        if (space == std::string_view::npos) throw Error(ErrorKind::ParseError, "label without text");
        const auto v = parse_id(rest.substr(0, space));
        const auto text = trim(rest.substr(space));
        if (!h->has_vertex(v)) throw Error(ErrorKind::ParseError, "label for unknown vertex");
        h->set_label(v, std::string(text));
      } else {
        throw Error(ErrorKind::ParseError, "unrecognised line '" + std::string(line) + "'");
      }
    } catch (const Error& err) {
      throw Error(err.kind(), "line " + std::to_string(line_no) + ": " + err.message());
    }
  }
  if (!h) throw Error(ErrorKind::ParseError, "missing 'hypergraph' header");
  if (h->edge_count() != declared_edges)
    throw Error(ErrorKind::ParseError, "header declares " + std::to_string(declared_edges) +
                                           " edges, found " + std::to_string(h->edge_count()));
  return std::move(*h);
}

Hypergraph parse_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << "hypergraph " << h.vertex_count() << ' ' << h.edge_count() << '\n';
  for (const auto& e : h.edges())
    out << "edge " << e.id << ": " << format_csv(e.tail) << " -> " << format_csv(e.head) << '\n';
  for (VertexId v = 0; v < h.vertex_count(); ++v)
    if (auto l = h.label(v)) out << "label " << v << ' ' << *l << '\n';
}

std::string format_certificate(const Hyperpath& p) {
  return "hyperpath s=" + std::to_string(p.s) + " d=" + std::to_string(p.d) +
         " edges=" + format_csv(p.edges) + " order=" + format_csv(p.order);
}

Certificate parse_certificate(std::string_view line) {
  const auto tokens = split_ws(line);
  if (tokens.size() != 5 || tokens[0] != "hyperpath")
    throw Error(ErrorKind::ParseError,
                "expected 'hyperpath s=<v> d=<v> edges=<csv> order=<csv>'");
  Certificate c;
  c.s = parse_id(value_of(tokens[1], "s"));
  c.d = parse_id(value_of(tokens[2], "d"));
  c.edges = parse_csv(value_of(tokens[3], "edges"));
  c.order = parse_csv(value_of(tokens[4], "order"));
  std::sort(c.edges.begin(), c.edges.end());
  if (std::adjacent_find(c.edges.begin(), c.edges.end()) != c.edges.end())
    throw Error(ErrorKind::ParseError, "duplicate edge id in certificate");
  return c;
}

void write_hypernetwork(std::ostream& out, const Hypernetwork& net) {
  out << "hypernetwork s=" << net.s << " d=" << (net.d ? std::to_string(*net.d) : "-") << '\n'
      << "vertices: " << format_csv(net.vertices) << '\n'
      << "edges: " << format_csv(net.edges) << '\n';
}

Hypernetwork read_hypernetwork(std::istream& in) {
  std::string header, vertices, edges;
  if (!std::getline(in, header) || !std::getline(in, vertices) || !std::getline(in, edges))
    throw Error(ErrorKind::ParseError, "hypernetwork report needs three lines");
  const auto tokens = split_ws(header);
  if (tokens.size() != 3 || tokens[0] != "hypernetwork")
    throw Error(ErrorKind::ParseError, "expected 'hypernetwork s=<v> d=<v|->'");
  Hypernetwork net;
  net.s = parse_id(value_of(tokens[1], "s"));
  const auto d = value_of(tokens[2], "d");
  if (d != "-") net.d = parse_id(d);
  auto field = [](std::string_view line, std::string_view key) {
    if (line.substr(0, key.size()) != key)
      throw Error(ErrorKind::ParseError, "expected '" + std::string(key) + "'");
    return parse_csv(line.substr(key.size()));
  };
  net.vertices = field(vertices, "vertices:");
  net.edges = field(edges, "edges:");
  return net;
}

void write_reduction_map(std::ostream& out, const ReductionMap& map) {
  out << "forced " << map.forced_edge << '\n';
  out << "connector " << map.connector_edge << '\n';
  for (std::size_t i = 0; i < map.p.size(); ++i) out << "vertex p" << i << ' ' << map.p[i] << '\n';
  out << "vertex q0 " << map.q0 << '\n';
  for (std::size_t k = 0; k < map.q.size(); ++k)
    for (std::size_t j = 0; j < 3; ++j)
      out << "vertex q" << k + 1 << ',' << j + 1 << ' ' << map.q[k][j] << '\n';
  out << "vertex f " << map.f << '\n';
  for (std::size_t i = 0; i < map.variable_edges.size(); ++i)
    out << "varedge " << i + 1 << " false " << map.variable_edges[i].false_edge << " true "
        << map.variable_edges[i].true_edge << '\n';
  for (std::size_t k = 0; k < map.clause_edges.size(); ++k)
    for (std::size_t j = 0; j < 3; ++j)
      out << "clauseedge " << k + 1 << ' ' << j + 1 << ' ' << map.clause_edges[k][j] << '\n';
}

ReductionMap read_reduction_map(std::istream& in) {
  ReductionMap map;
  bool have_forced = false, have_connector = false, have_q0 = false, have_f = false;
  std::string raw;
  std::size_t line_no = 0;

  auto grow = [](auto& vec, std::size_t index) {
    if (vec.size() <= index) vec.resize(index + 1);
  };

  while (std::getline(in, raw)) {
    ++line_no;
    const auto tokens = split_ws(raw);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    const auto& kind = tokens[0];
    if (kind == "forced" && tokens.size() == 2) {
      map.forced_edge = parse_id(tokens[1]);
      have_forced = true;
    } else if (kind == "connector" && tokens.size() == 2) {
      map.connector_edge = parse_id(tokens[1]);
      have_connector = true;
    } else if (kind == "vertex" && tokens.size() == 3) {
      const std::string_view name = tokens[1];
      const auto id = parse_id(tokens[2]);
      if (name == "q0") {
        map.q0 = id;
        have_q0 = true;
      } else if (name == "f") {
        map.f = id;
        have_f = true;
      } else if (name.front() == 'p') {
        const auto i = parse_id(name.substr(1));
        grow(map.p, i);
        map.p[i] = id;
      } else if (name.front() == 'q' && name.find(',') != std::string_view::npos) {
        const auto comma = name.find(',');
        const auto k = parse_id(name.substr(1, comma - 1));
        const auto j = parse_id(name.substr(comma + 1));
        if (k == 0 || j == 0 || j > 3) parse_fail(line_no, "bad clause vertex name");
        grow(map.q, k - 1);
        map.q[k - 1][j - 1] = id;
      } else {
        parse_fail(line_no, "unknown vertex name '" + std::string(name) + "'");
      }
    } else if (kind == "varedge" && tokens.size() == 6 && tokens[2] == "false" &&
               tokens[4] == "true") {
      const auto i = parse_id(tokens[1]);
      if (i == 0) parse_fail(line_no, "variables are 1-based");
      grow(map.variable_edges, i - 1);
      map.variable_edges[i - 1] = VariableEdges{parse_id(tokens[3]), parse_id(tokens[5])};
    } else if (kind == "clauseedge" && tokens.size() == 4) {
      const auto k = parse_id(tokens[1]);
      const auto j = parse_id(tokens[2]);
      if (k == 0 || j == 0 || j > 3) parse_fail(line_no, "bad clause edge index");
      grow(map.clause_edges, k - 1);
      map.clause_edges[k - 1][j - 1] = parse_id(tokens[3]);
    } else {
      parse_fail(line_no, "unrecognised line '" + raw + "'");
    }
  }
  if (!have_forced || !have_connector || !have_q0 || !have_f)
    throw Error(ErrorKind::ParseError, "map lacks forced/connector/q0/f entries");
  if (map.p.size() != map.variable_edges.size() + 1 || map.q.size() != map.clause_edges.size())
    throw Error(ErrorKind::ParseError, "map variable or clause counts disagree");
  return map;
}

void write_verify_report(std::ostream& out, const VerifyReport& report) {
  for (const auto& c : report.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.check;
    if (!c.detail.empty()) out << ' ' << c.detail;
    out << '\n';
  }
}

void write_dot(std::ostream& out, const Hypergraph& h, const DotOptions& options) {
  std::vector<char> hot_edge(h.edge_count(), 0);
  check_edges(h, options.highlight);
  for (auto e : options.highlight) hot_edge[e] = 1;
  const auto hot_vertices = incident_vertices(h, options.highlight);

  out << "digraph \"" << escape(options.name) << "\" {\n"
      << "  rankdir=LR;\n"
      << "  node [shape=circle];\n";
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    out << "  v" << v << " [label=\"" << escape(h.vertex_name(v)) << '"';
    if (std::binary_search(hot_vertices.begin(), hot_vertices.end(), v))
      out << ", color=red, fontcolor=red";
    out << "];\n";
  }
  for (const auto& e : h.edges()) {
    const char* colour = hot_edge[e.id] ? "red" : "black";
    out << "  e" << e.id << " [shape=square, label=\"\", width=0.12, height=0.12, "
        << "style=filled, fillcolor=" << colour << ", color=" << colour
        << ", tooltip=\"e" << e.id << "\"];\n";
    for (auto v : e.tail)
      out << "  v" << v << " -> e" << e.id << " [arrowhead=none, color=" << colour << "];\n";
    for (auto v : e.head)
      out << "  e" << e.id << " -> v" << v << " [color=" << colour << "];\n";
  }
  out << "}\n";
}

nlohmann::json to_json(const Hypergraph& h) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : h.edges())
    edges.push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}});
  nlohmann::json labels = nlohmann::json::object();
  for (VertexId v = 0; v < h.vertex_count(); ++v)
    if (auto l = h.label(v)) labels[std::to_string(v)] = std::string(*l);
  return {{"n_vertices", h.vertex_count()}, {"edges", edges}, {"labels", labels}};
}

nlohmann::json to_json(const Hyperpath& p) {
  return {{"s", p.s}, {"d", p.d}, {"edges", p.edges}, {"order", p.order},
          {"vertices", p.vertices}};
}

nlohmann::json to_json(const Hypernetwork& net) {
  return {{"s", net.s},
          {"d", net.d ? nlohmann::json(*net.d) : nlohmann::json(nullptr)},
          {"vertices", net.vertices},
          {"edges", net.edges}};
}

nlohmann::json to_json(const ReductionMap& map) {
  nlohmann::json vars = nlohmann::json::array();
  for (const auto& v : map.variable_edges)
    vars.push_back({{"false", v.false_edge}, {"true", v.true_edge}});
  return {{"forced", map.forced_edge}, {"connector", map.connector_edge},
          {"p", map.p},                {"q0", map.q0},
          {"q", map.q},                {"f", map.f},
          {"varedges", vars},          {"clauseedges", map.clause_edges}};
}

nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"status", c.pass ? "PASS" : "FAIL"}, {"check", c.check}, {"detail", c.detail}});
  return {{"checks", checks},
          {"satisfiable", report.satisfiable},
          {"forcible", report.forcible},
          {"pass", report.all_pass()}};
}

} // namespace hypernet
