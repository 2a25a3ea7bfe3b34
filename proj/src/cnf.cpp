#include "hypernet/cnf.hpp"

#include <charconv>
#include <sstream>
#include <string>

namespace hypernet {

namespace {

long long parse_int(std::string_view token, std::size_t line) {
  long long value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) +
                                           ": bad integer '" + std::string(token) + "'");
  return value;
}

void check_clause(const std::vector<Literal>& lits, std::size_t index) {
  const auto where = "clause " + std::to_string(index + 1);
  if (lits.size() != 3)
    throw Error(ErrorKind::Not3Sat,
                where + " has " + std::to_string(lits.size()) + " literals");
  if (lits[0].var == lits[1].var || lits[0].var == lits[2].var ||
      lits[1].var == lits[2].var)
    throw Error(ErrorKind::Not3Sat, where + " repeats a variable");
}

} // namespace

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t declared_clauses = 0;
  CnfFormula f;
  std::vector<Literal> pending;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string token;
    if (!(tokens >> token)) continue;
    if (token[0] == 'c') continue;
    if (token == "%") break;  // SATLIB trailer
    if (token == "p") {
      std::string format, n_text, m_text, extra;
      if (have_header || !(tokens >> format >> n_text >> m_text) || format != "cnf" ||
          (tokens >> extra))
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(line_no) + ": bad header");
      const auto n = parse_int(n_text, line_no);
      const auto m = parse_int(m_text, line_no);
      if (n < 0 || m < 0 || n > UINT32_MAX)
        throw Error(ErrorKind::ParseError, "negative or oversized header counts");
      f.n_vars = static_cast<std::uint32_t>(n);
      declared_clauses = static_cast<std::size_t>(m);
      have_header = true;
      continue;
    }
    if (!have_header)
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(line_no) + ": clause before header");
    do {
      const auto value = parse_int(token, line_no);
      if (value == 0) {
        check_clause(pending, f.clauses.size());
        f.clauses.push_back(Clause{pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      const auto var = value < 0 ? -value : value;
      if (var > f.n_vars)
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) +
                                               ": variable " + std::to_string(var) +
                                               " exceeds header");
      pending.push_back(Literal{static_cast<std::uint32_t>(var), value > 0});
    } while (tokens >> token);
  }

  if (!have_header) throw Error(ErrorKind::ParseError, "missing 'p cnf' header");
  if (!pending.empty()) throw Error(ErrorKind::ParseError, "last clause not terminated by 0");
  if (f.clauses.size() != declared_clauses)
    throw Error(ErrorKind::ParseError, "header declares " + std::to_string(declared_clauses) +
                                           " clauses, found " +
                                           std::to_string(f.clauses.size()));
  return f;
}

void validate(const CnfFormula& f) {
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    const auto& c = f.clauses[i];
    for (const auto& lit : c)
      if (lit.var == 0 || lit.var > f.n_vars)
        throw Error(ErrorKind::ParseError, "clause " + std::to_string(i + 1) +
                                               " uses variable " + std::to_string(lit.var));
    check_clause({c.begin(), c.end()}, i);
  }
}

bool evaluate(const CnfFormula& f, const Assignment& a) {
  for (const auto& clause : f.clauses) {
    bool sat = false;
    for (const auto& lit : clause) sat = sat || a.satisfies(lit);
    if (!sat) return false;
  }
  return true;
}

std::optional<Assignment> sat_brute_force(const CnfFormula& f) {
  if (f.n_vars > kBruteForceMaxVars)
    throw Error(ErrorKind::TooLarge, std::to_string(f.n_vars) + " variables (max " +
                                         std::to_string(kBruteForceMaxVars) + ")");
  const std::uint32_t n = f.n_vars;
  Assignment a;
  a.values.resize(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    // Variable 1 is the most significant bit.
    for (std::uint32_t i = 0; i < n; ++i) a.values[i] = (mask >> (n - 1 - i)) & 1;
    if (evaluate(f, a)) return a;
  }
  return std::nullopt;
}

} // namespace hypernet
