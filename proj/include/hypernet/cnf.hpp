#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hypernet/error.hpp"

namespace hypernet {

struct Literal {
  std::uint32_t var = 1;  // 1-based
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

/// 3-CNF formula. Every clause holds three literals over distinct variables
/// in 1..n_vars.
struct CnfFormula {
  std::uint32_t n_vars = 0;
  std::vector<Clause> clauses;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// Truth value per variable; values[i] belongs to variable i + 1.
struct Assignment {
  std::vector<bool> values;

  bool operator()(std::uint32_t var) const { return values.at(var - 1); }
  bool satisfies(const Literal& lit) const { return (*this)(lit.var) == lit.positive; }

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

inline constexpr std::uint32_t kBruteForceMaxVars = 24;

/// Reads DIMACS CNF. Throws ParseError on malformed input and Not3Sat for a
/// clause without exactly three distinct variables.
CnfFormula parse_dimacs(std::string_view text);

/// Checks the 3-CNF invariants, throwing Not3Sat or ParseError.
void validate(const CnfFormula& f);

bool evaluate(const CnfFormula& f, const Assignment& a);

/// First satisfying assignment in lexicographic order (v1 most significant,
/// false before true), or nullopt when unsatisfiable.
std::optional<Assignment> sat_brute_force(const CnfFormula& f);

} // namespace hypernet
