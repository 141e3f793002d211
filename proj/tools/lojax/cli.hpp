// CLI surface: ideal parsing, subcommand dispatch, deterministic JSON/text
// reports. Kept as a library so the test suite can drive run_command
// directly.
#pragma once

#include "lojax/ideal.hpp"

#include <map>
#include <string>
#include <vector>

namespace lojax::cli {

/// Parsed input: variable names plus named generator lists.
struct IdealSpec {
  std::vector<std::string> variables;
  std::map<std::string, MonomialIdeal> ideals;  // insertion-independent, keyed by name
};

/// Parses a comma-separated monomial list ("x^4, x*y, y^4") against declared
/// variables. Numeric factors are accepted and ignored (monomial ideal
/// semantics). Throws InvalidInput with the character position on bad input.
MonomialIdeal parse_ideal(const std::string& text, const std::vector<std::string>& variables);

/// Variables inferred from first appearance when none are declared.
std::vector<std::string> infer_variables(const std::string& text);

/// JSON document loader for {"variables": [...], "ideals": {name: [gen, ...]}}
/// where a generator is a monomial string or a raw exponent row.
IdealSpec load_spec_json(const std::string& json_text);

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Exit codes: 0 ok, 1 input error, 2 not applicable, 3 limit exceeded,
/// 70 internal invariant breach.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace lojax::cli
