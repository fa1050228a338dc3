#ifndef SUPERLIE_IO_HPP
#define SUPERLIE_IO_HPP

// Algebra file format and the analysis report.
//
//   superalgebra v1
//   name <token>
//   field Q | field F <p>
//   dim <n>
//   parity <b1> ... <bn>
//   c <i> <j> <k> <value>      (1-based, i <= j, value = integer or a/b)
//
// '#' starts a comment; blank lines are ignored.

#include "superlie/core.hpp"
#include "superlie/structure.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace superlie {

using AnyAlgebra = std::variant<SuperAlgebra<Rational>, SuperAlgebra<Zp>>;

/// Throws ParseError for malformed text and ConstraintError for text that is
/// well formed but violates a structural rule.
AnyAlgebra parse_algebra(std::string_view text);

template <typename Scalar>
std::string serialize(const SuperAlgebra<Scalar>& a) {
  std::string out = "superalgebra v1\n";
  out += "name " + a.name() + "\n";
  out += "field " + a.field().to_string() + "\n";
  out += "dim " + std::to_string(a.dim()) + "\n";
  out += "parity";
  for (Parity p : a.parities()) out += " " + std::to_string(bit(p));
  out += "\n";
  for (const auto& [key, value] : a.table())
    out += "c " + std::to_string(key[0] + 1) + " " + std::to_string(key[1] + 1) + " " + std::to_string(key[2] + 1) +
           " " + value.str() + "\n";
  return out;
}

std::string serialize(const AnyAlgebra& a);

/// Converts to another field: Q -> F_p reduces the constants (p must not
/// divide a denominator); F_p -> F_p is the identity. Anything else throws
/// FieldError.
AnyAlgebra change_field(const AnyAlgebra& a, const FieldDescriptor& target);

/// Ordered key-value lines.
struct AnalysisReport {
  std::vector<std::pair<std::string, std::string>> entries;

  void add(std::string key, std::string value) { entries.emplace_back(std::move(key), std::move(value)); }
  const std::string* find(std::string_view key) const;
  std::string str() const;
};

struct AnalysisOptions {
  SimplicityOptions simplicity;
  /// Worker threads for the independent space computations; the report does
  /// not depend on it.
  unsigned threads = 1;
};

/// Status raised when the simplicity enumeration ran out of budget.
inline bool budget_exceeded(const AnalysisReport& r) {
  const auto* v = r.find("simplicity_reason");
  return v && *v == "budget_exceeded";
}

/// Runs validation, structure and all space computations. Throws
/// InvalidAlgebra when the algebra fails validate().
AnalysisReport run_analyze(const AnyAlgebra& a, const AnalysisOptions& opt = {});

}  // namespace superlie

#endif  // SUPERLIE_IO_HPP
