#ifndef SUPERLIE_ERRORS_HPP
#define SUPERLIE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace superlie {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A structural rule of the algebra model was violated (index order,
/// duplicate constant, grading, even square, field restriction).
struct ConstraintError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

struct NotHomogeneous : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An operation that needs a Lie superalgebra got a table failing validate().
struct InvalidAlgebra : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotPerfect : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoFactorization : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotCommuting : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PolicyMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace superlie

#endif  // SUPERLIE_ERRORS_HPP
