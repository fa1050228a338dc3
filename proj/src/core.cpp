#include "superlie/core.hpp"

namespace superlie {

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::Grading: return "grading";
    case Violation::Kind::EvenSquare: return "even_square";
    case Violation::Kind::Jacobi: return "jacobi";
  }
  return "unknown";
}

std::string to_string(const Violation& v) {
  return to_string(v.kind) + " " + std::to_string(v.i + 1) + " " + std::to_string(v.j + 1) + " " +
         std::to_string(v.k + 1) + " " + v.detail;
}

}  // namespace superlie
