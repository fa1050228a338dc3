// superlie: command-line front end.
//
//   superlie validate <file>
//   superlie analyze <file|catalog:KEY> [--field Q|F<p>] [--prime p] [--budget n] [--threads n]
//   superlie spaces <file|catalog:KEY> --which centroid|sderiv|bider|commuting --degree 0|1 [--basis]
//   superlie catalog list
//   superlie catalog emit <KEY>
//
// Exit codes: 0 success, 1 validation failure, 2 parse/usage error,
// 3 budget exceeded.

#include "superlie/catalog.hpp"
#include "superlie/io.hpp"
#include "superlie/spaces.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace superlie;

namespace {

constexpr int kOk = 0, kInvalid = 1, kParse = 2, kBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

AnyAlgebra load(const std::string& source) {
  constexpr std::string_view prefix = "catalog:";
  if (source.rfind(prefix, 0) == 0) return catalog_entry(source.substr(prefix.size())).algebra;
  std::ifstream in(source);
  if (!in) throw UsageError("cannot open '" + source + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str());
}

FieldDescriptor parse_field_flag(const std::string& s) {
  if (s == "Q") return FieldDescriptor::rationals();
  std::string digits = s;
  if (!digits.empty() && digits[0] == 'F') digits.erase(0, 1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 9)
    throw UsageError("--field expects Q or F<p>, got '" + s + "'");
  return FieldDescriptor::prime_field(std::stoull(digits));
}

int print_violations(const ValidationReport& report) {
  if (report.ok()) {
    std::cout << "valid true\n";
    return kOk;
  }
  std::cout << "valid false\n";
  for (const auto& v : report.violations) std::cout << "violation " << to_string(v) << "\n";
  return kInvalid;
}

int cmd_validate(const std::string& source) {
  const auto alg = load(source);
  return std::visit([](const auto& a) { return print_violations(validate(a)); }, alg);
}

int cmd_analyze(const std::string& source, const std::string& field, std::optional<std::uint32_t> prime,
                std::uint64_t budget, unsigned threads) {
  auto alg = load(source);
  if (!field.empty()) alg = change_field(alg, parse_field_flag(field));
  const int valid = std::visit([](const auto& a) { return validate(a).ok() ? kOk : kInvalid; }, alg);
  if (valid != kOk) return std::visit([](const auto& a) { return print_violations(validate(a)); }, alg);
  AnalysisOptions opt;
  opt.simplicity.budget = budget;
  opt.simplicity.prime = prime;
  opt.simplicity.threads = threads;
  opt.threads = threads;
  const auto report = run_analyze(alg, opt);
  std::cout << report.str();
  return budget_exceeded(report) ? kBudget : kOk;
}

template <typename Scalar>
int print_space(const SuperAlgebra<Scalar>& a, const std::string& which, int degree, bool basis) {
  const Parity d = parity_of(degree);
  std::optional<MapSpace<Scalar>> space;
  if (which == "centroid") space = centroid_space(a, d);
  else if (which == "sderiv") space = superderivation_space(a, d);
  else if (which == "bider") space = biderivation_space(a, d);
  else if (which == "commuting") {
    if (degree != 0) throw UsageError("commuting maps are even; use --degree 0");
    space = commuting_map_space(a);
  } else {
    throw UsageError("--which must be centroid, sderiv, bider or commuting");
  }
  std::cout << "name " << a.name() << "\n"
            << "field " << a.field().to_string() << "\n"
            << "which " << which << "\n"
            << "degree " << degree << "\n"
            << "dimension " << space->dim() << "\n";
  if (!basis) return kOk;
  const auto& lay = space->layout();
  for (Index b = 0; b < space->dim(); ++b) {
    std::cout << "basis " << b + 1 << "\n";
    const auto v = space->space().basis_vector(b);
    for (Index c = 0; c < lay.size(); ++c) {
      if (v(c).is_zero()) continue;
      const auto& co = lay.coords[c];
      std::cout << "entry";
      for (int t = 0; t < (lay.bilinear ? 3 : 2); ++t) std::cout << " " << co[t] + 1;
      std::cout << " " << v(c).str() << "\n";
    }
  }
  return kOk;
}

int cmd_spaces(const std::string& source, const std::string& field, const std::string& which, int degree, bool basis) {
  auto alg = load(source);
  if (!field.empty()) alg = change_field(alg, parse_field_flag(field));
  const int valid = std::visit([](const auto& a) { return validate(a).ok() ? kOk : kInvalid; }, alg);
  if (valid != kOk) return std::visit([](const auto& a) { return print_violations(validate(a)); }, alg);
  return std::visit([&](const auto& a) { return print_space(a, which, degree, basis); }, alg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact structure computations for finite-dimensional Lie superalgebras"};
  app.require_subcommand(1);

  std::string source, field, which, key;
  std::optional<std::uint32_t> prime;
  std::uint64_t budget = SimplicityOptions{}.budget;
  unsigned threads = 1;
  int degree = 0;
  bool basis = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check the Lie superalgebra axioms");
  validate_cmd->add_option("file", source, "Algebra file or catalog:KEY")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis report");
  analyze_cmd->add_option("source", source, "Algebra file or catalog:KEY")->required();
  analyze_cmd->add_option("--field", field, "Compute over Q or F<p>");
  analyze_cmd->add_option("--prime", prime, "Prime for the simplicity reduction");
  analyze_cmd->add_option("--budget", budget, "Maximum number of lines to enumerate");
  analyze_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));

  auto* spaces_cmd = app.add_subcommand("spaces", "Dimension (and basis) of one solution space");
  spaces_cmd->add_option("source", source, "Algebra file or catalog:KEY")->required();
  spaces_cmd->add_option("--which", which, "centroid|sderiv|bider|commuting")->required();
  spaces_cmd->add_option("--degree", degree, "0 or 1")->check(CLI::Range(0, 1));
  spaces_cmd->add_option("--field", field, "Compute over Q or F<p>");
  spaces_cmd->add_flag("--basis", basis, "Print the canonical basis");

  auto* catalog_cmd = app.add_subcommand("catalog", "Catalog algebras");
  catalog_cmd->require_subcommand(1);
  catalog_cmd->add_subcommand("list", "List catalog keys");
  auto* emit_cmd = catalog_cmd->add_subcommand("emit", "Emit an algebra file");
  emit_cmd->add_option("key", key, "Catalog key")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*validate_cmd) return cmd_validate(source);
    if (*analyze_cmd) return cmd_analyze(source, field, prime, budget, threads);
    if (*spaces_cmd) return cmd_spaces(source, field, which, degree, basis);
    if (catalog_cmd->got_subcommand("list")) {
      for (const auto& k : catalog_keys()) std::cout << k << " " << to_string(catalog_entry(k).known_simple) << "\n";
      return kOk;
    }
    if (*emit_cmd) {
      std::cout << serialize(catalog_entry(key).algebra);
      return kOk;
    }
  } catch (const InvalidAlgebra& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    // Parse, constraint, catalog, field and usage errors.
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  }
  return kParse;
}
