#include "superlie/io.hpp"

#include "superlie/spaces.hpp"

#include <atomic>
#include <charconv>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

namespace superlie {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

long parse_integer(const std::string& s, int line, const char* what) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(line, std::string("expected an integer for ") + what + ", got '" + s + "'");
  return v;
}

template <typename Scalar>
SuperAlgebra<Scalar> build(const std::string& name, const FieldDescriptor& field, const std::vector<Parity>& parity,
                           const std::vector<std::pair<int, std::array<long, 3>>>& index_lines,
                           const std::vector<Rational>& values) {
  std::vector<StructureConstant<Scalar>> cs;
  const int n = static_cast<int>(parity.size());
  std::set<std::array<long, 3>> seen;
  for (std::size_t t = 0; t < index_lines.size(); ++t) {
    const auto& [line, idx] = index_lines[t];
    auto fail = [&, line = line](const std::string& what) {
      throw ConstraintError("line " + std::to_string(line) + ": " + what + " at (" + std::to_string(idx[0]) + "," +
                            std::to_string(idx[1]) + "," + std::to_string(idx[2]) + ")");
    };
    for (long v : idx)
      if (v < 1 || v > n) fail("index out of range");
    if (idx[0] > idx[1]) fail("constants must be given with i <= j");
    if (!seen.insert(idx).second) fail("duplicate constant");
    const int i = static_cast<int>(idx[0] - 1), j = static_cast<int>(idx[1] - 1), k = static_cast<int>(idx[2] - 1);
    if (parity[k] != parity[i] + parity[j]) fail("grading violated");
    if (i == j && parity[i] == Parity::Even) fail("even basis vector with nonzero square");
    Scalar v;
    try {
      v = ScalarTraits<Scalar>::from_rational(field, values[t]);
    } catch (const FieldError& e) {
      fail(e.what());
    }
    if (v.is_zero()) fail("zero structure constant");
    cs.push_back({i, j, k, v});
  }
  return SuperAlgebra<Scalar>(name, field, parity, cs);
}

}  // namespace

AnyAlgebra parse_algebra(std::string_view text) {
  std::optional<std::string> name;
  std::optional<FieldDescriptor> field;
  std::optional<int> dim;
  std::optional<std::vector<Parity>> parity;
  std::vector<std::pair<int, std::array<long, 3>>> index_lines;
  std::vector<Rational> values;
  bool header = false;
  int line_no = 0;

  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto tok = tokenize(raw);
    if (tok.empty()) continue;
    if (!header) {
      if (tok.size() != 2 || tok[0] != "superalgebra" || tok[1] != "v1")
        throw ParseError(line_no, "expected 'superalgebra v1' header");
      header = true;
      continue;
    }
    const std::string& key = tok[0];
    if (key == "name") {
      if (name) throw ParseError(line_no, "duplicate 'name'");
      if (tok.size() != 2) throw ParseError(line_no, "'name' takes one token");
      name = tok[1];
    } else if (key == "field") {
      if (field) throw ParseError(line_no, "duplicate 'field'");
      if (tok.size() == 2 && tok[1] == "Q") {
        field = FieldDescriptor::rationals();
      } else if (tok.size() == 3 && tok[1] == "F") {
        const long p = parse_integer(tok[2], line_no, "the field characteristic");
        try {
          if (p < 0) throw FieldError("field modulus must be positive");
          field = FieldDescriptor::prime_field(static_cast<std::uint64_t>(p));
        } catch (const FieldError& e) {
          throw ConstraintError("line " + std::to_string(line_no) + ": " + e.what());
        }
      } else {
        throw ParseError(line_no, "expected 'field Q' or 'field F <p>'");
      }
    } else if (key == "dim") {
      if (dim) throw ParseError(line_no, "duplicate 'dim'");
      if (tok.size() != 2) throw ParseError(line_no, "'dim' takes one integer");
      const long n = parse_integer(tok[1], line_no, "dim");
      if (n < 1 || n > 4096) throw ConstraintError("line " + std::to_string(line_no) + ": dim must be in [1, 4096]");
      dim = static_cast<int>(n);
    } else if (key == "parity") {
      if (parity) throw ParseError(line_no, "duplicate 'parity'");
      if (!dim) throw ParseError(line_no, "'parity' before 'dim'");
      if (static_cast<int>(tok.size()) - 1 != *dim) throw ParseError(line_no, "'parity' needs exactly dim entries");
      parity.emplace();
      for (std::size_t t = 1; t < tok.size(); ++t) {
        if (tok[t] != "0" && tok[t] != "1") throw ParseError(line_no, "parity entries must be 0 or 1");
        parity->push_back(tok[t] == "1" ? Parity::Odd : Parity::Even);
      }
    } else if (key == "c") {
      if (!name || !field || !dim || !parity) throw ParseError(line_no, "'c' line before the header is complete");
      if (tok.size() != 5) throw ParseError(line_no, "'c' takes i j k value");
      std::array<long, 3> idx{};
      for (int t = 0; t < 3; ++t) idx[t] = parse_integer(tok[t + 1], line_no, "an index");
      try {
        values.push_back(Rational::parse(tok[4]));
      } catch (const FieldError& e) {
        throw ParseError(line_no, e.what());
      }
      index_lines.emplace_back(line_no, idx);
    } else {
      throw ParseError(line_no, "unknown keyword '" + key + "'");
    }
  }
  if (!header) throw ParseError(line_no + 1, "empty input");
  if (!name || !field || !dim || !parity) throw ParseError(line_no + 1, "incomplete header (need name, field, dim, parity)");

  if (field->is_rationals()) return build<Rational>(*name, *field, *parity, index_lines, values);
  return build<Zp>(*name, *field, *parity, index_lines, values);
}

std::string serialize(const AnyAlgebra& a) {
  return std::visit([](const auto& alg) { return serialize(alg); }, a);
}

AnyAlgebra change_field(const AnyAlgebra& a, const FieldDescriptor& target) {
  if (const auto* q = std::get_if<SuperAlgebra<Rational>>(&a)) {
    if (target.is_rationals()) return *q;
    return reduce_mod(*q, target.characteristic());
  }
  const auto& fp = std::get<SuperAlgebra<Zp>>(a);
  if (fp.field() == target) return fp;
  throw FieldError("cannot move an algebra over " + fp.field().to_string() + " to " + target.to_string());
}

const std::string* AnalysisReport::find(std::string_view key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return &v;
  return nullptr;
}

std::string AnalysisReport::str() const {
  std::string out;
  for (const auto& [k, v] : entries) out += k + " " + v + "\n";
  return out;
}

namespace {

void run_tasks(std::vector<std::function<void()>>& tasks, unsigned threads) {
  if (threads <= 1) {
    for (auto& t : tasks) t();
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(tasks.size());
  auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) {
      try {
        tasks[t]();
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < std::min<std::size_t>(threads, tasks.size()); ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

template <typename Scalar>
AnalysisReport analyze(const SuperAlgebra<Scalar>& a, const AnalysisOptions& opt) {
  AnalysisReport r;
  r.add("name", a.name());
  r.add("field", a.field().to_string());
  r.add("dim", std::to_string(a.dim()));
  r.add("even_dim", std::to_string(a.even_dim()));
  r.add("odd_dim", std::to_string(a.odd_dim()));
  require_valid(a);
  r.add("valid", "true");

  std::optional<Subspace<Scalar>> z, d;
  std::optional<SimplicityVerdict<Scalar>> simple;
  std::optional<MapSpace<Scalar>> cen[2], der[2], bid[2], com;
  std::vector<std::function<void()>> tasks;
  tasks.push_back([&] { z = center(a); });
  tasks.push_back([&] { d = derived_subalgebra(a); });
  tasks.push_back([&] {
    simple = simplicity_check(a, std::is_same_v<Scalar, Rational> ? SimplicityPolicy::HeuristicQ : SimplicityPolicy::ExhaustiveFp,
                              opt.simplicity);
  });
  for (int deg = 0; deg < 2; ++deg) {
    tasks.push_back([&, deg] { cen[deg] = centroid_space(a, parity_of(deg)); });
    tasks.push_back([&, deg] { der[deg] = superderivation_space(a, parity_of(deg)); });
    tasks.push_back([&, deg] { bid[deg] = biderivation_space(a, parity_of(deg)); });
  }
  tasks.push_back([&] { com = commuting_map_space(a); });
  // Heaviest first so a pool finishes evenly.
  std::swap(tasks[0], tasks[5]);
  std::swap(tasks[1], tasks[8]);
  run_tasks(tasks, opt.threads);

  r.add("center_dim", std::to_string(z->dim()));
  r.add("derived_dim", std::to_string(d->dim()));
  r.add("simplicity", to_string(simple->status));
  r.add("simplicity_method", to_string(simple->method));
  r.add("simplicity_prime", simple->prime ? std::to_string(simple->prime) : "none");
  r.add("simplicity_reason", simple->reason);
  r.add("witness_dim", simple->witness ? std::to_string(simple->witness->dim()) : "none");
  r.add("witness_graded", simple->witness ? yes_no(simple->witness_graded) : "none");
  r.add("centroid_even_dim", std::to_string(cen[0]->dim()));
  r.add("centroid_odd_dim", std::to_string(cen[1]->dim()));
  r.add("sderiv_even_dim", std::to_string(der[0]->dim()));
  r.add("sderiv_odd_dim", std::to_string(der[1]->dim()));
  r.add("bider_even_dim", std::to_string(bid[0]->dim()));
  r.add("bider_odd_dim", std::to_string(bid[1]->dim()));

  std::optional<InnerCertificate<Scalar>> inner;
  if (bid[0]->dim() == 1 && bid[1]->dim() == 0) inner = inner_certificate(a, bid[0]->bilinear_element(0));
  r.add("bider_inner", yes_no(inner.has_value()));
  r.add("bider_lambda", inner ? inner->lambda.str() : "none");

  const auto verdict = scalar_certificate(a, *com);
  r.add("commuting_dim", std::to_string(com->dim()));
  r.add("commuting_scalar", yes_no(verdict.all_scalar));
  return r;
}

}  // namespace

AnalysisReport run_analyze(const AnyAlgebra& a, const AnalysisOptions& opt) {
  return std::visit([&](const auto& alg) { return analyze(alg, opt); }, a);
}

}  // namespace superlie
