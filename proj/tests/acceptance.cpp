// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "oracle.hpp"
#include "support.hpp"
#include "superlie/catalog.hpp"
#include "superlie/io.hpp"
#include "superlie/spaces.hpp"
#include "superlie/structure.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace superlie;

namespace {

const Parity E = Parity::Even, O = Parity::Odd;

struct Check {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double s) {
  std::ostringstream o;
  o.precision(3);
  o << s << "s";
  return o.str();
}

const std::vector<std::string> kTheoremAlgebras{"sl(2|1)", "osp(1|2)", "sl(2)"};

void ac1(Check& c) {
  for (const auto& key : kTheoremAlgebras) {
    const auto a = catalog_entry(key).algebra;
    const auto t0 = std::chrono::steady_clock::now();
    const auto even = biderivation_space(a, E);
    const auto odd = biderivation_space(a, O);
    c.expect(even.dim() == 1 && odd.dim() == 0, key + " bider dims");
    if (even.dim() == 1) {
      const auto phi = even.bilinear_element(0);
      const auto cert = inner_certificate(a, phi);
      c.expect(cert.has_value(), key + " inner certificate");
      if (cert) c.expect(phi.table() == (cert->lambda * bracket_map(a)).table(), key + " phi = lambda [,]");
      if (cert) c.note << " " << key << ": lambda=" << cert->lambda.str();
    }
    const double s = seconds_since(t0);
    c.expect(s < 30.0, key + " runtime");
    c.note << " (" << fmt(s) << ")";
  }
}

void ac2(Check& c) {
  for (const auto& key : kTheoremAlgebras) {
    const auto a = catalog_entry(key).algebra;
    const auto even = centroid_space(a, E);
    c.expect(even.dim() == 1 && centroid_space(a, O).dim() == 0, key + " centroid dims");
    if (even.dim() == 1) c.expect(even.linear_element(0) == GradedLinearMap<Rational>::identity(a), key + " basis = Id");
  }
  c.note << " centroid = (1, 0) spanned by Id for sl(2|1), osp(1|2), sl(2)";
}

void ac3(Check& c) {
  for (const auto& key : kTheoremAlgebras) {
    const auto a = catalog_entry(key).algebra;
    const auto com = commuting_map_space(a);
    c.expect(com.dim() == 1, key + " commuting dim");
    if (com.dim() == 1) c.expect(com.linear_element(0) == GradedLinearMap<Rational>::identity(a), key + " basis = Id");
    c.expect(scalar_certificate(a, com).all_scalar, key + " AllScalar");
  }
  c.note << " commuting maps = span{Id}, AllScalar";
}

void ac4(Check& c) {
  const auto a = make_sl(2, 1);
  const auto id = GradedLinearMap<Rational>::identity(a);
  const auto f1 = centroid_factorization(a, bracket_map(a));
  const auto f3 = centroid_factorization(a, Rational(3) * bracket_map(a));
  c.expect(f1 == id, "bracket -> Id");
  c.expect(f3 == Rational(3) * id, "3 bracket -> 3 Id");
  const auto cen = centroid_space(a, E);
  c.expect(cen.contains(f1) && cen.contains(f3), "centroid membership");
  c.note << " f_[,] = Id, f_3[,] = 3 Id, both in the centroid";
}

void ac5(Check& c) {
  const auto a = reduce_mod(make_sl(3, 1), 7);
  const auto t0 = std::chrono::steady_clock::now();
  const auto even = biderivation_space(a, E);
  const auto odd = biderivation_space(a, O);
  const double s = seconds_since(t0);
  c.expect(even.dim() == 1 && odd.dim() == 0, "sl(3|1) over F7 bider dims");
  if (even.dim() == 1) c.expect(inner_certificate(a, even.bilinear_element(0)).has_value(), "inner");
  c.expect(s < 300.0, "runtime < 5 min");
  c.note << " sl(3|1)/F7 bider = (" << even.dim() << ", " << odd.dim() << ") in " << fmt(s);
}

// Values frozen after cross-checking against the brute-force assembly.
constexpr Index kSl11BiderEven = 3;
constexpr Index kHeis2CentroidOdd = 2, kHeis2Commuting = 4;
constexpr Index kAbelian11BiderEven = 2, kAbelian11Commuting = 2;

void ac6(Check& c) {
  using K = oracle::Kind;
  const auto sl11 = make_sl(1, 1);
  const auto b = biderivation_space(sl11, E);
  c.expect(b.dim() >= 2, "sl(1|1) bider even >= 2");
  c.expect(b.dim() == kSl11BiderEven && oracle::space_dim(sl11, K::Biderivation, 0) == kSl11BiderEven,
           "sl(1|1) bider even vs oracle");
  bool any_non_inner = false;
  for (Index i = 0; i < b.dim(); ++i) any_non_inner |= !inner_certificate(sl11, b.bilinear_element(i)).has_value();
  c.expect(any_non_inner, "sl(1|1) inner verdict false");
  const auto report = run_analyze(AnyAlgebra(sl11));
  c.expect(*report.find("bider_inner") == "false", "sl(1|1) report bider_inner");

  const auto h2 = make_heisenberg(2);
  const auto com = commuting_map_space(h2);
  c.expect(centroid_space(h2, O).dim() == kHeis2CentroidOdd &&
               oracle::space_dim(h2, K::Centroid, 1) == kHeis2CentroidOdd,
           "heis(2) centroid odd");
  c.expect(com.dim() == kHeis2Commuting && oracle::space_dim(h2, K::Commuting, 0) == kHeis2Commuting,
           "heis(2) commuting");
  c.expect(!scalar_certificate(h2, com).all_scalar, "heis(2) NotAllScalar");

  const auto ab = make_abelian(1, 1);
  c.expect(biderivation_space(ab, E).dim() == kAbelian11BiderEven &&
               oracle::space_dim(ab, K::Biderivation, 0) == kAbelian11BiderEven,
           "abelian(1,1) bider even");
  c.expect(commuting_map_space(ab).dim() == kAbelian11Commuting &&
               oracle::space_dim(ab, K::Commuting, 0) == kAbelian11Commuting,
           "abelian(1,1) commuting");
  c.note << " sl(1|1) bider_even=" << b.dim() << " non-inner; heis(2) centroid_odd=" << kHeis2CentroidOdd
         << " commuting=" << kHeis2Commuting << "; abelian(1,1) bider_even=" << kAbelian11BiderEven
         << " commuting=" << kAbelian11Commuting << " (oracle-checked)";
}

void ac7(Check& c) {
  std::vector<SuperAlgebra<Rational>> algebras;
  for (const auto& key : catalog_keys()) algebras.push_back(catalog_entry(key).algebra);
  for (const char* k : {"sum(sl(2),heis(1))", "sum(osp(1|2),abelian(0,1))", "sum(sl(1|1),sl(1|1))",
                        "sum(heis(2),gl(1|1))", "sum(sl(2|1),abelian(1,0))"})
    algebras.push_back(catalog_entry(k).algebra);
  std::size_t members = 0, total = 0;
  for (const auto& a : algebras) {
    const auto com = commuting_map_space(a);
    const auto bid = biderivation_space(a, E);
    for (Index b = 0; b < com.dim(); ++b) {
      ++total;
      try {
        if (bid.contains(biderivation_from_commuting(a, com.linear_element(b)))) ++members;
        else c.expect(false, a.name() + " phi_f not a member");
      } catch (const std::exception& e) {
        c.expect(false, a.name() + ": " + e.what());
      }
    }
  }
  c.expect(algebras.size() >= 10, ">= 10 algebras");
  c.note << " " << members << "/" << total << " phi_f members over " << algebras.size() << " algebras";
}

void ac8(Check& c) {
  for (const auto& key : kTheoremAlgebras) {
    const auto a = catalog_entry(key).algebra;
    const auto q = support::space_dims(a);
    c.expect(q == support::space_dims(reduce_mod(a, 5)), key + " Q vs F5");
    c.expect(q == support::space_dims(reduce_mod(a, 7)), key + " Q vs F7");
    c.note << " " << key << "=(";
    for (std::size_t i = 0; i < q.size(); ++i) c.note << (i ? "," : "") << q[i];
    c.note << ")";
  }
}

template <typename S>
bool verified_witness(const SuperAlgebra<S>& a, const Subspace<S>& w) {
  if (w.dim() == 0 || w.dim() >= a.dim()) return false;
  if (!(ideal_closure(a, w) == w)) return false;
  for (int j = 0; j < a.dim(); ++j)
    for (Index r = 0; r < w.dim(); ++r)
      if (!w.contains(bracket(a, basis_vector(a, j), w.basis_vector(r)))) return false;
  return true;
}

void ac9(Check& c) {
  SimplicityOptions opt;
  opt.prime = 5;
  opt.threads = 4;
  for (const char* key : {"sl(2|1)", "osp(1|2)"}) {
    const auto a = catalog_entry(key).algebra;
    const auto t0 = std::chrono::steady_clock::now();
    const auto v = simplicity_check(a, SimplicityPolicy::HeuristicQ, opt);
    c.expect(v.status == SimplicityStatus::Simple && v.method == CertificateMethod::ReductionFromQ && v.prime == 5,
             std::string(key) + " simple mod 5");
    c.expect(v.lines_checked == *line_count(5, a.dim()), std::string(key) + " all lines");
    c.note << " " << key << ": simple, " << v.lines_checked << " lines (" << fmt(seconds_since(t0)) << ")";
  }
  for (const char* key : {"sl(1|1)", "heis(2)", "sum(sl(2),sl(2))"}) {
    const auto a = catalog_entry(key).algebra;
    const auto v = simplicity_check(a, SimplicityPolicy::HeuristicQ, opt);
    const bool ok = v.status == SimplicityStatus::NotSimple && v.witness && verified_witness(a, *v.witness);
    c.expect(ok, std::string(key) + " NotSimple with verified witness");
    c.note << " " << key << ": witness dim " << (v.witness ? v.witness->dim() : 0);
  }
}

SuperAlgebra<Rational> with_constant(const SuperAlgebra<Rational>& a, int i, int j, int k, const Rational& v) {
  std::vector<StructureConstant<Rational>> cs;
  for (const auto& [key, value] : a.table())
    if (!(key[0] == i && key[1] == j && key[2] == k)) cs.push_back({key[0], key[1], key[2], value});
  if (!v.is_zero()) cs.push_back({i, j, k, v});
  return SuperAlgebra<Rational>(a.name() + "*", a.field(), a.parities(), cs);
}

// Cyclic Jacobi sum at one ordered triple, from the oracle bracket.
bool cyclic_fails_at(const SuperAlgebra<Rational>& a, int i, int j, int k) {
  const int n = a.dim();
  const auto& p = a.parities();
  oracle::Bracket<Rational> br{oracle::bracket_tensor(a), n};
  using oracle::minus_one_pow, oracle::par, oracle::scale, oracle::unit;
  const auto ei = unit<Rational>(n, i), ej = unit<Rational>(n, j), ek = unit<Rational>(n, k);
  const auto t1 = scale(minus_one_pow(par(p, i) * par(p, k)), br(ei, br(ej, ek)));
  const auto t2 = scale(minus_one_pow(par(p, j) * par(p, i)), br(ej, br(ek, ei)));
  const auto t3 = scale(minus_one_pow(par(p, k) * par(p, j)), br(ek, br(ei, ej)));
  for (int m = 0; m < n; ++m)
    if (!(t1[m] + t2[m] + t3[m]).is_zero()) return true;
  return false;
}

void ac10(Check& c) {
  const auto base = make_sl(2, 1);
  const int n = base.dim();
  std::mt19937_64 rng(20260301);
  std::uniform_int_distribution<int> idx(0, n - 1), val(-4, 4);
  std::vector<std::array<int, 3>> existing;
  for (const auto& [key, value] : base.table()) existing.push_back(key);
  std::uniform_int_distribution<std::size_t> pick(0, existing.size() - 1);

  int rejected = 0, valid = 0, made = 0;
  while (made < 20) {
    std::array<int, 3> key;
    if (made % 2 == 0) {
      key = existing[pick(rng)];  // change or delete an existing constant
    } else {
      key = {idx(rng), idx(rng), idx(rng)};  // introduce a new one
      if (key[0] > key[1]) std::swap(key[0], key[1]);
      if (base.parity(key[2]) != base.parity(key[0]) + base.parity(key[1])) continue;
      if (key[0] == key[1] && base.parity(key[0]) == E) continue;
    }
    const Rational old = base.structure_constant(key[0], key[1], key[2]);
    const Rational v(val(rng));
    if (v == old) continue;
    const auto m = with_constant(base, key[0], key[1], key[2], v);
    ++made;
    const auto report = validate(m);
    const bool oracle_ok = oracle::jacobi_holds(m);
    if (!report.ok()) {
      ++rejected;
      const auto& w = report.violations.front();
      c.expect(!oracle_ok, "oracle disagrees with a rejection");
      c.expect(w.i >= 0 && w.j >= 0 && w.k >= 0 && cyclic_fails_at(m, w.i, w.j, w.k), "witness triple reproduces");
    } else {
      ++valid;
      c.expect(oracle_ok, "accepted mutation fails the oracle");
    }
  }
  c.note << " 20 mutations: " << rejected << " rejected with reproducing witness, " << valid
         << " oracle-confirmed valid";
}

template <typename S>
void linear_algebra_suite(Check& c, const FieldDescriptor& field, const std::function<S(long)>& make, int range,
                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Index> size(1, 14);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int t = 0; t < 200; ++t) {
    const Index rows = size(rng), cols = size(rng);
    auto m = oracle::random_matrix<S>(rng, rows, cols, range, make, density(rng));
    if (t % 4 == 0 && cols > 2) m.col(cols - 1) = m.col(0) + m.col(1);  // force dependence
    const auto r = rref(m);
    const auto ns = nullspace(field, m);
    c.expect(r.rank + ns.dim() == cols, "rank-nullity");
    c.expect(rref(r.reduced).reduced == r.reduced, "idempotence");
    c.expect(r.rank == oracle::naive_rank(oracle::from_eigen(m)), "rank vs oracle");
    for (Index i = 0; i < ns.dim(); ++i) c.expect(oracle::all_zero(m * ns.basis_vector(i)), "nullspace membership");
  }
}

void ac11(Check& c) {
  linear_algebra_suite<Rational>(c, FieldDescriptor::rationals(), [](long v) { return Rational(v); }, 20, 11);
  linear_algebra_suite<Zp>(c, FieldDescriptor::prime_field(5), [](long v) { return Zp(v, 5); }, 4, 12);
  c.note << " 200 matrices over Q and 200 over F5";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria{
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4},  {"AC5", ac5},  {"AC6", ac6},
      {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10}, {"AC11", ac11}};
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Check c;
    try {
      run(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.note << " [exception: " << e.what() << "]";
    }
    std::cout << name << " " << (c.ok ? "PASS" : "FAIL") << c.note.str() << std::endl;
    failed += !c.ok;
  }
  return failed == 0 ? 0 : 1;
}
