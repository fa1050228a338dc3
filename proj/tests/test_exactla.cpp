#include "oracle.hpp"
#include "superlie/exactla.hpp"

#include <doctest.h>

using namespace superlie;

namespace {

const auto Q = FieldDescriptor::rationals();
const auto F5 = FieldDescriptor::prime_field(5);

Matrix<Rational> qmat(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix<Rational> m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index r = 0;
  for (const auto& row : rows) {
    Index c = 0;
    for (long v : row) m(r, c++) = Rational(v);
    ++r;
  }
  return m;
}

Vector<Rational> qvec(std::initializer_list<long> xs) {
  Vector<Rational> v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs) v(i++) = Rational(x);
  return v;
}

}  // namespace

TEST_CASE("field descriptor rejects 2 and composites") {
  CHECK_THROWS_AS(FieldDescriptor::prime_field(2), FieldError);
  CHECK_THROWS_AS(FieldDescriptor::prime_field(9), FieldError);
  CHECK_THROWS_AS(FieldDescriptor::prime_field(1), FieldError);
  CHECK(FieldDescriptor::prime_field(7).characteristic() == 7);
  CHECK(F5.to_string() == "F 5");
  CHECK(Q.to_string() == "Q");
}

TEST_CASE("rational canonical form") {
  CHECK(Rational::parse("6/4").str() == "3/2");
  CHECK(Rational::parse("-6/-4").str() == "3/2");
  CHECK(Rational::parse("4/-2").str() == "-2");
  CHECK(Rational::parse("0/5").is_zero());
  CHECK_THROWS_AS(Rational::parse("1/0"), FieldError);
  CHECK_THROWS_AS(Rational::parse("x"), FieldError);
}

TEST_CASE("prime field residues and reduction of rationals") {
  const Zp a(-1, 5);
  CHECK(a.residue() == 4);
  CHECK((a * a).is_one());
  CHECK((Zp(3, 5) * Zp(3, 5).inverse()).is_one());
  CHECK(ScalarTraits<Zp>::from_rational(F5, Rational::parse("1/2")) == Zp(3, 5));
  CHECK_THROWS_AS(ScalarTraits<Zp>::from_rational(F5, Rational::parse("1/5")), FieldError);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-50, 50);
  for (int t = 0; t < 300; ++t) {
    const Rational a = Rational(d(rng)) / Rational(3), b(d(rng)), c = Rational(d(rng)) / Rational(7);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + (-a)).is_zero());
    if (!b.is_zero()) CHECK((b * (Rational(1) / b)).is_one());

    const Zp x(d(rng), 5), y(d(rng), 5), z(d(rng), 5);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x + (-x)).is_zero());
    if (!y.is_zero()) CHECK((y * y.inverse()).is_one());
  }
}

TEST_CASE("rref examples") {
  const auto id = qmat({{1, 0}, {0, 1}});
  auto r = rref(id);
  CHECK(r.rank == 2);
  CHECK(r.reduced == id);

  r = rref(qmat({{2, 4}, {1, 2}}));
  CHECK(r.rank == 1);
  CHECK(r.reduced == qmat({{1, 2}, {0, 0}}));
  CHECK(r.pivots == std::vector<Index>{0});
}

TEST_CASE("rref over F5 agrees with a second elimination (40x25)") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 10; ++t) {
    auto m = oracle::random_matrix<Zp>(rng, 40, 25, 4, [](long v) { return Zp(v, 5); }, t % 2 ? 0.2 : 0.6);
    // Make some rank deficiency: copy combinations of earlier columns.
    for (Index c = 20; c < 25; ++c) m.col(c) = m.col(c - 20) + Zp(2, 5) * m.col(c - 19);
    CHECK(rank(m) == oracle::naive_rank(oracle::from_eigen(m)));
  }
}

TEST_CASE("nullspace examples") {
  const auto z = nullspace(Q, Matrix<Rational>(Matrix<Rational>::Zero(3, 3)));
  CHECK(z.dim() == 3);

  const auto n = nullspace(Q, qmat({{1, 1}}));
  REQUIRE(n.dim() == 1);
  CHECK(n.basis_vector(0) == qvec({1, -1}));  // canonical: pivot entry 1
  CHECK(n.contains(qvec({-1, 1})));

  const auto m = qmat({{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}});
  const auto ns = nullspace(Q, m);
  CHECK(ns.dim() == 2);
  for (Index i = 0; i < ns.dim(); ++i) CHECK(oracle::all_zero(m * ns.basis_vector(i)));
}

TEST_CASE("membership and subspace sum") {
  const auto x = Subspace<Rational>::span(Q, 2, {qvec({1, 0})});
  const auto y = Subspace<Rational>::span(Q, 2, {qvec({0, 1})});
  const Subspace<Rational> zero(Q, 2);
  CHECK(membership(x, qvec({1, 0})));
  CHECK(membership(x, qvec({0, 0})));
  CHECK_FALSE(membership(x, qvec({0, 1})));
  CHECK(subspace_sum(x, zero) == x);
  CHECK(subspace_sum(x, y).dim() == 2);
  CHECK(subspace_sum(x, y) == Subspace<Rational>::full(Q, 2));
  CHECK(subspace_sum(x, x) == x);
  CHECK_THROWS_AS(subspace_sum(x, Subspace<Rational>(Q, 3)), DimensionMismatch);
}

TEST_CASE("canonical representation: different spanning sets give equal subspaces") {
  const auto a = Subspace<Rational>::span(Q, 3, {qvec({1, 2, 3}), qvec({0, 1, 1})});
  const auto b = Subspace<Rational>::span(Q, 3, {qvec({2, 5, 7}), qvec({1, 1, 2}), qvec({3, 6, 9})});
  CHECK(a == b);
  CHECK(a.basis() == b.basis());
}

TEST_CASE("echelon accumulator matches dense nullspace") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 40; ++t) {
    const Index rows = 3 + t % 9, cols = 4 + t % 7;
    auto m = oracle::random_matrix<Rational>(rng, rows, cols, 5, [](long v) { return Rational(v); }, 0.4);
    EchelonAccumulator<Rational> acc(Q, cols);
    for (Index r = 0; r < rows; ++r) {
      std::vector<std::pair<Index, Rational>> terms;
      for (Index c = 0; c < cols; ++c)
        if (!m(r, c).is_zero()) terms.emplace_back(c, m(r, c));
      acc.add_row(SparseRow<Rational>::from_terms(std::move(terms)));
    }
    CHECK(acc.rank() == rank(m));
    CHECK(acc.nullspace() == nullspace(Q, m));
  }
}

TEST_CASE("property: rank-nullity, idempotence, nullspace membership") {
  std::mt19937_64 rng(1234);
  for (int t = 0; t < 60; ++t) {
    const Index rows = 1 + t % 8, cols = 1 + (t * 5) % 9;
    auto q = oracle::random_matrix<Rational>(rng, rows, cols, 9, [](long v) { return Rational(v); });
    const auto r = rref(q);
    CHECK(rref(r.reduced).reduced == r.reduced);
    const auto ns = nullspace(Q, q);
    CHECK(r.rank + ns.dim() == cols);
    for (Index i = 0; i < ns.dim(); ++i) CHECK(oracle::all_zero(q * ns.basis_vector(i)));
    CHECK(r.rank == oracle::naive_rank(oracle::from_eigen(q)));

    auto f = oracle::random_matrix<Zp>(rng, rows, cols, 4, [](long v) { return Zp(v, 5); });
    const auto rf = rref(f);
    CHECK(rref(rf.reduced).reduced == rf.reduced);
    CHECK(rf.rank + nullspace(F5, f).dim() == cols);
  }
}
