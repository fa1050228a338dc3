#include "oracle.hpp"
#include "superlie/catalog.hpp"
#include "superlie/structure.hpp"

#include <doctest.h>

using namespace superlie;

namespace {

const auto Q = FieldDescriptor::rationals();

template <typename S>
bool is_ideal(const SuperAlgebra<S>& a, const Subspace<S>& s) {
  for (int j = 0; j < a.dim(); ++j)
    for (Index r = 0; r < s.dim(); ++r)
      if (!membership(s, bracket(a, basis_vector(a, j), s.basis_vector(r)))) return false;
  return true;
}

// Brute-force center: x with [e_j, x] = 0 for all j, via the oracle's own
// bracket tensor and elimination.
Index center_dim_oracle(const SuperAlgebra<Rational>& a) {
  const int n = a.dim();
  const auto t = oracle::bracket_tensor(a);
  oracle::Dense<Rational> m;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      std::vector<Rational> row(n);
      for (int x = 0; x < n; ++x) row[x] = t[j][x][k];
      m.push_back(row);
    }
  return n - oracle::naive_rank(m);
}

}  // namespace

TEST_CASE("center examples") {
  CHECK(center(make_abelian(2, 3)).dim() == 5);
  CHECK(center(make_sl(2, 1)).dim() == 0);
  CHECK(center_dim_oracle(make_sl(2, 1)) == 0);
  const auto h = make_heisenberg(3);
  const auto z = center(h);
  CHECK(z == Subspace<Rational>::span(Q, 4, {basis_vector(h, 0)}));
  for (const auto& key : catalog_keys()) {
    const auto a = catalog_entry(key).algebra;
    CHECK(center(a).dim() == center_dim_oracle(a));
  }
}

TEST_CASE("derived subalgebra examples") {
  CHECK(derived_subalgebra(make_abelian(1, 2)).dim() == 0);
  CHECK(derived_subalgebra(make_sl(2, 1)).is_full());
  const auto h = make_heisenberg(2);
  CHECK(derived_subalgebra(h) == Subspace<Rational>::span(Q, 3, {basis_vector(h, 0)}));
}

TEST_CASE("ideal closure examples") {
  const auto h = make_heisenberg(2);
  CHECK(ideal_closure(h, Subspace<Rational>(Q, 3)).dim() == 0);
  const auto z = Subspace<Rational>::span(Q, 3, {basis_vector(h, 0)});
  CHECK(ideal_closure(h, z) == z);
  const auto sl2 = make_sl(2, 0);
  CHECK(ideal_closure(sl2, Subspace<Rational>::span(Q, 3, {basis_vector(sl2, 1)})).dim() == 3);
}

TEST_CASE("property: ideal closure is monotone, idempotent and bracket-closed") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> d(-2, 2);
  for (const auto& key : catalog_keys()) {
    const auto a = catalog_entry(key).algebra;
    const int n = a.dim();
    CAPTURE(key);
    for (int t = 0; t < 6; ++t) {
      std::vector<Vector<Rational>> gens;
      for (int g = 0; g <= t % 2; ++g) {
        Vector<Rational> v(n);
        for (int i = 0; i < n; ++i) v(i) = Rational(d(rng));
        gens.push_back(v);
      }
      const auto s = Subspace<Rational>::span(Q, n, gens);
      const auto i1 = ideal_closure(a, s);
      CHECK(subspace_sum(s, i1) == i1);
      CHECK(ideal_closure(a, i1) == i1);
      CHECK(is_ideal(a, i1));
    }
    const auto z = center(a);
    CHECK(ideal_closure(a, z) == z);
  }
}

TEST_CASE("simplicity: screens and exhaustive enumeration") {
  const auto sl11 = make_sl(1, 1);
  auto v = simplicity_check(sl11, SimplicityPolicy::HeuristicQ);
  CHECK(v.status == SimplicityStatus::NotSimple);
  REQUIRE(v.witness);
  CHECK(*v.witness == Subspace<Rational>::span(Q, 3, {basis_vector(sl11, 0)}));
  CHECK(v.witness_graded);

  const auto a10 = simplicity_check(make_abelian(1, 0), SimplicityPolicy::HeuristicQ);
  CHECK(a10.status == SimplicityStatus::NotSimple);
  CHECK(a10.reason == "dimension_one");

  CHECK_THROWS_AS(simplicity_check(make_sl(2, 0), SimplicityPolicy::ExhaustiveFp), PolicyMismatch);
  CHECK_THROWS_AS(simplicity_check(reduce_mod(make_sl(2, 0), 5), SimplicityPolicy::HeuristicQ), PolicyMismatch);

  const auto sl2 = simplicity_check(reduce_mod(make_sl(2, 0), 5), SimplicityPolicy::ExhaustiveFp);
  CHECK(sl2.status == SimplicityStatus::Simple);
  CHECK(sl2.lines_checked == 31);  // (5^3 - 1) / 4

  const auto sl2q = simplicity_check(make_sl(2, 0), SimplicityPolicy::HeuristicQ);
  CHECK(sl2q.status == SimplicityStatus::Simple);
  CHECK(sl2q.method == CertificateMethod::ReductionFromQ);
  CHECK(sl2q.prime == 3);
}

TEST_CASE("simplicity: reduction soundness spot test on sl(1|1)") {
  const auto sl11 = make_sl(1, 1);
  const auto q = simplicity_check(sl11, SimplicityPolicy::HeuristicQ);
  const auto p = simplicity_check(reduce_mod(sl11, 5), SimplicityPolicy::ExhaustiveFp);
  REQUIRE(q.witness);
  REQUIRE(p.witness);
  CHECK(p.status == SimplicityStatus::NotSimple);
  CHECK(q.witness->dim() == p.witness->dim());
}

TEST_CASE("simplicity: enumeration finds non-graded and graded ideals") {
  // sl(2) + sl(2) passes both screens; the witness comes from line closure.
  const auto s = reduce_mod(direct_sum(make_sl(2, 0), make_sl(2, 0)), 3);
  const auto v = simplicity_check(s, SimplicityPolicy::ExhaustiveFp);
  CHECK(v.status == SimplicityStatus::NotSimple);
  CHECK(v.reason == "line_closure");
  REQUIRE(v.witness);
  CHECK(v.witness->dim() == 3);
  CHECK(is_ideal(s, *v.witness));
}

TEST_CASE("simplicity: budget") {
  SimplicityOptions opt;
  opt.budget = 0;
  const auto v = simplicity_check(reduce_mod(make_sl(2, 0), 5), SimplicityPolicy::ExhaustiveFp, opt);
  CHECK(v.status == SimplicityStatus::Unknown);
  CHECK(v.reason == "budget_exceeded");
  CHECK(line_count(5, 8) == 97656);
}

TEST_CASE("simplicity: nilpotent kernel route agrees with full enumeration") {
  for (const char* key : {"sl(2)", "sl(2|1)", "osp(1|2)", "sum(sl(2),sl(2))"}) {
    CAPTURE(key);
    const auto a = reduce_mod(catalog_entry(key).algebra, 3);
    const auto full = simplicity_check(a, SimplicityPolicy::ExhaustiveFp);
    SimplicityOptions small;
    small.budget = *line_count(3, a.dim()) - 1;
    const auto kern = simplicity_check(a, SimplicityPolicy::ExhaustiveFp, small);
    CHECK(full.status == kern.status);
    if (kern.status == SimplicityStatus::Simple) {
      CHECK(full.reason == "enumerated");
      CHECK(kern.reason == "enumerated_nilpotent_kernel");
      CHECK(kern.lines_checked < full.lines_checked);
    }
    if (kern.witness) CHECK(is_ideal(a, *kern.witness));
  }
  const auto sl31 = simplicity_check(make_sl(3, 1), SimplicityPolicy::HeuristicQ);
  CHECK(sl31.status == SimplicityStatus::Simple);
  CHECK(sl31.reason == "enumerated_nilpotent_kernel");
}

TEST_CASE("simplicity: thread count does not change the verdict") {
  const auto s = reduce_mod(direct_sum(make_sl(2, 0), make_sl(2, 0)), 3);
  SimplicityOptions one, four;
  four.threads = 4;
  const auto a = simplicity_check(s, SimplicityPolicy::ExhaustiveFp, one);
  const auto b = simplicity_check(s, SimplicityPolicy::ExhaustiveFp, four);
  CHECK(a.lines_checked == b.lines_checked);
  REQUIRE(a.witness);
  REQUIRE(b.witness);
  CHECK(*a.witness == *b.witness);
}

TEST_CASE("good prime") {
  CHECK(good_prime(make_sl(2, 1)) == 3u);
  const SuperAlgebra<Rational> thirds("x", Q, {Parity::Even, Parity::Odd, Parity::Odd},
                                      {{1, 2, 0, Rational::parse("1/3")}});
  CHECK(good_prime(thirds) == 5u);
}
