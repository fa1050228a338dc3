#ifndef SUPERLIE_CATALOG_HPP
#define SUPERLIE_CATALOG_HPP

// Test-bed algebras with integer structure constants over the rationals.
// Basis order is always: even basis vectors, then odd ones.
//
//   gl(m|n)   elementary matrices E_ab, lexicographic within each parity.
//   sl(m|n)   diagonal h_a = E_aa - E_{a+1,a+1} (E_mm + E_{m+1,m+1} across
//             the block boundary), then the off-diagonal E_ab.
//   osp(1|2)  h, e, f, u, v inside gl(1|2) with u = E_21 + E_13,
//             v = E_31 - E_12 (1-based). Normalisation: [u, u] = 2e,
//             [v, v] = -2f, [u, v] = -h, [h, u] = u, [h, v] = -v,
//             [e, v] = u, [f, u] = v.
//   heis(q)   z, u_1..u_q with [u_i, u_i] = z.
//   abelian(p,q)  zero bracket.

#include "superlie/core.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace superlie {

struct CatalogError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class KnownSimple { Yes, No, Unknown };

std::string to_string(KnownSimple k);

struct CatalogEntry {
  std::string key;
  KnownSimple known_simple;
  /// Dimension of the witness ideal expected for known_simple = No entries;
  /// 0 when no proper nonzero ideal exists (dimension one).
  std::optional<int> expected_witness_dim;
  SuperAlgebra<Rational> algebra;
};

SuperAlgebra<Rational> make_gl(int m, int n);
SuperAlgebra<Rational> make_sl(int m, int n);
SuperAlgebra<Rational> make_osp_1_2();
SuperAlgebra<Rational> make_heisenberg(int q);
SuperAlgebra<Rational> make_abelian(int p, int q);

/// Block direct sum; basis = even(A), even(B), odd(A), odd(B).
template <typename Scalar>
SuperAlgebra<Scalar> direct_sum(const SuperAlgebra<Scalar>& a, const SuperAlgebra<Scalar>& b) {
  if (!(a.field() == b.field())) throw FieldError("direct_sum: fields differ");
  std::vector<int> map_a(a.dim()), map_b(b.dim());
  std::vector<Parity> parity;
  for (Parity want : {Parity::Even, Parity::Odd}) {
    for (int i = 0; i < a.dim(); ++i)
      if (a.parity(i) == want) { map_a[i] = static_cast<int>(parity.size()); parity.push_back(want); }
    for (int i = 0; i < b.dim(); ++i)
      if (b.parity(i) == want) { map_b[i] = static_cast<int>(parity.size()); parity.push_back(want); }
  }
  std::vector<StructureConstant<Scalar>> cs;
  auto add = [&](const SuperAlgebra<Scalar>& x, const std::vector<int>& map) {
    for (const auto& c : x.constants()) {
      int i = map[c.i], j = map[c.j];
      Scalar v = c.value;
      if (i > j) {
        std::swap(i, j);
        if (sign(x.parity(c.i), x.parity(c.j)) == 1) v = -v;
      }
      cs.push_back({i, j, map[c.k], v});
    }
  };
  add(a, map_a);
  add(b, map_b);
  return SuperAlgebra<Scalar>("sum(" + a.name() + "," + b.name() + ")", a.field(), parity, cs);
}

/// Keys: sl(m|n), sl(m), gl(m|n), osp(1|2), heis(q), abelian(p,q),
/// sum(K1,K2). Throws CatalogError for unknown or malformed keys.
CatalogEntry catalog_entry(std::string_view key);

/// A representative list of keys for `catalog list`.
std::vector<std::string> catalog_keys();

}  // namespace superlie

#endif  // SUPERLIE_CATALOG_HPP
