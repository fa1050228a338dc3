#ifndef SUPERLIE_SPACES_HPP
#define SUPERLIE_SPACES_HPP

// Centroid, superderivation, skew-supersymmetric super-biderivation and
// linear super-commuting map spaces as nullspaces of exact linear systems,
// plus the inner / factorization / scalar certificates built on them.
//
// Unknowns are the grading-compatible entries of a homogeneous map of fixed
// degree: (k, j) in lexicographic order for linear maps (entry k of f(e_j)),
// (i, j, k) for bilinear maps (entry k of phi(e_i, e_j)).

#include "superlie/core.hpp"
#include "superlie/exactla.hpp"
#include "superlie/structure.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace superlie {

enum class SpaceKind { Centroid, Superderivation, Biderivation, CommutingMap };

std::string to_string(SpaceKind kind);

/// Coordinate layout: the grading-compatible entries of an n x n map (two
/// indices) or an n x n x n tensor (three indices).
struct CoordinateLayout {
  int n = 0;
  bool bilinear = false;
  std::vector<std::array<int, 3>> coords;  // (k, j, -1) or (i, j, k)
  std::vector<Index> position;             // dense entry -> coordinate, or -1

  Index size() const { return static_cast<Index>(coords.size()); }
  Index at(int a, int b) const { return position[a * n + b]; }
  Index at(int a, int b, int c) const { return position[(a * n + b) * n + c]; }
};

CoordinateLayout linear_layout(const std::vector<Parity>& parity, Parity degree);
CoordinateLayout bilinear_layout(const std::vector<Parity>& parity, Parity degree);

template <typename Scalar>
struct LinearSystem {
  CoordinateLayout layout;
  std::vector<SparseRow<Scalar>> rows;
};

template <typename Scalar>
class MapSpace {
 public:
  MapSpace(SpaceKind kind, std::optional<Parity> degree, std::vector<Parity> parity, CoordinateLayout layout,
           Subspace<Scalar> space)
      : kind_(kind), degree_(degree), parity_(std::move(parity)), layout_(std::move(layout)), space_(std::move(space)) {}

  SpaceKind kind() const { return kind_; }
  /// Absent for CommutingMap, which is even by definition.
  std::optional<Parity> degree() const { return degree_; }
  Parity element_degree() const { return degree_.value_or(Parity::Even); }
  const CoordinateLayout& layout() const { return layout_; }
  const Subspace<Scalar>& space() const { return space_; }
  Index dim() const { return space_.dim(); }

  GradedLinearMap<Scalar> linear_map(const Vector<Scalar>& coords) const {
    const int n = layout_.n;
    Matrix<Scalar> m = Matrix<Scalar>::Zero(n, n);
    for (Index c = 0; c < layout_.size(); ++c) m(layout_.coords[c][0], layout_.coords[c][1]) = coords(c);
    return GradedLinearMap<Scalar>(parity_, std::move(m), element_degree());
  }

  GradedBilinearMap<Scalar> bilinear_map(const Vector<Scalar>& coords) const {
    const int n = layout_.n;
    Matrix<Scalar> t = Matrix<Scalar>::Zero(n * n, n);
    for (Index c = 0; c < layout_.size(); ++c) {
      const auto [i, j, k] = layout_.coords[c];
      t(i * n + j, k) = coords(c);
    }
    return GradedBilinearMap<Scalar>(parity_, std::move(t), element_degree());
  }

  GradedLinearMap<Scalar> linear_element(Index b) const { return linear_map(space_.basis_vector(b)); }
  GradedBilinearMap<Scalar> bilinear_element(Index b) const { return bilinear_map(space_.basis_vector(b)); }

  /// Coordinates of f; nullopt when f has a nonzero entry outside the layout.
  std::optional<Vector<Scalar>> flatten(const GradedLinearMap<Scalar>& f) const {
    const int n = layout_.n;
    Vector<Scalar> v = Vector<Scalar>::Zero(layout_.size());
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        const Index pos = layout_.at(k, j);
        if (pos >= 0) v(pos) = f.matrix()(k, j);
        else if (!f.matrix()(k, j).is_zero()) return std::nullopt;
      }
    return v;
  }

  std::optional<Vector<Scalar>> flatten(const GradedBilinearMap<Scalar>& phi) const {
    const int n = layout_.n;
    Vector<Scalar> v = Vector<Scalar>::Zero(layout_.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const Index pos = layout_.at(i, j, k);
          if (pos >= 0) v(pos) = phi(i, j, k);
          else if (!phi(i, j, k).is_zero()) return std::nullopt;
        }
    return v;
  }

  bool contains(const GradedLinearMap<Scalar>& f) const {
    const auto v = flatten(f);
    return v && space_.contains(*v);
  }
  bool contains(const GradedBilinearMap<Scalar>& phi) const {
    const auto v = flatten(phi);
    return v && space_.contains(*v);
  }

 private:
  SpaceKind kind_;
  std::optional<Parity> degree_;
  std::vector<Parity> parity_;
  CoordinateLayout layout_;
  Subspace<Scalar> space_;
};

namespace detail {

template <typename Scalar>
using TermList = std::vector<std::pair<Index, Scalar>>;

template <typename Scalar>
Scalar signed_coeff(int s, const Scalar& c) {
  return s == 1 ? c : -c;
}

template <typename Scalar>
void flush(std::vector<TermList<Scalar>>& comps, std::vector<SparseRow<Scalar>>& rows) {
  for (auto& terms : comps) {
    if (!terms.empty()) {
      auto row = SparseRow<Scalar>::from_terms(std::move(terms));
      if (!row.empty()) rows.push_back(std::move(row));
    }
    terms.clear();
  }
}

// comps[k] += s * sum_m F(k, m) c_{ij}^m   i.e. the entries of f([e_i, e_j])
template <typename Scalar>
void add_map_of_bracket(const SuperAlgebra<Scalar>& a, const CoordinateLayout& lay, int i, int j, int s,
                        std::vector<TermList<Scalar>>& comps) {
  for (const auto& t : a.product(i, j))
    for (int k = 0; k < a.dim(); ++k) {
      const Index pos = lay.at(k, t.index);
      if (pos >= 0) comps[k].emplace_back(pos, signed_coeff(s, t.coeff));
    }
}

// comps += s * [e_i, f(e_j)]
template <typename Scalar>
void add_bracket_left(const SuperAlgebra<Scalar>& a, const CoordinateLayout& lay, int i, int j, int s,
                      std::vector<TermList<Scalar>>& comps) {
  for (int m = 0; m < a.dim(); ++m) {
    const Index pos = lay.at(m, j);
    if (pos < 0) continue;
    for (const auto& t : a.product(i, m)) comps[t.index].emplace_back(pos, signed_coeff(s, t.coeff));
  }
}

// comps += s * [f(e_i), e_j]
template <typename Scalar>
void add_bracket_right(const SuperAlgebra<Scalar>& a, const CoordinateLayout& lay, int i, int j, int s,
                       std::vector<TermList<Scalar>>& comps) {
  for (int m = 0; m < a.dim(); ++m) {
    const Index pos = lay.at(m, i);
    if (pos < 0) continue;
    for (const auto& t : a.product(m, j)) comps[t.index].emplace_back(pos, signed_coeff(s, t.coeff));
  }
}

template <typename Scalar>
Subspace<Scalar> solve(const FieldDescriptor& field, const LinearSystem<Scalar>& sys) {
  EchelonAccumulator<Scalar> acc(field, sys.layout.size());
  for (const auto& row : sys.rows) acc.add_row(row);
  return acc.nullspace();
}

}  // namespace detail

/// f([e_i, e_j]) - (-1)^{d|i|} [e_i, f(e_j)] = 0 for all basis pairs.
template <typename Scalar>
LinearSystem<Scalar> centroid_system(const SuperAlgebra<Scalar>& a, Parity d) {
  LinearSystem<Scalar> sys{linear_layout(a.parities(), d), {}};
  std::vector<detail::TermList<Scalar>> comps(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      detail::add_map_of_bracket(a, sys.layout, i, j, 1, comps);
      detail::add_bracket_left(a, sys.layout, i, j, -sign(d, a.parity(i)), comps);
      detail::flush(comps, sys.rows);
    }
  return sys;
}

/// D([e_i, e_j]) - [D(e_i), e_j] - (-1)^{d|i|} [e_i, D(e_j)] = 0.
template <typename Scalar>
LinearSystem<Scalar> superderivation_system(const SuperAlgebra<Scalar>& a, Parity d) {
  LinearSystem<Scalar> sys{linear_layout(a.parities(), d), {}};
  std::vector<detail::TermList<Scalar>> comps(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      detail::add_map_of_bracket(a, sys.layout, i, j, 1, comps);
      detail::add_bracket_right(a, sys.layout, i, j, -1, comps);
      detail::add_bracket_left(a, sys.layout, i, j, -sign(d, a.parity(i)), comps);
      detail::flush(comps, sys.rows);
    }
  return sys;
}

/// [f(e_i), e_j] - [e_i, f(e_j)] = 0 over even f.
template <typename Scalar>
LinearSystem<Scalar> commuting_map_system(const SuperAlgebra<Scalar>& a) {
  LinearSystem<Scalar> sys{linear_layout(a.parities(), Parity::Even), {}};
  std::vector<detail::TermList<Scalar>> comps(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      detail::add_bracket_right(a, sys.layout, i, j, 1, comps);
      detail::add_bracket_left(a, sys.layout, i, j, -1, comps);
      detail::flush(comps, sys.rows);
    }
  return sys;
}

/// Super-Leibniz rows for every triple, grouped by first argument, followed
/// by the skew-supersymmetry rows for i <= j.
template <typename Scalar>
LinearSystem<Scalar> biderivation_system(const SuperAlgebra<Scalar>& a, Parity d) {
  const int n = a.dim();
  LinearSystem<Scalar> sys{bilinear_layout(a.parities(), d), {}};
  const auto& lay = sys.layout;
  std::vector<detail::TermList<Scalar>> comps(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int s = sign(bit(d + a.parity(i)) * bit(a.parity(j)));
      for (int k = 0; k < n; ++k) {
        // phi(e_i, [e_j, e_k])
        for (const auto& t : a.product(j, k))
          for (int l = 0; l < n; ++l) {
            const Index pos = lay.at(i, t.index, l);
            if (pos >= 0) comps[l].emplace_back(pos, t.coeff);
          }
        // - [phi(e_i, e_j), e_k]
        for (int m = 0; m < n; ++m) {
          const Index pos = lay.at(i, j, m);
          if (pos < 0) continue;
          for (const auto& t : a.product(m, k)) comps[t.index].emplace_back(pos, -t.coeff);
        }
        // - (-1)^{(d+|i|)|j|} [e_j, phi(e_i, e_k)]
        for (int m = 0; m < n; ++m) {
          const Index pos = lay.at(i, k, m);
          if (pos < 0) continue;
          for (const auto& t : a.product(j, m)) comps[t.index].emplace_back(pos, detail::signed_coeff(-s, t.coeff));
        }
        detail::flush(comps, sys.rows);
      }
    }
  const Scalar one = make_scalar<Scalar>(a.field(), 1);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Index p = lay.at(i, j, k), q = lay.at(j, i, k);
        if (p < 0) continue;
        auto row = SparseRow<Scalar>::from_terms(
            {{p, one}, {q, detail::signed_coeff(sign(a.parity(i), a.parity(j)), one)}});
        if (!row.empty()) sys.rows.push_back(std::move(row));
      }
  return sys;
}

template <typename Scalar>
MapSpace<Scalar> centroid_space(const SuperAlgebra<Scalar>& a, Parity d) {
  require_valid(a);
  auto sys = centroid_system(a, d);
  auto space = detail::solve(a.field(), sys);
  return MapSpace<Scalar>(SpaceKind::Centroid, d, a.parities(), std::move(sys.layout), std::move(space));
}

template <typename Scalar>
MapSpace<Scalar> superderivation_space(const SuperAlgebra<Scalar>& a, Parity d) {
  require_valid(a);
  auto sys = superderivation_system(a, d);
  auto space = detail::solve(a.field(), sys);
  return MapSpace<Scalar>(SpaceKind::Superderivation, d, a.parities(), std::move(sys.layout), std::move(space));
}

template <typename Scalar>
MapSpace<Scalar> biderivation_space(const SuperAlgebra<Scalar>& a, Parity d) {
  require_valid(a);
  auto sys = biderivation_system(a, d);
  auto space = detail::solve(a.field(), sys);
  return MapSpace<Scalar>(SpaceKind::Biderivation, d, a.parities(), std::move(sys.layout), std::move(space));
}

template <typename Scalar>
MapSpace<Scalar> commuting_map_space(const SuperAlgebra<Scalar>& a) {
  require_valid(a);
  auto sys = commuting_map_system(a);
  auto space = detail::solve(a.field(), sys);
  return MapSpace<Scalar>(SpaceKind::CommutingMap, std::nullopt, a.parities(), std::move(sys.layout),
                          std::move(space));
}

// ---------------------------------------------------------------------------
// Substitution checks. These evaluate the defining identities directly with
// bracket() on basis vectors and share no code with the row assembly above.

template <typename Scalar>
bool is_centroid_element(const SuperAlgebra<Scalar>& a, const GradedLinearMap<Scalar>& f) {
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      const auto ei = basis_vector(a, i), ej = basis_vector(a, j);
      const Vector<Scalar> lhs = f(bracket(a, ei, ej));
      Vector<Scalar> rhs = bracket(a, ei, f(ej));
      if (sign(f.degree(), a.parity(i)) == -1) rhs = -rhs;
      if (lhs != rhs) return false;
    }
  return true;
}

/// The second form of the centroid condition, f([x, y]) = [f(x), y].
template <typename Scalar>
bool satisfies_right_centroid_form(const SuperAlgebra<Scalar>& a, const GradedLinearMap<Scalar>& f) {
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      const auto ei = basis_vector(a, i), ej = basis_vector(a, j);
      if (f(bracket(a, ei, ej)) != bracket(a, f(ei), ej)) return false;
    }
  return true;
}

template <typename Scalar>
bool is_superderivation(const SuperAlgebra<Scalar>& a, const GradedLinearMap<Scalar>& D) {
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      const auto ei = basis_vector(a, i), ej = basis_vector(a, j);
      Vector<Scalar> rhs2 = bracket(a, ei, D(ej));
      if (sign(D.degree(), a.parity(i)) == -1) rhs2 = -rhs2;
      if (D(bracket(a, ei, ej)) != bracket(a, D(ei), ej) + rhs2) return false;
    }
  return true;
}

template <typename Scalar>
bool is_commuting_map(const SuperAlgebra<Scalar>& a, const GradedLinearMap<Scalar>& f) {
  if (f.degree() != Parity::Even) return false;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      const auto ei = basis_vector(a, i), ej = basis_vector(a, j);
      if (bracket(a, f(ei), ej) != bracket(a, ei, f(ej))) return false;
    }
  return true;
}

template <typename Scalar>
bool is_skew_supersymmetric(const SuperAlgebra<Scalar>& a, const GradedBilinearMap<Scalar>& phi) {
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      Vector<Scalar> flipped = phi.value(j, i);
      if (sign(a.parity(i), a.parity(j)) == 1) flipped = -flipped;
      if (phi.value(i, j) != flipped) return false;
    }
  return true;
}

template <typename Scalar>
bool satisfies_super_leibniz(const SuperAlgebra<Scalar>& a, const GradedBilinearMap<Scalar>& phi) {
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const auto ei = basis_vector(a, i), ej = basis_vector(a, j), ek = basis_vector(a, k);
        const Vector<Scalar> lhs = phi.apply(ei, bracket(a, ej, ek));
        Vector<Scalar> second = bracket(a, ej, phi.apply(ei, ek));
        if (sign(bit(phi.degree() + a.parity(i)) * bit(a.parity(j))) == -1) second = -second;
        if (lhs != bracket(a, phi.apply(ei, ej), ek) + second) return false;
      }
  return true;
}

template <typename Scalar>
bool is_biderivation(const SuperAlgebra<Scalar>& a, const GradedBilinearMap<Scalar>& phi) {
  return is_skew_supersymmetric(a, phi) && satisfies_super_leibniz(a, phi);
}

// ---------------------------------------------------------------------------
// Certificates.

template <typename Scalar>
struct InnerCertificate {
  Scalar lambda;
};

/// lambda with phi = lambda * bracket, read off the lexicographically first
/// nonzero bracket entry and then checked on every entry.
template <typename Scalar>
std::optional<InnerCertificate<Scalar>> inner_certificate(const SuperAlgebra<Scalar>& a,
                                                          const GradedBilinearMap<Scalar>& phi) {
  if (phi.dim() != a.dim()) throw DimensionMismatch("inner_certificate: dimension differs");
  const auto b = bracket_map(a);
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (b(i, j, k).is_zero()) continue;
        const Scalar lambda = phi(i, j, k) / b(i, j, k);
        if (phi.table() != (lambda * b.table()).eval()) return std::nullopt;
        return InnerCertificate<Scalar>{lambda};
      }
  if (phi.is_zero()) return InnerCertificate<Scalar>{Scalar(0)};
  return std::nullopt;
}

/// f_phi with phi(x, y) = f_phi([x, y]), for perfect algebras. Also checks
/// that f_phi lies in the centroid of the same degree.
template <typename Scalar>
GradedLinearMap<Scalar> centroid_factorization(const SuperAlgebra<Scalar>& a, const GradedBilinearMap<Scalar>& phi) {
  require_valid(a);
  if (phi.dim() != a.dim()) throw DimensionMismatch("centroid_factorization: dimension differs");
  if (!derived_subalgebra(a).is_full()) throw NotPerfect(a.name() + " is not perfect: [L, L] != L");
  const int n = a.dim();
  const auto lay = linear_layout(a.parities(), phi.degree());
  const Index unknowns = lay.size();
  // Rows: for each pair (i, j) and component k, sum_m c_{ij}^m F(k, m) = phi(i, j, k).
  Matrix<Scalar> aug = Matrix<Scalar>::Zero(static_cast<Index>(n) * n * n, unknowns + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Index r = (static_cast<Index>(i) * n + j) * n + k;
        for (const auto& t : a.product(i, j)) {
          const Index pos = lay.at(k, t.index);
          if (pos >= 0) aug(r, pos) += t.coeff;
        }
        aug(r, unknowns) = phi(i, j, k);
      }
  const auto red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == unknowns)
    throw NoFactorization("phi(x, y) = f([x, y]) has no solution");
  Matrix<Scalar> m = Matrix<Scalar>::Zero(n, n);
  for (Index r = 0; r < red.rank; ++r) {
    const auto& c = lay.coords[red.pivots[r]];
    m(c[0], c[1]) = red.reduced(r, unknowns);
  }
  GradedLinearMap<Scalar> f(a.parities(), std::move(m), phi.degree());
  if (!centroid_space(a, phi.degree()).contains(f)) throw NoFactorization("f_phi is not in the centroid");
  return f;
}

/// phi_f(x, y) = [f(x), y] for a linear super-commuting map f; the result is
/// re-checked against both biderivation identities.
template <typename Scalar>
GradedBilinearMap<Scalar> biderivation_from_commuting(const SuperAlgebra<Scalar>& a, const GradedLinearMap<Scalar>& f) {
  require_valid(a);
  if (f.dim() != a.dim()) throw DimensionMismatch("biderivation_from_commuting: dimension differs");
  if (f.degree() != Parity::Even || !commuting_map_space(a).contains(f))
    throw NotCommuting("map is not a linear super-commuting map");
  const int n = a.dim();
  Matrix<Scalar> t = Matrix<Scalar>::Zero(n * n, n);
  for (int i = 0; i < n; ++i) {
    const Vector<Scalar> fi = f(basis_vector(a, i));
    for (int j = 0; j < n; ++j) t.row(i * n + j) = bracket(a, fi, basis_vector(a, j)).transpose();
  }
  GradedBilinearMap<Scalar> phi(a.parities(), std::move(t), Parity::Even);
  if (!is_biderivation(a, phi)) throw NotCommuting("phi_f failed the biderivation identities");
  return phi;
}

template <typename Scalar>
struct ScalarVerdict {
  bool all_scalar = false;
  /// The scalar of the single basis element, when dim = 1.
  std::optional<Scalar> scalar;
  /// A basis element that is not a multiple of the identity.
  std::optional<GradedLinearMap<Scalar>> witness;
};

template <typename Scalar>
ScalarVerdict<Scalar> scalar_certificate(const SuperAlgebra<Scalar>& a, const MapSpace<Scalar>& space) {
  if (space.kind() != SpaceKind::CommutingMap) throw std::invalid_argument("scalar_certificate needs a CommutingMap space");
  ScalarVerdict<Scalar> out;
  const int n = a.dim();
  auto scalar_of = [&](const GradedLinearMap<Scalar>& f) -> std::optional<Scalar> {
    const Scalar lambda = f.matrix()(0, 0);
    Matrix<Scalar> expect = Matrix<Scalar>::Zero(n, n);
    for (int i = 0; i < n; ++i) expect(i, i) = lambda;
    if (f.matrix() != expect) return std::nullopt;
    return lambda;
  };
  for (Index b = 0; b < space.dim(); ++b) {
    auto f = space.linear_element(b);
    auto lambda = scalar_of(f);
    if (!lambda) {
      out.witness = std::move(f);
      return out;
    }
    if (space.dim() == 1) out.scalar = lambda;
  }
  out.all_scalar = space.dim() <= 1;
  return out;
}

}  // namespace superlie

#endif  // SUPERLIE_SPACES_HPP
