#ifndef SUPERLIE_CORE_HPP
#define SUPERLIE_CORE_HPP

#include "superlie/errors.hpp"
#include "superlie/exactla.hpp"
#include "superlie/scalar.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace superlie {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline int bit(Parity p) { return static_cast<int>(p); }
inline Parity operator+(Parity a, Parity b) { return static_cast<Parity>(bit(a) ^ bit(b)); }
inline Parity parity_of(int b) { return (b & 1) ? Parity::Odd : Parity::Even; }
/// (-1)^(a b)
inline int sign(Parity a, Parity b) { return (bit(a) & bit(b)) ? -1 : 1; }
inline int sign(int exponent) { return (exponent & 1) ? -1 : 1; }

/// One stored structure constant c_{ij}^k (0-based, i <= j).
template <typename Scalar>
struct StructureConstant {
  int i, j, k;
  Scalar value;
};

/// A term of a sparse vector in the algebra basis.
template <typename Scalar>
struct Term {
  int index;
  Scalar coeff;
};

/// Finite-dimensional Z2-graded algebra given by structure constants on a
/// homogeneous basis e_0..e_{n-1}.
///
/// Only the constants with i <= j are stored; [e_j, e_i] for j > i is derived
/// from super skew-symmetry, [e_j, e_i] = -(-1)^{|i||j|} [e_i, e_j]. The
/// constructor rejects index-order, duplicate, grading and even-square
/// violations with ConstraintError. The super Jacobi identity is not enforced
/// here; see validate().
template <typename Scalar>
class SuperAlgebra {
 public:
  using Key = std::array<int, 3>;

  SuperAlgebra(std::string name, FieldDescriptor field, std::vector<Parity> parity,
               const std::vector<StructureConstant<Scalar>>& constants)
      : name_(std::move(name)), field_(field), parity_(std::move(parity)) {
    const int n = dim();
    if (n < 1) throw ConstraintError("dimension must be at least 1");
    if (!ScalarTraits<Scalar>::matches(field_)) throw ConstraintError("scalar type does not match field " + field_.to_string());
    for (const auto& c : constants) {
      const std::string where = " at (" + std::to_string(c.i + 1) + "," + std::to_string(c.j + 1) + "," +
                                std::to_string(c.k + 1) + ")";
      if (c.i < 0 || c.j < 0 || c.k < 0 || c.i >= n || c.j >= n || c.k >= n)
        throw ConstraintError("index out of range" + where);
      if (c.i > c.j) throw ConstraintError("stored constants need i <= j" + where);
      if (c.value.is_zero()) throw ConstraintError("zero structure constant" + where);
      if (parity_[c.k] != parity_[c.i] + parity_[c.j]) throw ConstraintError("grading violated" + where);
      if (c.i == c.j && parity_[c.i] == Parity::Even)
        throw ConstraintError("even basis vector with nonzero square" + where);
      if (!table_.emplace(Key{c.i, c.j, c.k}, c.value).second) throw ConstraintError("duplicate constant" + where);
    }
    products_.assign(static_cast<std::size_t>(n) * n, {});
    for (const auto& [key, value] : table_) {
      const auto [i, j, k] = key;
      products_[i * n + j].push_back({k, value});
      if (i != j) products_[j * n + i].push_back({k, sign(parity_[i], parity_[j]) == 1 ? -value : value});
    }
  }

  const std::string& name() const { return name_; }
  const FieldDescriptor& field() const { return field_; }
  int dim() const { return static_cast<int>(parity_.size()); }
  Parity parity(int i) const { return parity_[i]; }
  const std::vector<Parity>& parities() const { return parity_; }
  int even_dim() const { return static_cast<int>(std::count(parity_.begin(), parity_.end(), Parity::Even)); }
  int odd_dim() const { return dim() - even_dim(); }

  /// Stored constants (i <= j), keyed by 0-based (i, j, k).
  const std::map<Key, Scalar>& table() const { return table_; }

  std::vector<StructureConstant<Scalar>> constants() const {
    std::vector<StructureConstant<Scalar>> out;
    for (const auto& [key, value] : table_) out.push_back({key[0], key[1], key[2], value});
    return out;
  }

  /// Nonzero terms of [e_i, e_j], sorted by basis index; any i, j.
  const std::vector<Term<Scalar>>& product(int i, int j) const { return products_[i * dim() + j]; }

  Scalar structure_constant(int i, int j, int k) const {
    for (const auto& t : product(i, j))
      if (t.index == k) return t.coeff;
    return Scalar(0);
  }

  bool is_abelian() const { return table_.empty(); }

  friend bool operator==(const SuperAlgebra& a, const SuperAlgebra& b) {
    return a.name_ == b.name_ && a.field_ == b.field_ && a.parity_ == b.parity_ && a.table_ == b.table_;
  }

 private:
  std::string name_;
  FieldDescriptor field_;
  std::vector<Parity> parity_;
  std::map<Key, Scalar> table_;
  std::vector<std::vector<Term<Scalar>>> products_;
};

template <typename Scalar>
Vector<Scalar> basis_vector(const SuperAlgebra<Scalar>& a, int i) {
  Vector<Scalar> v = Vector<Scalar>::Zero(a.dim());
  v(i) = make_scalar<Scalar>(a.field(), 1);
  return v;
}

/// Bilinear extension of the structure constants.
template <typename Scalar>
Vector<Scalar> bracket(const SuperAlgebra<Scalar>& a, const Vector<Scalar>& x, const Vector<Scalar>& y) {
  const int n = a.dim();
  if (x.size() != n || y.size() != n) throw DimensionMismatch("bracket: vector length differs from algebra dimension");
  Vector<Scalar> out = Vector<Scalar>::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (x(i).is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y(j).is_zero()) continue;
      const Scalar xy = x(i) * y(j);
      for (const auto& t : a.product(i, j)) out(t.index) += xy * t.coeff;
    }
  }
  return out;
}

/// Parity of a homogeneous vector; Even for the zero vector; nullopt when x
/// mixes parities.
template <typename Scalar>
std::optional<Parity> homogeneous_parity(const SuperAlgebra<Scalar>& a, const Vector<Scalar>& x) {
  std::optional<Parity> p;
  for (int i = 0; i < a.dim(); ++i) {
    if (x(i).is_zero()) continue;
    if (p && *p != a.parity(i)) return std::nullopt;
    p = a.parity(i);
  }
  return p.value_or(Parity::Even);
}

/// Linear map L -> L with column j the image of e_j, homogeneous of `degree`.
template <typename Scalar>
class GradedLinearMap {
 public:
  GradedLinearMap(std::vector<Parity> parity, Matrix<Scalar> matrix, Parity degree)
      : parity_(std::move(parity)), matrix_(std::move(matrix)), degree_(degree) {
    const Index n = static_cast<Index>(parity_.size());
    if (matrix_.rows() != n || matrix_.cols() != n) throw DimensionMismatch("linear map must be n x n");
    for (Index k = 0; k < n; ++k)
      for (Index j = 0; j < n; ++j)
        if (!matrix_(k, j).is_zero() && parity_[k] != parity_[j] + degree_)
          throw ConstraintError("linear map entry (" + std::to_string(k + 1) + "," + std::to_string(j + 1) +
                                ") violates its degree");
  }

  template <typename A>
  static GradedLinearMap zero(const A& algebra, Parity degree) {
    return GradedLinearMap(algebra.parities(), Matrix<Scalar>::Zero(algebra.dim(), algebra.dim()), degree);
  }

  template <typename A>
  static GradedLinearMap identity(const A& algebra) {
    Matrix<Scalar> m = Matrix<Scalar>::Zero(algebra.dim(), algebra.dim());
    for (int i = 0; i < algebra.dim(); ++i) m(i, i) = make_scalar<Scalar>(algebra.field(), 1);
    return GradedLinearMap(algebra.parities(), std::move(m), Parity::Even);
  }

  const Matrix<Scalar>& matrix() const { return matrix_; }
  Parity degree() const { return degree_; }
  int dim() const { return static_cast<int>(parity_.size()); }
  const std::vector<Parity>& parities() const { return parity_; }

  Vector<Scalar> operator()(const Vector<Scalar>& x) const { return matrix_ * x; }

  friend bool operator==(const GradedLinearMap& a, const GradedLinearMap& b) {
    return a.degree_ == b.degree_ && a.matrix_ == b.matrix_;
  }

 private:
  std::vector<Parity> parity_;
  Matrix<Scalar> matrix_;
  Parity degree_;
};

template <typename Scalar>
GradedLinearMap<Scalar> operator*(const Scalar& s, const GradedLinearMap<Scalar>& f) {
  return GradedLinearMap<Scalar>(f.parities(), (s * f.matrix()).eval(), f.degree());
}

/// Bilinear map L x L -> L stored as an (n*n) x n table: row i*n + j is
/// b(e_i, e_j).
template <typename Scalar>
class GradedBilinearMap {
 public:
  GradedBilinearMap(std::vector<Parity> parity, Matrix<Scalar> table, Parity degree)
      : parity_(std::move(parity)), table_(std::move(table)), degree_(degree) {
    const Index n = static_cast<Index>(parity_.size());
    if (table_.rows() != n * n || table_.cols() != n) throw DimensionMismatch("bilinear table must be n^2 x n");
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k)
          if (!table_(i * n + j, k).is_zero() && parity_[k] != parity_[i] + parity_[j] + degree_)
            throw ConstraintError("bilinear entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                  std::to_string(k + 1) + ") violates its degree");
  }

  int dim() const { return static_cast<int>(parity_.size()); }
  Parity degree() const { return degree_; }
  const std::vector<Parity>& parities() const { return parity_; }
  const Matrix<Scalar>& table() const { return table_; }
  const Scalar& operator()(int i, int j, int k) const { return table_(i * dim() + j, k); }
  Vector<Scalar> value(int i, int j) const { return table_.row(i * dim() + j).transpose(); }

  Vector<Scalar> apply(const Vector<Scalar>& x, const Vector<Scalar>& y) const {
    const int n = dim();
    Vector<Scalar> out = Vector<Scalar>::Zero(n);
    for (int i = 0; i < n; ++i) {
      if (x(i).is_zero()) continue;
      for (int j = 0; j < n; ++j)
        if (!y(j).is_zero()) out += (x(i) * y(j)) * table_.row(i * n + j).transpose();
    }
    return out;
  }

  bool is_zero() const {
    return std::all_of(table_.data(), table_.data() + table_.size(), [](const Scalar& s) { return s.is_zero(); });
  }

  friend bool operator==(const GradedBilinearMap& a, const GradedBilinearMap& b) {
    return a.degree_ == b.degree_ && a.table_ == b.table_;
  }

 private:
  std::vector<Parity> parity_;
  Matrix<Scalar> table_;
  Parity degree_;
};

template <typename Scalar>
GradedBilinearMap<Scalar> operator*(const Scalar& s, const GradedBilinearMap<Scalar>& b) {
  return GradedBilinearMap<Scalar>(b.parities(), (s * b.table()).eval(), b.degree());
}

/// Matrix of y -> [x, y]; x must be homogeneous.
template <typename Scalar>
GradedLinearMap<Scalar> ad(const SuperAlgebra<Scalar>& a, const Vector<Scalar>& x) {
  if (x.size() != a.dim()) throw DimensionMismatch("ad: vector length differs from algebra dimension");
  const auto p = homogeneous_parity(a, x);
  if (!p) throw NotHomogeneous("ad: argument is not homogeneous");
  const int n = a.dim();
  Matrix<Scalar> m = Matrix<Scalar>::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (x(i).is_zero()) continue;
    for (int j = 0; j < n; ++j)
      for (const auto& t : a.product(i, j)) m(t.index, j) += x(i) * t.coeff;
  }
  return GradedLinearMap<Scalar>(a.parities(), std::move(m), *p);
}

/// The bracket itself as a degree-0 bilinear map.
template <typename Scalar>
GradedBilinearMap<Scalar> bracket_map(const SuperAlgebra<Scalar>& a) {
  const int n = a.dim();
  Matrix<Scalar> t = Matrix<Scalar>::Zero(n * n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& term : a.product(i, j)) t(i * n + j, term.index) = term.coeff;
  return GradedBilinearMap<Scalar>(a.parities(), std::move(t), Parity::Even);
}

struct Violation {
  enum class Kind { Grading, EvenSquare, Jacobi };
  Kind kind;
  int i, j, k;  // 0-based witness
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

std::string to_string(Violation::Kind kind);
/// "<kind> <i> <j> <k>" with 1-based indices, followed by the detail.
std::string to_string(const Violation& v);

/// Checks grading, even squares and the super Jacobi identity in the form
/// [e_i,[e_j,e_k]] = [[e_i,e_j],e_k] + (-1)^{|i||j|} [e_j,[e_i,e_k]] on every
/// basis triple. Violations are sorted by kind, then (i, j, k).
template <typename Scalar>
ValidationReport validate(const SuperAlgebra<Scalar>& a) {
  ValidationReport report;
  const int n = a.dim();
  for (const auto& [key, value] : a.table()) {
    const auto [i, j, k] = key;
    if (a.parity(k) != a.parity(i) + a.parity(j))
      report.violations.push_back({Violation::Kind::Grading, i, j, k, "coefficient " + value.str()});
    if (i == j && a.parity(i) == Parity::Even)
      report.violations.push_back({Violation::Kind::EvenSquare, i, j, k, "coefficient " + value.str()});
  }
  auto apply_left = [&](int i, const std::vector<Term<Scalar>>& y, Vector<Scalar>& out, const Scalar& s) {
    for (const auto& ty : y)
      for (const auto& t : a.product(i, ty.index)) out(t.index) += s * ty.coeff * t.coeff;
  };
  auto apply_right = [&](const std::vector<Term<Scalar>>& x, int k, Vector<Scalar>& out, const Scalar& s) {
    for (const auto& tx : x)
      for (const auto& t : a.product(tx.index, k)) out(t.index) += s * tx.coeff * t.coeff;
  };
  const Scalar one = make_scalar<Scalar>(a.field(), 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vector<Scalar> r = Vector<Scalar>::Zero(n);
        apply_left(i, a.product(j, k), r, one);
        apply_right(a.product(i, j), k, r, -one);
        apply_left(j, a.product(i, k), r, sign(a.parity(i), a.parity(j)) == 1 ? -one : one);
        for (int m = 0; m < n; ++m)
          if (!r(m).is_zero()) {
            report.violations.push_back({Violation::Kind::Jacobi, i, j, k,
                                         "component " + std::to_string(m + 1) + " is " + r(m).str()});
            break;
          }
      }
  return report;
}

/// Result of splitting an ungraded bilinear tensor into homogeneous parts.
/// Every (i, j, k) entry is compatible with exactly one degree over Z2, so
/// `residue` is always zero; it is kept so callers can assert exactness.
template <typename Scalar>
struct HomogeneousSplit {
  GradedBilinearMap<Scalar> even;
  GradedBilinearMap<Scalar> odd;
  Matrix<Scalar> residue;
};

template <typename Scalar>
HomogeneousSplit<Scalar> homogeneous_components(const SuperAlgebra<Scalar>& a, const Matrix<Scalar>& table) {
  const int n = a.dim();
  if (table.rows() != n * n || table.cols() != n) throw DimensionMismatch("bilinear table must be n^2 x n");
  Matrix<Scalar> even = Matrix<Scalar>::Zero(n * n, n), odd = even;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Parity d = a.parity(k) + a.parity(i) + a.parity(j);
        (d == Parity::Even ? even : odd)(i * n + j, k) = table(i * n + j, k);
      }
  Matrix<Scalar> residue = table - even - odd;
  return {GradedBilinearMap<Scalar>(a.parities(), std::move(even), Parity::Even),
          GradedBilinearMap<Scalar>(a.parities(), std::move(odd), Parity::Odd), std::move(residue)};
}

template <typename Scalar>
void require_valid(const SuperAlgebra<Scalar>& a) {
  const auto report = validate(a);
  if (!report.ok()) throw InvalidAlgebra(a.name() + ": " + to_string(report.violations.front()));
}

}  // namespace superlie

#endif  // SUPERLIE_CORE_HPP
