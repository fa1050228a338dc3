#ifndef SUPERLIE_EXACTLA_HPP
#define SUPERLIE_EXACTLA_HPP

// Dense exact linear algebra over Rational and Zp: reduced row echelon form,
// nullspaces, and canonical subspaces. Over the rationals every elimination is
// fraction-free (integer cross-multiplication plus content removal); rows are
// divided by their pivots only once, at the end.

#include "superlie/errors.hpp"
#include "superlie/scalar.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

namespace superlie {

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using RowMajorMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Scalar>
struct RrefResult {
  Matrix<Scalar> reduced;
  Index rank = 0;
  std::vector<Index> pivots;
};

namespace detail {

template <typename Scalar>
void scale_row(std::span<Scalar> row, const Scalar& factor) {
  for (auto& x : row)
    if (!x.is_zero()) x *= factor;
}

}  // namespace detail

/// Unique reduced row echelon form. Pivot search takes the first row with a
/// nonzero entry in the leftmost unresolved column.
template <typename Scalar>
RrefResult<Scalar> rref(const Matrix<Scalar>& m) {
  constexpr bool fraction_free = ScalarTraits<Scalar>::fraction_free;
  RowMajorMatrix<Scalar> a = m;
  const Index rows = a.rows(), cols = a.cols();
  auto row = [&](Index r) { return std::span<Scalar>(a.data() + r * cols, static_cast<std::size_t>(cols)); };

  if constexpr (fraction_free)
    for (Index r = 0; r < rows; ++r) ScalarTraits<Scalar>::make_primitive(row(r));

  RrefResult<Scalar> out;
  for (Index c = 0; c < cols && out.rank < rows; ++c) {
    Index found = -1;
    for (Index r = out.rank; r < rows; ++r)
      if (!a(r, c).is_zero()) { found = r; break; }
    if (found < 0) continue;
    if (found != out.rank) a.row(found).swap(a.row(out.rank));
    const Index p = out.rank;
    if constexpr (!fraction_free) detail::scale_row(row(p), a(p, c).inverse());
    const Scalar pv = a(p, c);
    for (Index t = 0; t < rows; ++t) {
      if (t == p || a(t, c).is_zero()) continue;
      const Scalar tv = a(t, c);
      if constexpr (fraction_free) {
        a.row(t) = pv * a.row(t) - tv * a.row(p);
        ScalarTraits<Scalar>::make_primitive(row(t));
      } else {
        a.row(t) -= tv * a.row(p);
      }
    }
    out.pivots.push_back(c);
    ++out.rank;
  }
  if constexpr (fraction_free)
    for (Index r = 0; r < out.rank; ++r) {
      const Scalar pv = a(r, out.pivots[r]);
      if (!pv.is_one()) detail::scale_row(row(r), Scalar(1) / pv);
    }
  out.reduced = a;
  return out;
}

template <typename Scalar>
Index rank(const Matrix<Scalar>& m) {
  return rref(m).rank;
}

/// A subspace of Scalar^ambient held by its canonical (RREF) basis, one basis
/// vector per row. Equal subspaces have identical representations.
template <typename Scalar>
class Subspace {
 public:
  Subspace(FieldDescriptor field, Index ambient_dim)
      : field_(field), ambient_(ambient_dim), basis_(0, ambient_dim) {}

  /// Span of the rows of `generators`.
  static Subspace span(FieldDescriptor field, const Matrix<Scalar>& generators) {
    Subspace s(field, generators.cols());
    auto r = rref(generators);
    s.basis_ = r.reduced.topRows(r.rank);
    s.pivots_ = std::move(r.pivots);
    return s;
  }

  static Subspace span(FieldDescriptor field, Index ambient_dim, const std::vector<Vector<Scalar>>& vectors) {
    Matrix<Scalar> g(static_cast<Index>(vectors.size()), ambient_dim);
    for (Index i = 0; i < g.rows(); ++i) {
      if (vectors[i].size() != ambient_dim) throw DimensionMismatch("generator has wrong length");
      g.row(i) = vectors[i].transpose();
    }
    return span(field, g);
  }

  static Subspace full(FieldDescriptor field, Index ambient_dim) {
    Matrix<Scalar> id = Matrix<Scalar>::Zero(ambient_dim, ambient_dim);
    for (Index i = 0; i < ambient_dim; ++i) id(i, i) = make_scalar<Scalar>(field, 1);
    return span(field, id);
  }

  const FieldDescriptor& field() const { return field_; }
  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }
  const Matrix<Scalar>& basis() const { return basis_; }
  Vector<Scalar> basis_vector(Index i) const { return basis_.row(i).transpose(); }
  const std::vector<Index>& pivots() const { return pivots_; }

  bool contains(const Vector<Scalar>& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector length does not match ambient dimension");
    Vector<Scalar> rest = v;
    for (Index r = 0; r < dim(); ++r) {
      const Scalar c = rest(pivots_[r]);
      if (!c.is_zero()) rest -= c * basis_.row(r).transpose();
    }
    return std::all_of(rest.data(), rest.data() + rest.size(), [](const Scalar& x) { return x.is_zero(); });
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  FieldDescriptor field_;
  Index ambient_;
  Matrix<Scalar> basis_;
  std::vector<Index> pivots_;
};

template <typename Scalar>
bool membership(const Subspace<Scalar>& s, const Vector<Scalar>& v) {
  return s.contains(v);
}

template <typename Scalar>
Subspace<Scalar> subspace_sum(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace_sum: ambient dimensions differ");
  if (!(a.field() == b.field())) throw FieldError("subspace_sum: fields differ");
  Matrix<Scalar> g(a.dim() + b.dim(), a.ambient_dim());
  g << a.basis(), b.basis();
  return Subspace<Scalar>::span(a.field(), g);
}

template <typename Scalar>
Subspace<Scalar> nullspace(const FieldDescriptor& field, const Matrix<Scalar>& m) {
  const auto r = rref(m);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (Index c : r.pivots) is_pivot[c] = true;
  std::vector<Vector<Scalar>> gens;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector<Scalar> v = Vector<Scalar>::Zero(cols);
    v(f) = make_scalar<Scalar>(field, 1);
    for (Index row = 0; row < r.rank; ++row) v(r.pivots[row]) = -r.reduced(row, f);
    gens.push_back(std::move(v));
  }
  return Subspace<Scalar>::span(field, cols, gens);
}

/// Sparse row: strictly increasing column indices with nonzero values.
template <typename Scalar>
struct SparseRow {
  std::vector<Index> cols;
  std::vector<Scalar> vals;

  bool empty() const { return cols.empty(); }

  /// Sums duplicate columns and drops zeros.
  static SparseRow from_terms(std::vector<std::pair<Index, Scalar>> terms) {
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    SparseRow out;
    for (auto& [c, v] : terms) {
      if (!out.cols.empty() && out.cols.back() == c) {
        out.vals.back() += v;
      } else {
        if (!out.cols.empty() && out.vals.back().is_zero()) {
          out.cols.pop_back();
          out.vals.pop_back();
        }
        out.cols.push_back(c);
        out.vals.push_back(std::move(v));
      }
    }
    if (!out.cols.empty() && out.vals.back().is_zero()) {
      out.cols.pop_back();
      out.vals.pop_back();
    }
    return out;
  }
};

/// Incremental row-echelon solver for large sparse homogeneous systems.
/// Rows are reduced against the current pivots as they arrive; only
/// independent rows are stored. Adding rows block by block keeps the fill
/// inside the columns those blocks touch.
template <typename Scalar>
class EchelonAccumulator {
 public:
  EchelonAccumulator(FieldDescriptor field, Index cols)
      : field_(field), cols_(cols), pivot_of_(cols, -1), scratch_(cols, Scalar(0)) {}

  Index cols() const { return cols_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }

  /// Returns true when the row was independent of the rows seen so far.
  bool add_row(const SparseRow<Scalar>& row) {
    if (row.empty()) return false;
    Index lo = row.cols.front(), hi = row.cols.back();
    if (hi >= cols_) throw DimensionMismatch("row column out of range");
    for (std::size_t t = 0; t < row.cols.size(); ++t) scratch_[row.cols[t]] = row.vals[t];
    reduce(lo, lo, hi);
    SparseRow<Scalar> reduced = gather(lo, hi);
    if (reduced.empty()) return false;
    if constexpr (ScalarTraits<Scalar>::fraction_free) {
      ScalarTraits<Scalar>::make_primitive(reduced.vals);
    } else {
      detail::scale_row(std::span<Scalar>(reduced.vals), reduced.vals.front().inverse());
    }
    pivot_of_[reduced.cols.front()] = static_cast<Index>(rows_.size());
    rows_.push_back(std::move(reduced));
    return true;
  }

  /// Canonical basis of the solution space of all rows added so far.
  Subspace<Scalar> nullspace() const {
    // Back substitution: once every pivot row above column c is fully
    // reduced, reducing row c only introduces free columns.
    std::vector<std::pair<Index, Index>> order;  // (pivot column, row)
    for (Index r = 0; r < rank(); ++r) order.emplace_back(rows_[r].cols.front(), r);
    std::sort(order.rbegin(), order.rend());

    EchelonAccumulator work = *this;
    for (const auto& entry : order) {
      SparseRow<Scalar>& row = work.rows_[entry.second];
      const Index lo = row.cols.front();
      Index hi = row.cols.back();
      for (std::size_t t = 0; t < row.cols.size(); ++t) work.scratch_[row.cols[t]] = row.vals[t];
      work.reduce(lo, lo + 1, hi);
      row = work.gather(lo, hi);
      const Scalar inv = Scalar(1) / row.vals.front();
      if (!inv.is_one()) detail::scale_row(std::span<Scalar>(row.vals), inv);
    }

    std::vector<Vector<Scalar>> gens;
    for (Index f = 0; f < cols_; ++f) {
      if (pivot_of_[f] >= 0) continue;
      Vector<Scalar> v = Vector<Scalar>::Zero(cols_);
      v(f) = make_scalar<Scalar>(field_, 1);
      gens.push_back(std::move(v));
    }
    std::vector<Index> free_slot(cols_, -1);
    for (Index f = 0, s = 0; f < cols_; ++f)
      if (pivot_of_[f] < 0) free_slot[f] = s++;
    for (const auto& row : work.rows_) {
      const Index pc = row.cols.front();
      for (std::size_t t = 1; t < row.cols.size(); ++t) gens[free_slot[row.cols[t]]](pc) = -row.vals[t];
    }
    return Subspace<Scalar>::span(field_, cols_, gens);
  }

 private:
  // Eliminates pivot columns of scratch_ in [from, hi]; the live entries span
  // [lo, hi] and hi grows with fill-in.
  void reduce(Index lo, Index from, Index& hi) {
    for (Index c = from; c <= hi; ++c) {
      if (scratch_[c].is_zero() || pivot_of_[c] < 0) continue;
      const SparseRow<Scalar>& p = rows_[pivot_of_[c]];
      const Scalar tv = scratch_[c];
      if constexpr (ScalarTraits<Scalar>::fraction_free) {
        const Scalar& pv = p.vals.front();
        if (!pv.is_one())
          for (Index x = lo; x <= hi; ++x)
            if (!scratch_[x].is_zero()) scratch_[x] *= pv;
      }
      for (std::size_t t = 0; t < p.cols.size(); ++t) scratch_[p.cols[t]] -= tv * p.vals[t];
      hi = std::max(hi, p.cols.back());
    }
  }

  SparseRow<Scalar> gather(Index lo, Index hi) {
    SparseRow<Scalar> out;
    for (Index c = lo; c <= hi; ++c) {
      if (!scratch_[c].is_zero()) {
        out.cols.push_back(c);
        out.vals.push_back(scratch_[c]);
      }
      scratch_[c] = Scalar(0);
    }
    return out;
  }

  FieldDescriptor field_;
  Index cols_;
  std::vector<SparseRow<Scalar>> rows_;
  std::vector<Index> pivot_of_;
  std::vector<Scalar> scratch_;
};

}  // namespace superlie

#endif  // SUPERLIE_EXACTLA_HPP
