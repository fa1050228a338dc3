#ifndef SUPERLIE_STRUCTURE_HPP
#define SUPERLIE_STRUCTURE_HPP

// Center, derived subalgebra, ideal closure and the simplicity check.
//
// Ideals are arbitrary subspaces I with [L, I] ⊆ I; they are not required to
// be graded, so a Simple verdict also rules out graded ideals.

#include "superlie/core.hpp"
#include "superlie/exactla.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <thread>
#include <vector>

namespace superlie {

template <typename Scalar>
Subspace<Scalar> center(const SuperAlgebra<Scalar>& a) {
  require_valid(a);
  const int n = a.dim();
  Matrix<Scalar> m = Matrix<Scalar>::Zero(n * n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& t : a.product(i, j)) m(j * n + t.index, i) = t.coeff;
  return nullspace(a.field(), m);
}

template <typename Scalar>
Subspace<Scalar> derived_subalgebra(const SuperAlgebra<Scalar>& a) {
  require_valid(a);
  const int n = a.dim();
  std::vector<Vector<Scalar>> gens;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (a.product(i, j).empty()) continue;
      Vector<Scalar> v = Vector<Scalar>::Zero(n);
      for (const auto& t : a.product(i, j)) v(t.index) = t.coeff;
      gens.push_back(std::move(v));
    }
  return Subspace<Scalar>::span(a.field(), n, gens);
}

namespace detail {

// Dense echelon basis with incremental insertion; used by the closure loops.
template <typename Scalar>
class Echelon {
 public:
  explicit Echelon(Index n) : n_(n) {}

  Index dim() const { return static_cast<Index>(rows_.size()); }

  /// Inserts the reduction of v; returns it when independent.
  std::optional<Vector<Scalar>> insert(Vector<Scalar> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar c = v(pivots_[r]);
      if (!c.is_zero()) v -= c * rows_[r];
    }
    Index lead = -1;
    for (Index i = 0; i < n_; ++i)
      if (!v(i).is_zero()) { lead = i; break; }
    if (lead < 0) return std::nullopt;
    v *= Scalar(1) / v(lead);
    // Keep existing rows reduced at the new pivot.
    for (auto& row : rows_) {
      const Scalar c = row(lead);
      if (!c.is_zero()) row -= c * v;
    }
    rows_.push_back(v);
    pivots_.push_back(lead);
    return v;
  }

  std::vector<Vector<Scalar>> rows() const { return rows_; }

 private:
  Index n_;
  std::vector<Vector<Scalar>> rows_;
  std::vector<Index> pivots_;
};

template <typename Scalar>
std::vector<Matrix<Scalar>> adjoint_matrices(const SuperAlgebra<Scalar>& a) {
  std::vector<Matrix<Scalar>> ads;
  for (int j = 0; j < a.dim(); ++j) ads.push_back(ad(a, basis_vector(a, j)).matrix());
  return ads;
}

// Dimension of the ideal generated by `seeds`; stops early at `stop_at`.
template <typename Scalar>
Echelon<Scalar> close_under_adjoint(const std::vector<Matrix<Scalar>>& ads, Index n,
                                    const std::vector<Vector<Scalar>>& seeds, Index stop_at) {
  Echelon<Scalar> e(n);
  std::vector<Vector<Scalar>> queue;
  for (const auto& s : seeds)
    if (auto v = e.insert(s)) queue.push_back(std::move(*v));
  while (!queue.empty() && e.dim() < stop_at) {
    Vector<Scalar> v = std::move(queue.back());
    queue.pop_back();
    for (const auto& m : ads) {
      if (auto w = e.insert(m * v)) queue.push_back(std::move(*w));
      if (e.dim() >= stop_at) break;
    }
  }
  return e;
}

}  // namespace detail

/// Least subspace containing s and closed under [e_j, ·] for every j.
template <typename Scalar>
Subspace<Scalar> ideal_closure(const SuperAlgebra<Scalar>& a, const Subspace<Scalar>& s) {
  require_valid(a);
  if (s.ambient_dim() != a.dim()) throw DimensionMismatch("ideal_closure: ambient dimension differs");
  std::vector<Vector<Scalar>> seeds;
  for (Index i = 0; i < s.dim(); ++i) seeds.push_back(s.basis_vector(i));
  const auto e = detail::close_under_adjoint(detail::adjoint_matrices(a), a.dim(), seeds, a.dim() + 1);
  return Subspace<Scalar>::span(a.field(), a.dim(), e.rows());
}

/// True iff every basis vector's even projection lies in s.
template <typename Scalar>
bool is_graded_subspace(const SuperAlgebra<Scalar>& a, const Subspace<Scalar>& s) {
  for (Index r = 0; r < s.dim(); ++r) {
    Vector<Scalar> even = s.basis_vector(r);
    for (int i = 0; i < a.dim(); ++i)
      if (a.parity(i) == Parity::Odd) even(i) = Scalar(0);
    if (!s.contains(even)) return false;
  }
  return true;
}

enum class SimplicityPolicy { ExhaustiveFp, HeuristicQ };
enum class SimplicityStatus { Simple, NotSimple, Unknown };
enum class CertificateMethod { None, ExhaustiveFp, ReductionFromQ };

struct SimplicityOptions {
  std::uint64_t budget = 1'000'000;          // max lines enumerated
  std::optional<std::uint32_t> prime;        // overrides the good-prime choice
  int random_samples = 16;                   // HeuristicQ extra probes
  std::uint64_t seed = 20240229;
  unsigned threads = 1;
};

template <typename Scalar>
struct SimplicityVerdict {
  SimplicityStatus status = SimplicityStatus::Unknown;
  CertificateMethod method = CertificateMethod::None;
  std::uint32_t prime = 0;
  std::uint64_t lines_checked = 0;
  std::optional<Subspace<Scalar>> witness;
  bool witness_graded = false;
  /// Short machine-readable tag: center, derived, abelian, dimension_one,
  /// basis_closure, random_closure, line_closure, budget_exceeded,
  /// reduction_not_simple, no_good_prime, enumerated.
  std::string reason;
};

std::string to_string(SimplicityStatus s);
std::string to_string(CertificateMethod m);

/// Number of lines through the origin in F_p^n, or nullopt on overflow.
std::optional<std::uint64_t> line_count(std::uint32_t p, int n);

/// Smallest of {3, 5, 7, 11, 13} dividing no structure-constant denominator.
std::optional<std::uint32_t> good_prime(const SuperAlgebra<Rational>& a);

namespace detail {

template <typename Scalar>
SimplicityVerdict<Scalar> not_simple(const SuperAlgebra<Scalar>& a, Subspace<Scalar> w, std::string reason) {
  SimplicityVerdict<Scalar> v;
  v.status = SimplicityStatus::NotSimple;
  v.witness_graded = is_graded_subspace(a, w);
  v.witness = std::move(w);
  v.reason = std::move(reason);
  return v;
}

// Structural screens shared by both policies; nullopt when inconclusive.
template <typename Scalar>
std::optional<SimplicityVerdict<Scalar>> screen(const SuperAlgebra<Scalar>& a) {
  const int n = a.dim();
  if (n == 1) {
    SimplicityVerdict<Scalar> v;
    v.status = SimplicityStatus::NotSimple;
    v.reason = "dimension_one";
    return v;
  }
  const auto z = center(a);
  if (!z.is_zero() && !z.is_full()) return not_simple(a, z, "center");
  const auto d = derived_subalgebra(a);
  if (!d.is_full()) {
    if (!d.is_zero()) return not_simple(a, d, "derived");
    // Abelian: every line is an ideal.
    return not_simple(a, Subspace<Scalar>::span(a.field(), n, {basis_vector(a, 0)}), "abelian");
  }
  return std::nullopt;
}

inline Vector<Zp> decode_line(std::uint64_t index, std::uint32_t p, int n) {
  Vector<Zp> v = Vector<Zp>::Zero(n);
  int lead = 0;
  for (;; ++lead) {
    std::uint64_t count = 1;
    for (int t = lead + 1; t < n; ++t) count *= p;
    if (index < count) break;
    index -= count;
  }
  v(lead) = Zp(1, p);
  for (int t = n - 1; t > lead; --t) {
    v(t) = Zp(static_cast<std::int64_t>(index % p), p);
    index /= p;
  }
  return v;
}

}  // namespace detail

namespace detail {

// Kernel of the ad-nilpotent basis operator with the smallest kernel. A
// nonzero ideal I is ad(x)-stable and ad(x) is nilpotent on it, so I meets
// ker ad(x); lines outside the kernel never need to be tried.
inline std::optional<Subspace<Zp>> nilpotent_kernel(const SuperAlgebra<Zp>& a, const std::vector<Matrix<Zp>>& ads) {
  auto is_zero_matrix = [](const Matrix<Zp>& m) {
    return std::all_of(m.data(), m.data() + m.size(), [](const Zp& x) { return x.is_zero(); });
  };
  std::optional<Subspace<Zp>> best;
  for (const auto& m : ads) {
    Matrix<Zp> power = m;
    for (int t = 1; t < a.dim() && !is_zero_matrix(power); ++t) power = (power * m).eval();
    if (!is_zero_matrix(power)) continue;
    auto k = nullspace(a.field(), m);
    if (!best || k.dim() < best->dim()) best = std::move(k);
  }
  return best;
}

}  // namespace detail

/// Exhaustive search for a line whose ideal closure is proper; Simple when
/// none exists. All lines of F_p^n are tried when that fits the budget,
/// otherwise only the lines of a nilpotent kernel (see above).
inline SimplicityVerdict<Zp> enumerate_lines(const SuperAlgebra<Zp>& a, const SimplicityOptions& opt) {
  const int n = a.dim();
  const std::uint32_t p = a.field().characteristic();
  SimplicityVerdict<Zp> verdict;
  verdict.prime = p;
  const auto ads = detail::adjoint_matrices(a);
  Matrix<Zp> search = Subspace<Zp>::full(a.field(), n).basis();
  std::string done = "enumerated";
  auto total = line_count(p, n);
  if (!total || *total > opt.budget) {
    if (auto k = detail::nilpotent_kernel(a, ads)) {
      total = line_count(p, static_cast<int>(k->dim()));
      search = k->basis();
      done = "enumerated_nilpotent_kernel";
    }
  }
  if (!total || *total > opt.budget) {
    verdict.status = SimplicityStatus::Unknown;
    verdict.reason = "budget_exceeded";
    return verdict;
  }
  const int k = static_cast<int>(search.rows());
  auto line = [&](std::uint64_t t) -> Vector<Zp> { return search.transpose() * detail::decode_line(t, p, k); };
  const unsigned threads = std::max(1u, opt.threads);
  std::atomic<std::uint64_t> first_bad{std::numeric_limits<std::uint64_t>::max()};
  auto scan = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t t = begin; t < end && t < first_bad.load(); ++t) {
      const auto e = detail::close_under_adjoint(ads, n, {line(t)}, n);
      if (e.dim() < n) {
        std::uint64_t cur = first_bad.load();
        while (t < cur && !first_bad.compare_exchange_weak(cur, t)) {
        }
        return;
      }
    }
  };
  if (threads == 1) {
    scan(0, *total);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (*total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(scan, std::min<std::uint64_t>(*total, t * chunk), std::min<std::uint64_t>(*total, (t + 1) * chunk));
    for (auto& th : pool) th.join();
  }
  verdict.method = CertificateMethod::ExhaustiveFp;
  if (first_bad.load() == std::numeric_limits<std::uint64_t>::max()) {
    verdict.status = SimplicityStatus::Simple;
    verdict.lines_checked = *total;
    verdict.reason = done;
    return verdict;
  }
  const std::uint64_t bad = first_bad.load();
  auto w = detail::close_under_adjoint(ads, n, {line(bad)}, n + 1);
  auto out = detail::not_simple(a, Subspace<Zp>::span(a.field(), n, w.rows()), "line_closure");
  out.method = CertificateMethod::ExhaustiveFp;
  out.prime = p;
  out.lines_checked = bad + 1;
  return out;
}

/// Reduction of an algebra with rational constants modulo p. Constants that
/// vanish mod p are dropped; throws FieldError if p divides a denominator.
inline SuperAlgebra<Zp> reduce_mod(const SuperAlgebra<Rational>& a, std::uint32_t p) {
  const auto field = FieldDescriptor::prime_field(p);
  std::vector<StructureConstant<Zp>> cs;
  for (const auto& c : a.constants()) {
    Zp v = ScalarTraits<Zp>::from_rational(field, c.value);
    if (!v.is_zero()) cs.push_back({c.i, c.j, c.k, v});
  }
  return SuperAlgebra<Zp>(a.name(), field, a.parities(), cs);
}

template <typename Scalar>
SimplicityVerdict<Scalar> simplicity_check(const SuperAlgebra<Scalar>& a, SimplicityPolicy policy,
                                           const SimplicityOptions& opt = {}) {
  require_valid(a);
  if constexpr (std::is_same_v<Scalar, Zp>) {
    if (policy != SimplicityPolicy::ExhaustiveFp)
      throw PolicyMismatch("HeuristicQ needs an algebra over the rationals");
    if (auto s = detail::screen(a)) return *s;
    return enumerate_lines(a, opt);
  } else {
    if (policy != SimplicityPolicy::HeuristicQ) throw PolicyMismatch("ExhaustiveFp needs an algebra over F_p");
    if (auto s = detail::screen(a)) return *s;
    const int n = a.dim();
    const auto ads = detail::adjoint_matrices(a);
    auto probe = [&](const Vector<Rational>& v, const char* reason) -> std::optional<SimplicityVerdict<Rational>> {
      const auto e = detail::close_under_adjoint(ads, n, {v}, n + 1);
      if (e.dim() == n) return std::nullopt;
      return detail::not_simple(a, Subspace<Rational>::span(a.field(), n, e.rows()), reason);
    };
    for (int i = 0; i < n; ++i)
      if (auto r = probe(basis_vector(a, i), "basis_closure")) return *r;
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int s = 0; s < opt.random_samples; ++s) {
      Vector<Rational> v(n);
      for (int i = 0; i < n; ++i) v(i) = Rational(coeff(rng));
      if (std::all_of(v.data(), v.data() + n, [](const Rational& x) { return x.is_zero(); })) continue;
      if (auto r = probe(v, "random_closure")) return *r;
    }

    SimplicityVerdict<Rational> verdict;
    std::optional<std::uint32_t> p = opt.prime;
    if (p) {
      FieldDescriptor::prime_field(*p);
      for (const auto& c : a.constants())
        if (c.value.denominator() % *p == 0)
          throw PolicyMismatch(std::to_string(*p) + " divides a structure-constant denominator");
    } else {
      p = good_prime(a);
    }
    if (!p) {
      verdict.reason = "no_good_prime";
      return verdict;
    }
    verdict.prime = *p;
    const auto reduced = reduce_mod(a, *p);
    SimplicityVerdict<Zp> mod = simplicity_check(reduced, SimplicityPolicy::ExhaustiveFp, opt);
    verdict.lines_checked = mod.lines_checked;
    if (mod.status == SimplicityStatus::Simple) {
      verdict.status = SimplicityStatus::Simple;
      verdict.method = CertificateMethod::ReductionFromQ;
      verdict.reason = mod.reason;
    } else {
      verdict.reason = mod.reason == "budget_exceeded" ? mod.reason : "reduction_not_simple";
    }
    return verdict;
  }
}

}  // namespace superlie

#endif  // SUPERLIE_STRUCTURE_HPP
