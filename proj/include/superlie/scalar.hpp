#ifndef SUPERLIE_SCALAR_HPP
#define SUPERLIE_SCALAR_HPP

#include <Eigen/Core>
#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace superlie {

struct FieldError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t n);

/// Ground field of a computation: the rationals or F_p for an odd prime p.
class FieldDescriptor {
 public:
  enum class Kind { Rationals, PrimeField };

  static FieldDescriptor rationals() { return FieldDescriptor(Kind::Rationals, 0); }
  /// Throws FieldError unless p is an odd prime.
  static FieldDescriptor prime_field(std::uint64_t p);

  Kind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const { return p_; }

  /// "Q" or "F <p>", the spelling used by the algebra file format.
  std::string to_string() const;

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

 private:
  FieldDescriptor(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

/// Exact rational number in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I n) : v_(static_cast<long>(n)) {}
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den);

  /// Accepts "a" or "a/b"; throws FieldError on malformed text or b = 0.
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }

  std::string str() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

 private:
  mpq_class v_;
};

/// Residue modulo an odd prime.
///
/// A value constructed from a bare integer is "unbound" (modulus 0) and
/// adopts the modulus of the first bound operand it meets. This is what lets
/// Eigen build Scalar(0) and Scalar(1) without knowing the field.
class Zp {
 public:
  constexpr Zp() = default;
  template <std::integral I>
  constexpr Zp(I n) : value_(static_cast<std::int64_t>(n)) {}
  /// Bound residue of n modulo p.
  Zp(std::int64_t n, std::uint32_t p);

  std::uint32_t modulus() const { return modulus_; }
  /// Representative in [0, p) (or the raw integer when unbound).
  std::int64_t residue() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }
  Zp inverse() const;

  std::string str() const { return std::to_string(value_); }

  Zp& operator+=(const Zp& o);
  Zp& operator-=(const Zp& o);
  Zp& operator*=(const Zp& o);
  Zp& operator/=(const Zp& o) { return *this *= o.inverse(); }

  friend Zp operator+(Zp a, const Zp& b) { return a += b; }
  friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
  friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
  friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
  friend Zp operator-(const Zp& a) { return Zp(0) - a; }
  friend bool operator==(const Zp& a, const Zp& b);

 private:
  std::uint32_t bind(const Zp& o);

  std::int64_t value_ = 0;
  std::uint32_t modulus_ = 0;
};

/// Per-scalar policy used by generic code. `fraction_free` selects the
/// elimination strategy: integer cross-multiplication with content removal
/// for the rationals, pivot normalisation for prime fields.
template <typename Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool fraction_free = true;
  static Rational from_integer(const FieldDescriptor&, long n) { return Rational(n); }
  static Rational from_rational(const FieldDescriptor&, const Rational& q) { return q; }
  static bool matches(const FieldDescriptor& f) { return f.is_rationals(); }
  /// Scales a row to a primitive integer vector with the same span.
  static void make_primitive(std::span<Rational> row);
};

template <>
struct ScalarTraits<Zp> {
  static constexpr bool fraction_free = false;
  static Zp from_integer(const FieldDescriptor& f, long n) { return Zp(n, f.characteristic()); }
  /// Throws FieldError when p divides the denominator.
  static Zp from_rational(const FieldDescriptor& f, const Rational& q);
  static bool matches(const FieldDescriptor& f) { return !f.is_rationals(); }
  static void make_primitive(std::span<Zp>) {}
};

template <typename Scalar>
Scalar make_scalar(const FieldDescriptor& f, long n) {
  return ScalarTraits<Scalar>::from_integer(f, n);
}

template <typename Scalar>
const Scalar& zero_of() {
  static const Scalar z(0);
  return z;
}

std::ostream& operator<<(std::ostream& os, const Rational& q);
std::ostream& operator<<(std::ostream& os, const Zp& a);

}  // namespace superlie

namespace Eigen {

template <>
struct NumTraits<superlie::Rational> : GenericNumTraits<superlie::Rational> {
  using Real = superlie::Rational;
  using NonInteger = superlie::Rational;
  using Literal = superlie::Rational;
  using Nested = superlie::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
  // Exact types: no precision, printed via operator<<.
  static constexpr int digits10() { return 0; }
  static constexpr int max_digits10() { return 0; }
};

template <>
struct NumTraits<superlie::Zp> : GenericNumTraits<superlie::Zp> {
  using Real = superlie::Zp;
  using NonInteger = superlie::Zp;
  using Literal = superlie::Zp;
  using Nested = superlie::Zp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
  // Exact types: no precision, printed via operator<<.
  static constexpr int digits10() { return 0; }
  static constexpr int max_digits10() { return 0; }
};

}  // namespace Eigen

#endif  // SUPERLIE_SCALAR_HPP
