#include "superlie/scalar.hpp"

#include <limits>
#include <ostream>

namespace superlie {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldDescriptor FieldDescriptor::prime_field(std::uint64_t p) {
  if (p == 2) throw FieldError("characteristic 2 is not supported");
  if (p > std::numeric_limits<std::int32_t>::max() || !is_prime(p))
    throw FieldError("field modulus " + std::to_string(p) + " is not an odd prime");
  return FieldDescriptor(Kind::PrimeField, static_cast<std::uint32_t>(p));
}

std::string FieldDescriptor::to_string() const {
  return is_rationals() ? std::string("Q") : "F " + std::to_string(p_);
}

// ---------------------------------------------------------------- Rational

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw FieldError("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start) throw FieldError("malformed number '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw FieldError("malformed number '" + std::string(text) + "'");
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return mpz_class(digits);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(mpq_class(parse_int(text)));
  mpz_class num = parse_int(text.substr(0, slash));
  mpz_class den = parse_int(text.substr(slash + 1));
  return Rational(num, den);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

void ScalarTraits<Rational>::make_primitive(std::span<Rational> row) {
  mpz_class lcm_den = 1;
  for (const auto& q : row)
    if (!q.is_zero()) lcm_den = lcm(lcm_den, q.value().get_den());
  mpz_class content = 0;
  for (const auto& q : row) {
    if (q.is_zero()) continue;
    mpz_class scaled = q.value().get_num() * (lcm_den / q.value().get_den());
    content = gcd(content, scaled);
  }
  if (content == 0) return;
  for (auto& q : row) {
    if (q.is_zero()) continue;
    mpz_class scaled = q.value().get_num() * (lcm_den / q.value().get_den());
    q = Rational(mpq_class(mpz_class(scaled / content)));
  }
}

// ---------------------------------------------------------------------- Zp

namespace {

std::int64_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return r < 0 ? r + p : r;
}

}  // namespace

Zp::Zp(std::int64_t n, std::uint32_t p) : value_(reduce(n, p)), modulus_(p) {
  if (p == 0) throw FieldError("Zp requires a nonzero modulus");
}

std::uint32_t Zp::bind(const Zp& o) {
  if (modulus_ != 0 && o.modulus_ != 0 && modulus_ != o.modulus_)
    throw FieldError("arithmetic across different prime fields");
  if (modulus_ == 0 && o.modulus_ != 0) {
    modulus_ = o.modulus_;
    value_ = reduce(value_, modulus_);
  }
  return modulus_;
}

Zp& Zp::operator+=(const Zp& o) {
  const std::uint32_t p = bind(o);
  if (p == 0) {
    if (__builtin_add_overflow(value_, o.value_, &value_)) throw std::overflow_error("Zp overflow");
    return *this;
  }
  value_ = reduce(value_ + reduce(o.value_, p), p);
  return *this;
}

Zp& Zp::operator-=(const Zp& o) {
  const std::uint32_t p = bind(o);
  if (p == 0) {
    if (__builtin_sub_overflow(value_, o.value_, &value_)) throw std::overflow_error("Zp overflow");
    return *this;
  }
  value_ = reduce(value_ - reduce(o.value_, p), p);
  return *this;
}

Zp& Zp::operator*=(const Zp& o) {
  const std::uint32_t p = bind(o);
  if (p == 0) {
    if (__builtin_mul_overflow(value_, o.value_, &value_)) throw std::overflow_error("Zp overflow");
    return *this;
  }
  value_ = (value_ * reduce(o.value_, p)) % p;
  return *this;
}

Zp Zp::inverse() const {
  if (modulus_ == 0) {
    if (value_ == 1 || value_ == -1) return *this;
    throw FieldError("inverse of an unbound residue");
  }
  if (value_ == 0) throw std::domain_error("division by zero");
  // Fermat: a^(p-2).
  std::int64_t result = 1, base = value_, e = modulus_ - 2;
  while (e > 0) {
    if (e & 1) result = result * base % modulus_;
    base = base * base % modulus_;
    e >>= 1;
  }
  return Zp(result, modulus_);
}

bool operator==(const Zp& a, const Zp& b) {
  if (a.modulus_ == b.modulus_) return a.value_ == b.value_;
  if (a.modulus_ == 0) return reduce(a.value_, b.modulus_) == b.value_;
  if (b.modulus_ == 0) return reduce(b.value_, a.modulus_) == a.value_;
  return false;
}

Zp ScalarTraits<Zp>::from_rational(const FieldDescriptor& f, const Rational& q) {
  const std::uint32_t p = f.characteristic();
  const long num = mpz_class(q.numerator() % p).get_si();
  const long den = mpz_class(q.denominator() % p).get_si();
  if (den == 0)
    throw FieldError(std::to_string(p) + " divides the denominator of " + q.str());
  return Zp(num, p) / Zp(den, p);
}

std::ostream& operator<<(std::ostream& os, const Zp& a) { return os << a.str(); }

}  // namespace superlie
