#include "superlie/structure.hpp"

namespace superlie {

std::string to_string(SimplicityStatus s) {
  switch (s) {
    case SimplicityStatus::Simple: return "simple";
    case SimplicityStatus::NotSimple: return "not_simple";
    case SimplicityStatus::Unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(CertificateMethod m) {
  switch (m) {
    case CertificateMethod::None: return "none";
    case CertificateMethod::ExhaustiveFp: return "exhaustive_fp";
    case CertificateMethod::ReductionFromQ: return "reduction_mod_p";
  }
  return "none";
}

std::optional<std::uint64_t> line_count(std::uint32_t p, int n) {
  // (p^n - 1) / (p - 1) = 1 + p + ... + p^(n-1)
  std::uint64_t total = 0, power = 1;
  for (int t = 0; t < n; ++t) {
    if (__builtin_add_overflow(total, power, &total)) return std::nullopt;
    if (t + 1 < n && __builtin_mul_overflow(power, static_cast<std::uint64_t>(p), &power)) return std::nullopt;
  }
  return total;
}

std::optional<std::uint32_t> good_prime(const SuperAlgebra<Rational>& a) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    bool ok = true;
    for (const auto& c : a.constants())
      if (c.value.denominator() % p == 0) ok = false;
    if (ok) return p;
  }
  return std::nullopt;
}

}  // namespace superlie
