#ifndef SUPERLIE_TESTS_SUPPORT_HPP
#define SUPERLIE_TESTS_SUPPORT_HPP

#include "superlie/spaces.hpp"

#include <array>

namespace support {

/// centroid (even, odd), superderivation (even, odd), biderivation (even,
/// odd), commuting.
using Dims = std::array<superlie::Index, 7>;

template <typename S>
Dims space_dims(const superlie::SuperAlgebra<S>& a) {
  using superlie::Parity;
  return {superlie::centroid_space(a, Parity::Even).dim(),        superlie::centroid_space(a, Parity::Odd).dim(),
          superlie::superderivation_space(a, Parity::Even).dim(), superlie::superderivation_space(a, Parity::Odd).dim(),
          superlie::biderivation_space(a, Parity::Even).dim(),    superlie::biderivation_space(a, Parity::Odd).dim(),
          superlie::commuting_map_space(a).dim()};
}

/// psi(x, y) = -(-1)^{|x||y|} phi(y, x).
template <typename S>
superlie::GradedBilinearMap<S> skew_flip(const superlie::GradedBilinearMap<S>& phi) {
  const int n = phi.dim();
  superlie::Matrix<S> t = superlie::Matrix<S>::Zero(n * n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int s = -superlie::sign(phi.parities()[i], phi.parities()[j]);
      for (int k = 0; k < n; ++k) t(i * n + j, k) = s == 1 ? phi(j, i, k) : -phi(j, i, k);
    }
  return superlie::GradedBilinearMap<S>(phi.parities(), std::move(t), phi.degree());
}

}  // namespace support

#endif  // SUPERLIE_TESTS_SUPPORT_HPP
