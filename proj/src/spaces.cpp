#include "superlie/spaces.hpp"

namespace superlie {

std::string to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::Centroid: return "centroid";
    case SpaceKind::Superderivation: return "sderiv";
    case SpaceKind::Biderivation: return "bider";
    case SpaceKind::CommutingMap: return "commuting";
  }
  return "unknown";
}

CoordinateLayout linear_layout(const std::vector<Parity>& parity, Parity degree) {
  CoordinateLayout lay;
  lay.n = static_cast<int>(parity.size());
  lay.position.assign(static_cast<std::size_t>(lay.n) * lay.n, -1);
  for (int k = 0; k < lay.n; ++k)
    for (int j = 0; j < lay.n; ++j)
      if (parity[k] == parity[j] + degree) {
        lay.position[k * lay.n + j] = lay.size();
        lay.coords.push_back({k, j, -1});
      }
  return lay;
}

CoordinateLayout bilinear_layout(const std::vector<Parity>& parity, Parity degree) {
  CoordinateLayout lay;
  lay.n = static_cast<int>(parity.size());
  lay.bilinear = true;
  lay.position.assign(static_cast<std::size_t>(lay.n) * lay.n * lay.n, -1);
  for (int i = 0; i < lay.n; ++i)
    for (int j = 0; j < lay.n; ++j)
      for (int k = 0; k < lay.n; ++k)
        if (parity[k] == parity[i] + parity[j] + degree) {
          lay.position[(i * lay.n + j) * lay.n + k] = lay.size();
          lay.coords.push_back({i, j, k});
        }
  return lay;
}

}  // namespace superlie
