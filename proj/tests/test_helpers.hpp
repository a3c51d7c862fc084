#pragma once

#include <random>

#include "mubquant/qcore.hpp"

namespace mubq::testing {

inline Ket random_pure_state(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  return Ket(v / v.norm());
}

/// Ginibre-induced random mixed state.
inline DensityMatrix random_density(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  }
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + Matrix(rho.adjoint()));  // scrub rounding asymmetry
  return DensityMatrix(std::move(rho));
}

inline Ket random_product_state(int d, std::mt19937_64& rng) {
  return tensor(random_pure_state(d, rng), random_pure_state(d, rng));
}

}  // namespace mubq::testing
