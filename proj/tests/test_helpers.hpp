#pragma once

#include <cmath>
#include <cstddef>

#include "jnrange/hermitian_tuple.hpp"
#include "jnrange/linalg.hpp"
#include "jnrange/rng.hpp"

namespace jnrange::testing {

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, CounterRng& rng) {
  ComplexMatrix m(rows, cols);
  for (auto& z : m.entries()) {
    const auto [re, im] = rng.normal_pair();
    z = Complex(re, im);
  }
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, CounterRng& rng) {
  const ComplexMatrix g = random_matrix(n, n, rng);
  ComplexMatrix h = Complex(0.5) * (g + adjoint(g));
  for (std::size_t i = 0; i < n; ++i) h(i, i) = h(i, i).real();
  return h;
}

inline HermitianTuple random_tuple(std::size_t n, std::size_t m, CounterRng& rng) {
  std::vector<ComplexMatrix> ops;
  for (std::size_t j = 0; j < m; ++j) ops.push_back(random_hermitian(n, rng));
  return HermitianTuple(std::move(ops));
}

inline ComplexMatrix random_density(std::size_t n, CounterRng& rng) {
  const ComplexMatrix g = random_matrix(n, n, rng);
  ComplexMatrix rho = g * adjoint(g);
  rho *= Complex(1.0 / trace(rho).real());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) rho(j, i) = std::conj(rho(i, j));
    rho(i, i) = rho(i, i).real();
  }
  return rho;
}

inline const Complex I{0.0, 1.0};

inline ComplexMatrix sigma1() { return ComplexMatrix{{0, 1}, {1, 0}}; }
inline ComplexMatrix sigma2() { return ComplexMatrix{{0, -I}, {I, 0}}; }
inline ComplexMatrix sigma3() { return ComplexMatrix{{1, 0}, {0, -1}}; }

}  // namespace jnrange::testing
