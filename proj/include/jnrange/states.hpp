#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "jnrange/hermitian_tuple.hpp"
#include "jnrange/linalg.hpp"
#include "jnrange/rng.hpp"

namespace jnrange {

/// Unit vector in C^N.
class PureState {
 public:
  /// Requires sum |a_i|^2 = 1 within 1e-12 (DomainError otherwise).
  explicit PureState(ComplexVector amplitudes);

  /// Scales v to unit length. Throws DomainError if ||v|| < 1e-12.
  static PureState normalized(ComplexVector v);

  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

 private:
  ComplexVector amplitudes_;
};

/// Hermitian, trace one, positive semidefinite (min eigenvalue >= -1e-10).
class DensityMatrix {
 public:
  /// Validates all invariants; throws DomainError on failure.
  explicit DensityMatrix(ComplexMatrix matrix);

  std::size_t dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

  /// Tolerant check of the density-matrix invariants without throwing.
  static bool is_valid(const ComplexMatrix& m);

 private:
  ComplexMatrix matrix_;
};

/// |psi><psi|
DensityMatrix projector(const PureState& psi);

/// Haar-distributed unit vector: 2N Box-Muller normals form N complex amplitudes,
/// which are then normalized.
PureState haar_sample(std::size_t dim, CounterRng& rng);

enum class BlochConvention {
  /// tau_j = tr(rho l_j) / tr(l_j^2); rho = I/N + sum tau_j l_j. Qubit norms are <= 1/2.
  half_radius,
  /// tau_j = tr(rho l_j). With the Pauli basis the qubit ball has radius 1.
  expectation,
};

struct BlochVector {
  std::vector<double> components;
  BlochConvention convention = BlochConvention::half_radius;

  double norm() const;
};

/// Coordinates of rho in a traceless, pairwise Hilbert-Schmidt-orthogonal basis.
/// Throws DomainError if a basis element is not traceless (|tr| > 1e-10) or the
/// Gram matrix has off-diagonals above 1e-10.
BlochVector bloch_decompose(const DensityMatrix& rho, const HermitianTuple& basis,
                            BlochConvention convention);

/// I/N + sum tau_j l_j for a half_radius vector.
ComplexMatrix bloch_reconstruct(const BlochVector& tau, const HermitianTuple& basis);

HermitianTuple pauli_basis();
HermitianTuple gellmann_basis();

/// Generalized Gell-Mann basis of the N^2 - 1 traceless Hermitian N x N matrices with
/// tr(l_j l_k) = 2 delta_jk: symmetric off-diagonal pairs, then antisymmetric pairs,
/// then the diagonal ladder. N = 2 yields (sigma_1, sigma_2, sigma_3).
HermitianTuple traceless_orthogonal_basis(std::size_t dim);

}  // namespace jnrange
