#include "jnrange/states.hpp"

#include <cmath>
#include <string>

#include "jnrange/errors.hpp"

namespace jnrange {

namespace {

constexpr double kUnitTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPsdTol = 1e-10;
constexpr double kBasisTol = 1e-10;

}  // namespace

PureState::PureState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) throw DimensionError("PureState: empty amplitude vector");
  double sum = 0.0;
  for (const auto& z : amplitudes_) sum += std::norm(z);
  if (std::abs(sum - 1.0) > kUnitTol) {
    throw DomainError("PureState: squared norm " + std::to_string(sum) + " is not 1");
  }
}

PureState PureState::normalized(ComplexVector v) {
  const double n = norm(v);
  if (!(n >= 1e-12)) throw DomainError("PureState: cannot normalize a zero vector");
  for (auto& z : v) z /= n;
  return PureState(std::move(v));
}

bool DensityMatrix::is_valid(const ComplexMatrix& m) {
  if (!m.is_square() || m.empty() || !m.all_finite()) return false;
  if (!is_hermitian(m, 1e-12)) return false;
  if (std::abs(trace(m) - Complex(1.0)) > kTraceTol) return false;
  return hermitian_eigenvalues(m).front() >= -kPsdTol;
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_square() || matrix_.empty()) {
    throw DimensionError("DensityMatrix: matrix must be square and non-empty");
  }
  if (!is_valid(matrix_)) {
    throw DomainError("DensityMatrix: not Hermitian, trace one and positive semidefinite");
  }
}

DensityMatrix projector(const PureState& psi) {
  return DensityMatrix(outer(psi.amplitudes(), psi.amplitudes()));
}

PureState haar_sample(std::size_t dim, CounterRng& rng) {
  if (dim == 0) throw DomainError("haar_sample: dimension must be positive");
  ComplexVector v(dim);
  for (auto& z : v) {
    const auto [re, im] = rng.normal_pair();
    z = Complex(re, im);
  }
  return PureState::normalized(std::move(v));
}

double BlochVector::norm() const {
  double sum = 0.0;
  for (double x : components) sum += x * x;
  return std::sqrt(sum);
}

BlochVector bloch_decompose(const DensityMatrix& rho, const HermitianTuple& basis,
                            BlochConvention convention) {
  if (basis.dim() != rho.dim()) throw DimensionError("bloch_decompose: basis dimension mismatch");
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (std::abs(trace(basis[j])) > kBasisTol) {
      throw DomainError("bloch_decompose: basis operator " + std::to_string(j) +
                        " is not traceless");
    }
    for (std::size_t k = j + 1; k < basis.size(); ++k) {
      if (std::abs(hs_inner(basis[j], basis[k])) > kBasisTol) {
        throw DomainError("bloch_decompose: basis operators " + std::to_string(j) + " and " +
                          std::to_string(k) + " are not orthogonal");
      }
    }
  }
  BlochVector tau;
  tau.convention = convention;
  tau.components.reserve(basis.size());
  for (const auto& op : basis.operators()) {
    // tr(rho l) = (rho, l) because l is Hermitian
    const double value = hs_inner(rho.matrix(), op).real();
    if (convention == BlochConvention::half_radius) {
      tau.components.push_back(value / hs_inner(op, op).real());
    } else {
      tau.components.push_back(value);
    }
  }
  return tau;
}

ComplexMatrix bloch_reconstruct(const BlochVector& tau, const HermitianTuple& basis) {
  if (tau.convention != BlochConvention::half_radius) {
    throw DomainError("bloch_reconstruct: requires the half_radius convention");
  }
  if (tau.components.size() != basis.size()) {
    throw DimensionError("bloch_reconstruct: component count does not match basis");
  }
  const std::size_t n = basis.dim();
  ComplexMatrix rho = Complex(1.0 / static_cast<double>(n)) * ComplexMatrix::identity(n);
  rho += basis.combination(tau.components);
  return rho;
}

HermitianTuple pauli_basis() {
  const Complex i(0.0, 1.0);
  return HermitianTuple({
      ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
      ComplexMatrix{{0.0, -i}, {i, 0.0}},
      ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
  });
}

HermitianTuple gellmann_basis() {
  const Complex i(0.0, 1.0);
  const double r3 = 1.0 / std::sqrt(3.0);
  return HermitianTuple({
      ComplexMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}},
      ComplexMatrix{{0, -i, 0}, {i, 0, 0}, {0, 0, 0}},
      ComplexMatrix{{1, 0, 0}, {0, -1, 0}, {0, 0, 0}},
      ComplexMatrix{{0, 0, 1}, {0, 0, 0}, {1, 0, 0}},
      ComplexMatrix{{0, 0, -i}, {0, 0, 0}, {i, 0, 0}},
      ComplexMatrix{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}},
      ComplexMatrix{{0, 0, 0}, {0, 0, -i}, {0, i, 0}},
      ComplexMatrix{{r3, 0, 0}, {0, r3, 0}, {0, 0, -2 * r3}},
  });
}

HermitianTuple traceless_orthogonal_basis(std::size_t dim) {
  if (dim < 2) throw DomainError("traceless_orthogonal_basis: dimension must be at least 2");
  std::vector<ComplexMatrix> ops;
  ops.reserve(dim * dim - 1);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = j + 1; k < dim; ++k) {
      ComplexMatrix m(dim, dim);
      m(j, k) = 1.0;
      m(k, j) = 1.0;
      ops.push_back(std::move(m));
    }
  }
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = j + 1; k < dim; ++k) {
      ComplexMatrix m(dim, dim);
      m(j, k) = Complex(0.0, -1.0);
      m(k, j) = Complex(0.0, 1.0);
      ops.push_back(std::move(m));
    }
  }
  for (std::size_t l = 1; l < dim; ++l) {
    const double scale = std::sqrt(2.0 / static_cast<double>(l * (l + 1)));
    ComplexMatrix m(dim, dim);
    for (std::size_t k = 0; k < l; ++k) m(k, k) = scale;
    m(l, l) = -static_cast<double>(l) * scale;
    ops.push_back(std::move(m));
  }
  return HermitianTuple(std::move(ops));
}

}  // namespace jnrange
