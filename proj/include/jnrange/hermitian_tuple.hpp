#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "jnrange/linalg.hpp"

namespace jnrange {

/// Ordered list of m Hermitian N x N operators A_1..A_m.
class HermitianTuple {
 public:
  /// Throws DomainError if an operator is not Hermitian within 1e-12, DimensionError if
  /// the operators disagree in size or the list is empty.
  explicit HermitianTuple(std::vector<ComplexMatrix> operators);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return operators_.size(); }
  const ComplexMatrix& operator[](std::size_t j) const { return operators_[j]; }
  std::span<const ComplexMatrix> operators() const { return operators_; }

  /// Sum_j u_j A_j.
  ComplexMatrix combination(std::span<const double> weights) const;

  /// (tr A_1 / N, ..., tr A_m / N), the mean of the joint numerical shadow.
  std::vector<double> barycenter() const;

 private:
  std::size_t dim_ = 0;
  std::vector<ComplexMatrix> operators_;
};

/// Hermitian and anti-Hermitian parts (A + A*)/2 and (A - A*)/(2i), so A = A_1 + i A_2.
HermitianTuple hermitian_parts(const ComplexMatrix& a);

}  // namespace jnrange
