#include "jnrange/hermitian_tuple.hpp"

#include <string>

#include "jnrange/errors.hpp"

namespace jnrange {

HermitianTuple::HermitianTuple(std::vector<ComplexMatrix> operators)
    : operators_(std::move(operators)) {
  if (operators_.empty()) throw DimensionError("HermitianTuple: at least one operator required");
  dim_ = operators_.front().rows();
  for (std::size_t j = 0; j < operators_.size(); ++j) {
    const auto& op = operators_[j];
    if (!op.is_square() || op.rows() != dim_) {
      throw DimensionError("HermitianTuple: operator " + std::to_string(j) +
                           " does not share dimension " + std::to_string(dim_));
    }
    if (!is_hermitian(op)) {
      throw DomainError("HermitianTuple: operator " + std::to_string(j) + " is not Hermitian");
    }
  }
}

ComplexMatrix HermitianTuple::combination(std::span<const double> weights) const {
  if (weights.size() != operators_.size()) {
    throw DimensionError("HermitianTuple::combination: expected " +
                         std::to_string(operators_.size()) + " weights");
  }
  ComplexMatrix sum(dim_, dim_);
  for (std::size_t j = 0; j < operators_.size(); ++j) {
    if (weights[j] != 0.0) sum += Complex(weights[j]) * operators_[j];
  }
  return sum;
}

std::vector<double> HermitianTuple::barycenter() const {
  std::vector<double> center;
  center.reserve(operators_.size());
  for (const auto& op : operators_) center.push_back(trace(op).real() / static_cast<double>(dim_));
  return center;
}

HermitianTuple hermitian_parts(const ComplexMatrix& a) {
  if (!a.is_square()) throw DimensionError("hermitian_parts: matrix must be square");
  const ComplexMatrix a_star = adjoint(a);
  ComplexMatrix re = Complex(0.5) * (a + a_star);
  ComplexMatrix im = Complex(0.0, -0.5) * (a - a_star);
  return HermitianTuple({std::move(re), std::move(im)});
}

}  // namespace jnrange
