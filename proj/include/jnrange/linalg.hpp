#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace jnrange {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

// Dense row-major complex matrix. Every operator in the library lives in one of these.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Complex> entries() const { return entries_; }
  std::span<Complex> entries() { return entries_; }

  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);

/// Hilbert-Schmidt product tr(a b*).
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);
Complex trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);

/// Largest entrywise modulus of a - b. Throws DimensionError on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& a, double tol = 1e-12);
bool is_unitary(const ComplexMatrix& a, double tol = 1e-10);

/// Kronecker product; the first factor carries the slow index.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Traces out the second tensor factor of an operator on C^{dim_first} (x) C^{dim_second}.
ComplexMatrix partial_trace_second(const ComplexMatrix& a, std::size_t dim_first,
                                   std::size_t dim_second);

ComplexVector mat_vec(const ComplexMatrix& a, std::span<const Complex> v);
/// <u|v>, antilinear in u.
Complex inner(std::span<const Complex> u, std::span<const Complex> v);
double norm(std::span<const Complex> v);
/// |u><v|
ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v);
ComplexVector column(const ComplexMatrix& a, std::size_t j);

/// <v|a|v>
Complex expectation(const ComplexMatrix& a, std::span<const Complex> v);

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // columns are the matching unit eigenvectors
};

/// Cyclic complex Jacobi. Rejects input that is not Hermitian within 1e-12 entrywise
/// (DomainError) and throws NumericalError if 100 sweeps do not converge.
EigenDecomposition hermitian_eigen(const ComplexMatrix& a);

/// Eigenvalues only; same algorithm and preconditions as hermitian_eigen.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

/// Small dense real matrix, used for coefficient maps.
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  std::span<const double> entries() const { return entries_; }

  std::vector<double> apply(std::span<const double> x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

/// Singular values of a real matrix, ascending.
std::vector<double> singular_values(const RealMatrix& m);

}  // namespace jnrange
