#include "jnrange/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "jnrange/errors.hpp"

namespace jnrange {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kJacobiRelTol = 1e-13;
constexpr int kMaxSweeps = 100;

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("ComplexMatrix: " + std::to_string(entries_.size()) +
                         " entries for shape " + std::to_string(rows_) + "x" +
                         std::to_string(cols_));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ComplexMatrix: ragged initializer");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+=");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-=");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& z : entries_) z *= scalar;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex scalar, ComplexMatrix a) { return a *= scalar; }
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return mat_mul(a, b); }

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("mat_mul: inner dimensions " + std::to_string(a.cols()) + " and " +
                         std::to_string(b.rows()) + " differ");
  }
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
  }
  return t;
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.is_square()) throw DimensionError("hs_inner: operands must be square");
  require_same_shape(a, b, "hs_inner");
  // tr(a b*) = sum_ij a_ij conj(b_ij)
  Complex sum{};
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) sum += ea[k] * std::conj(eb[k]);
  return sum;
}

Complex trace(const ComplexMatrix& a) {
  if (!a.is_square()) throw DimensionError("trace: matrix must be square");
  Complex sum{};
  for (std::size_t i = 0; i < a.rows(); ++i) sum += a(i, i);
  return sum;
}

double frobenius_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (const auto& z : a.entries()) sum += std::norm(z);
  return std::sqrt(sum);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) worst = std::max(worst, std::abs(ea[k] - eb[k]));
  return worst;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i; j < a.cols(); ++j) {
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
    }
  }
  return true;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  if (!a.is_square()) return false;
  return max_abs_diff(adjoint(a) * a, ComplexMatrix::identity(a.rows())) <= tol;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t p = 0; p < b.rows(); ++p) {
        for (std::size_t q = 0; q < b.cols(); ++q) {
          k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
      }
    }
  }
  return k;
}

ComplexMatrix partial_trace_second(const ComplexMatrix& a, std::size_t dim_first,
                                   std::size_t dim_second) {
  const std::size_t n = dim_first * dim_second;
  if (!a.is_square() || a.rows() != n) {
    throw DimensionError("partial_trace_second: expected a " + std::to_string(n) + "x" +
                         std::to_string(n) + " matrix");
  }
  ComplexMatrix w(dim_first, dim_first);
  for (std::size_t i = 0; i < dim_first; ++i) {
    for (std::size_t j = 0; j < dim_first; ++j) {
      Complex sum{};
      for (std::size_t k = 0; k < dim_second; ++k) sum += a(i * dim_second + k, j * dim_second + k);
      w(i, j) = sum;
    }
  }
  return w;
}

ComplexVector mat_vec(const ComplexMatrix& a, std::span<const Complex> v) {
  if (a.cols() != v.size()) throw DimensionError("mat_vec: dimension mismatch");
  ComplexVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex sum{};
    for (std::size_t j = 0; j < a.cols(); ++j) sum += a(i, j) * v[j];
    out[i] = sum;
  }
  return out;
}

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
  if (u.size() != v.size()) throw DimensionError("inner: dimension mismatch");
  Complex sum{};
  for (std::size_t i = 0; i < u.size(); ++i) sum += std::conj(u[i]) * v[i];
  return sum;
}

double norm(std::span<const Complex> v) {
  double sum = 0.0;
  for (const auto& z : v) sum += std::norm(z);
  return std::sqrt(sum);
}

ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v) {
  ComplexMatrix m(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
  }
  return m;
}

ComplexVector column(const ComplexMatrix& a, std::size_t j) {
  ComplexVector c(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) c[i] = a(i, j);
  return c;
}

Complex expectation(const ComplexMatrix& a, std::span<const Complex> v) {
  return inner(v, mat_vec(a, v));
}

namespace {

// One Jacobi sweep over all (p, q) pairs. Each rotation J = D R combines the phase
// D = diag(.., 1 at p, conj(e) at q) that makes a_pq real with the real rotation R
// that annihilates it. A <- J* A J, V <- V J.
void jacobi_sweep(ComplexMatrix& a, ComplexMatrix* v) {
  const std::size_t n = a.rows();
  for (std::size_t p = 0; p + 1 < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const Complex apq = a(p, q);
      const double g = std::abs(apq);
      if (g == 0.0) continue;
      const Complex e = apq / g;
      const double app = a(p, p).real();
      const double aqq = a(q, q).real();
      const double theta = (aqq - app) / (2.0 * g);
      const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
      const double c = 1.0 / std::sqrt(t * t + 1.0);
      const double s = t * c;

      const Complex jpp = c;
      const Complex jpq = s;
      const Complex jqp = -s * std::conj(e);
      const Complex jqq = c * std::conj(e);

      for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * jpp + akq * jqp;
        a(k, q) = akp * jpq + akq * jqq;
      }
      for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
        a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
      }
      a(p, q) = 0.0;
      a(q, p) = 0.0;
      a(p, p) = a(p, p).real();
      a(q, q) = a(q, q).real();

      if (v != nullptr) {
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = (*v)(k, p);
          const Complex vkq = (*v)(k, q);
          (*v)(k, p) = vkp * jpp + vkq * jqp;
          (*v)(k, q) = vkp * jpq + vkq * jqq;
        }
      }
    }
  }
}

EigenDecomposition jacobi(const ComplexMatrix& input, bool want_vectors) {
  if (!input.is_square()) throw DimensionError("hermitian_eigen: matrix must be square");
  if (!is_hermitian(input, kHermitianTol)) {
    throw DomainError("hermitian_eigen: matrix is not Hermitian within 1e-12");
  }
  const std::size_t n = input.rows();
  ComplexMatrix a = input;
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = frobenius_norm(a);
  int sweep = 0;
  while (scale > 0.0 && off_diagonal_norm(a) >= kJacobiRelTol * scale) {
    if (sweep++ == kMaxSweeps) {
      throw NumericalError("hermitian_eigen: no convergence after 100 sweeps");
    }
    jacobi_sweep(a, want_vectors ? &v : nullptr);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition result;
  result.eigenvalues.reserve(n);
  for (std::size_t k : order) result.eigenvalues.push_back(a(k, k).real());
  if (want_vectors) {
    result.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
      for (std::size_t row = 0; row < n; ++row) result.eigenvectors(row, col) = v(row, order[col]);
    }
  }
  return result;
}

}  // namespace

EigenDecomposition hermitian_eigen(const ComplexMatrix& a) { return jacobi(a, true); }

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
  return jacobi(a, false).eigenvalues;
}

std::vector<double> RealMatrix::apply(std::span<const double> x) const {
  if (x.size() != cols_) throw DimensionError("RealMatrix::apply: dimension mismatch");
  std::vector<double> y(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  }
  return y;
}

std::vector<double> singular_values(const RealMatrix& m) {
  // eigenvalues of the Gram matrix m^T m
  ComplexMatrix gram(m.cols(), m.cols());
  for (std::size_t i = 0; i < m.cols(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k < m.rows(); ++k) sum += m(k, i) * m(k, j);
      gram(i, j) = sum;
    }
  }
  std::vector<double> values = hermitian_eigenvalues(gram);
  for (auto& x : values) x = std::sqrt(std::max(0.0, x));
  return values;
}

}  // namespace jnrange
