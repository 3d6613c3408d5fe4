#include "jnrange/numrange.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "jnrange/errors.hpp"

namespace jnrange {

namespace {

// (e^{-i theta} A + e^{i theta} A*) / 2, symmetrized entrywise so it is exactly Hermitian.
ComplexMatrix rotated_real_part(const ComplexMatrix& a, double theta) {
  if (!a.is_square()) throw DimensionError("numerical range: matrix must be square");
  const Complex phase = std::polar(1.0, -theta);
  const std::size_t n = a.rows();
  ComplexMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = (phase * a(i, i)).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex value = 0.5 * (phase * a(i, j) + std::conj(phase * a(j, i)));
      h(i, j) = value;
      h(j, i) = std::conj(value);
    }
  }
  return h;
}

}  // namespace

SupportPoint support_function(const ComplexMatrix& a, double theta) {
  const auto eig = hermitian_eigen(rotated_real_part(a, theta));
  const std::size_t top = eig.eigenvalues.size() - 1;
  return {eig.eigenvalues[top], PureState::normalized(column(eig.eigenvectors, top))};
}

double support_value(const ComplexMatrix& a, double theta) {
  return hermitian_eigenvalues(rotated_real_part(a, theta)).back();
}

RangeBoundary boundary(const ComplexMatrix& a, std::size_t num_angles) {
  if (num_angles < 3) throw DomainError("boundary: at least 3 angles required");
  RangeBoundary b;
  b.angles.reserve(num_angles);
  b.support_values.reserve(num_angles);
  b.boundary_points.reserve(num_angles);
  for (std::size_t t = 0; t < num_angles; ++t) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(t) /
                         static_cast<double>(num_angles);
    auto sp = support_function(a, theta);
    b.angles.push_back(theta);
    b.support_values.push_back(sp.value);
    b.boundary_points.push_back(expectation(a, sp.maximizer.amplitudes()));
  }
  return b;
}

bool contains(const RangeBoundary& boundary, Complex z, double tol) {
  if (tol < 0.0) throw DomainError("contains: tolerance must be non-negative");
  for (std::size_t t = 0; t < boundary.size(); ++t) {
    const double projection = (std::polar(1.0, -boundary.angles[t]) * z).real();
    if (projection > boundary.support_values[t] + tol) return false;
  }
  return true;
}

EllipseParams ellipse_2x2(const ComplexMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2) throw DimensionError("ellipse_2x2: matrix must be 2x2");
  const Complex half_trace = 0.5 * (a(0, 0) + a(1, 1));
  const Complex det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  const Complex root = std::sqrt(half_trace * half_trace - det);
  const Complex l1 = half_trace + root;
  const Complex l2 = half_trace - root;

  double b2 = (frobenius_norm(a) * frobenius_norm(a) - std::norm(l1) - std::norm(l2)) / 4.0;
  if (b2 < 0.0) {
    if (b2 < -1e-12) throw NumericalError("ellipse_2x2: negative squared minor semi-axis");
    b2 = 0.0;
  }
  const double focal = std::abs(root);  // half the distance between the foci

  EllipseParams e;
  e.center = half_trace;
  e.semi_minor = std::sqrt(b2);
  e.semi_major = std::sqrt(b2 + focal * focal);
  e.tilt = focal > 0.0 ? std::arg(root) : 0.0;
  e.foci = {l1, l2};
  return e;
}

double ellipse_support(const EllipseParams& e, double theta) {
  const double c = std::cos(theta - e.tilt);
  const double s = std::sin(theta - e.tilt);
  return (std::polar(1.0, -theta) * e.center).real() +
         std::sqrt(e.semi_major * e.semi_major * c * c + e.semi_minor * e.semi_minor * s * s);
}

Complex ellipse_point(const EllipseParams& e, double t) {
  return e.center + std::polar(1.0, e.tilt) * Complex(e.semi_major * std::cos(t),
                                                      e.semi_minor * std::sin(t));
}

}  // namespace jnrange
