#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "jnrange/linalg.hpp"
#include "jnrange/states.hpp"

namespace jnrange {

inline constexpr std::size_t kDefaultNumAngles = 1024;

struct SupportPoint {
  double value = 0.0;  // h(theta) = lambda_max((e^{-i theta} A + e^{i theta} A*) / 2)
  PureState maximizer;
};

/// Support function of the numerical range W(A) in direction e^{i theta}, with a unit
/// top eigenvector whose expectation <psi|A|psi> lies on the boundary of W(A).
SupportPoint support_function(const ComplexMatrix& a, double theta);

/// Support value only.
double support_value(const ComplexMatrix& a, double theta);

/// Discretized support-function sweep of W(A) at theta_t = 2 pi t / num_angles.
struct RangeBoundary {
  std::vector<double> angles;
  std::vector<double> support_values;
  std::vector<Complex> boundary_points;

  std::size_t size() const { return angles.size(); }
};

/// Throws DomainError if num_angles < 3.
RangeBoundary boundary(const ComplexMatrix& a, std::size_t num_angles = kDefaultNumAngles);

/// True iff Re(e^{-i theta_t} z) <= h(theta_t) + tol at every tabulated angle.
bool contains(const RangeBoundary& boundary, Complex z, double tol = 1e-9);

/// Closed-form numerical range of a 2 x 2 matrix: an ellipse with the eigenvalues as foci.
struct EllipseParams {
  Complex center;
  double semi_major = 0.0;
  double semi_minor = 0.0;
  double tilt = 0.0;  // direction of the major axis, radians
  std::pair<Complex, Complex> foci;
};

/// Throws DimensionError unless a is 2 x 2, NumericalError if the squared minor semi-axis
/// comes out below -1e-12.
EllipseParams ellipse_2x2(const ComplexMatrix& a);

/// Support function of the (filled) ellipse in direction e^{i theta}.
double ellipse_support(const EllipseParams& e, double theta);

/// Boundary point of the ellipse at parameter t: center + e^{i tilt}(a cos t + i b sin t).
Complex ellipse_point(const EllipseParams& e, double t);

}  // namespace jnrange
