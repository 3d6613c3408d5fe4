#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "jnrange/errors.hpp"
#include "jnrange/numrange.hpp"
#include "test_helpers.hpp"

using namespace jnrange;
using namespace jnrange::testing;

namespace {

const ComplexMatrix kNilpotent{{0, 1}, {0, 0}};

double angle(std::size_t t, std::size_t n) {
  return 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(n);
}

// max over a finite point set of Re(e^{-i theta} z): the support of its convex hull
double hull_support(const std::vector<Complex>& pts, double theta) {
  double best = -1e300;
  for (const auto& z : pts) best = std::max(best, (std::polar(1.0, -theta) * z).real());
  return best;
}

}  // namespace

TEST_CASE("support_function worked values") {
  const auto s3 = support_function(sigma3(), 0.0);
  CHECK(s3.value == doctest::Approx(1.0));
  CHECK(std::abs(s3.maximizer[0]) == doctest::Approx(1.0));
  CHECK(std::abs(s3.maximizer[1]) == doctest::Approx(0.0));

  for (double theta : {0.0, 0.3, 1.0, 2.5, 4.0, 6.0}) {
    CHECK(support_function(kNilpotent, theta).value == doctest::Approx(0.5).epsilon(1e-14));
  }

  const ComplexMatrix normal = ComplexMatrix::diagonal(std::vector<Complex>{1.0, I, -1.0});
  CHECK(support_function(normal, 0.0).value == doctest::Approx(1.0));
}

TEST_CASE("boundary of the nilpotent 2x2 is the radius-1/2 circle") {
  const auto b = boundary(kNilpotent, 360);
  REQUIRE(b.size() == 360);
  for (std::size_t t = 0; t < b.size(); ++t) {
    CHECK(b.angles[t] == doctest::Approx(angle(t, 360)));
    CHECK(std::abs(std::abs(b.boundary_points[t]) - 0.5) <= 1e-9);
  }
  CHECK_THROWS_AS(boundary(kNilpotent, 2), DomainError);
}

TEST_CASE("RangeBoundary invariants hold for random matrices") {
  CounterRng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng.below(4);
    const auto m = random_matrix(n, n, rng);
    const auto b = boundary(m, 128);
    for (std::size_t t = 0; t < b.size(); ++t) {
      const Complex z = b.boundary_points[t];
      CHECK((std::polar(1.0, -b.angles[t]) * z).real() >= b.support_values[t] - 1e-9);
      CHECK(contains(b, z, 1e-9));
    }
  }
}

TEST_CASE("Hermitian matrix: boundary on the real segment") {
  const auto b = boundary(ComplexMatrix::diagonal(std::vector<Complex>{0.0, 1.0}), 64);
  for (const auto& z : b.boundary_points) {
    CHECK(std::abs(z.imag()) <= 1e-15);
    CHECK(z.real() >= -1e-15);
    CHECK(z.real() <= 1.0 + 1e-15);
  }
}

TEST_CASE("normal matrices: range is the hull of the spectrum") {
  const std::vector<Complex> eig{1.0, I, Complex(-1, -1)};
  const ComplexMatrix d = ComplexMatrix::diagonal(eig);
  CounterRng rng(21);
  for (int trial = 0; trial < 5; ++trial) {
    // rotate into a non-diagonal basis: U D U* is still normal with the same spectrum
    const auto v = hermitian_eigen(random_hermitian(3, rng)).eigenvectors;
    const ComplexMatrix a = v * d * adjoint(v);
    const auto b = boundary(a, 1024);
    for (std::size_t t = 0; t < b.size(); ++t) {
      CHECK(std::abs(b.support_values[t] - hull_support(eig, b.angles[t])) <= 1e-8);
    }
    // the boundary points lie in the spectral hull and reach its support in every direction
    for (std::size_t t = 0; t < 256; ++t) {
      const double theta = angle(t, 256) + 0.001;
      CHECK(hull_support(b.boundary_points, theta) <= hull_support(eig, theta) + 1e-8);
      CHECK(hull_support(b.boundary_points, theta) >= hull_support(eig, theta) - 1e-8);
    }
  }
}

TEST_CASE("contains") {
  const auto disc = boundary(kNilpotent, 1024);
  CHECK(contains(disc, 0.0, 1e-9));
  CHECK(contains(disc, 0.5, 1e-9));
  CHECK_FALSE(contains(disc, 0.51, 1e-9));
  CHECK_THROWS_AS(contains(disc, 0.0, -1.0), DomainError);
}

TEST_CASE("Toeplitz-Hausdorff: midpoints of range points stay in the range") {
  CounterRng rng(4242);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng.below(4);
    const auto a = random_matrix(n, n, rng);
    const auto b = boundary(a, 1024);
    for (int k = 0; k < 50; ++k) {
      const auto psi = haar_sample(n, rng);
      const auto phi = haar_sample(n, rng);
      const Complex mid = 0.5 * (expectation(a, psi.amplitudes()) + expectation(a, phi.amplitudes()));
      CHECK(contains(b, mid, 1e-8));
    }
  }
}

TEST_CASE("translation and scaling covariance") {
  CounterRng rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + rng.below(3);
    const auto a = random_matrix(n, n, rng);
    const double alpha = 0.1 + 3.0 * rng.uniform();
    const Complex beta(rng.normal_pair().first, rng.normal_pair().second);
    const ComplexMatrix moved = Complex(alpha) * a + beta * ComplexMatrix::identity(n);
    for (std::size_t t = 0; t < 64; ++t) {
      const double theta = angle(t, 64);
      const double expected = alpha * support_value(a, theta) + (std::polar(1.0, -theta) * beta).real();
      CHECK(std::abs(support_value(moved, theta) - expected) <= 1e-10);
    }
  }
}

TEST_CASE("ellipse_2x2 worked values") {
  const auto circle = ellipse_2x2(kNilpotent);
  CHECK(std::abs(circle.center) == 0.0);
  CHECK(circle.semi_major == doctest::Approx(0.5));
  CHECK(circle.semi_minor == doctest::Approx(0.5));

  const auto segment = ellipse_2x2(ComplexMatrix::diagonal(std::vector<Complex>{0.0, 1.0}));
  CHECK(segment.semi_minor == 0.0);
  CHECK(segment.semi_major == doctest::Approx(0.5));
  const bool foci_ok = (std::abs(segment.foci.first - 1.0) < 1e-15 && std::abs(segment.foci.second) < 1e-15) ||
                       (std::abs(segment.foci.second - 1.0) < 1e-15 && std::abs(segment.foci.first) < 1e-15);
  CHECK(foci_ok);

  CHECK_THROWS_AS(ellipse_2x2(ComplexMatrix::identity(3)), DimensionError);
}

TEST_CASE("ellipse_2x2 of [[0, 0.75], [0.25, 0]] against a dense support sweep") {
  const ComplexMatrix b2{{0, 0.75}, {0.25, 0}};
  // Oracle: for a centered ellipse the support function ranges over [b, a].
  double a_oracle = 0.0;
  double b_oracle = 1e300;
  for (std::size_t t = 0; t < 4096; ++t) {
    const double h = support_value(b2, angle(t, 4096));
    a_oracle = std::max(a_oracle, h);
    b_oracle = std::min(b_oracle, h);
  }
  CHECK(a_oracle == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(b_oracle == doctest::Approx(0.25).epsilon(1e-9));

  const auto e = ellipse_2x2(b2);
  CHECK(std::abs(e.center) <= 1e-15);
  CHECK(std::abs(e.semi_major - 0.5) <= 1e-12);
  CHECK(std::abs(e.semi_minor - 0.25) <= 1e-12);
  CHECK(std::abs(e.semi_major - a_oracle) <= 1e-8);
  CHECK(std::abs(e.semi_minor - b_oracle) <= 1e-8);
}

TEST_CASE("ellipse_2x2 property: agrees with the support-function boundary") {
  CounterRng rng(100);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_matrix(2, 2, rng);
    const auto e = ellipse_2x2(a);
    CHECK(e.semi_major >= e.semi_minor);
    CHECK(e.semi_minor >= 0.0);
    const double focal = std::abs(e.foci.first - e.foci.second);
    CHECK(std::abs(focal - 2.0 * std::sqrt(e.semi_major * e.semi_major - e.semi_minor * e.semi_minor)) <= 1e-10);
    for (std::size_t t = 0; t < 128; ++t) {
      const double theta = angle(t, 128);
      CHECK(std::abs(ellipse_support(e, theta) - support_value(a, theta)) <= 1e-8);
    }
    // points of the ellipse are range points
    const auto b = boundary(a, 256);
    for (int k = 0; k < 16; ++k) CHECK(contains(b, ellipse_point(e, 0.4 * k), 1e-8));
  }
}
