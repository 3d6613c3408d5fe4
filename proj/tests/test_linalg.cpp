#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "jnrange/errors.hpp"
#include "jnrange/linalg.hpp"
#include "test_helpers.hpp"

using namespace jnrange;
using namespace jnrange::testing;

TEST_CASE("mat_mul on Pauli matrices") {
  CHECK(mat_mul(ComplexMatrix::identity(2), sigma1()) == sigma1());
  CHECK(mat_mul(sigma1(), sigma1()) == ComplexMatrix::identity(2));
  // hand multiplication: [[0,1],[1,0]] [[0,-i],[i,0]] = [[i,0],[0,-i]]
  CHECK(mat_mul(sigma1(), sigma2()) == I * sigma3());
  CHECK_THROWS_AS(mat_mul(ComplexMatrix(2, 3), ComplexMatrix(2, 3)), DimensionError);
}

TEST_CASE("adjoint") {
  CHECK(adjoint(sigma2()) == sigma2());
  CHECK(adjoint(ComplexMatrix{{0, 1}, {0, 0}}) == ComplexMatrix{{0, 0}, {1, 0}});
  CHECK(adjoint(ComplexMatrix{{0, I}, {0, 0}}) == ComplexMatrix{{0, 0}, {-I, 0}});

  CounterRng rng(3);
  const ComplexMatrix a = random_matrix(3, 5, rng);
  CHECK(adjoint(adjoint(a)) == a);
}

TEST_CASE("Hilbert-Schmidt product") {
  CHECK(hs_inner(sigma1(), sigma1()) == Complex(2.0));
  CHECK(hs_inner(sigma1(), sigma2()) == Complex(0.0));
  CHECK(hs_inner(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) == Complex(2.0));
  CHECK_THROWS_AS(hs_inner(ComplexMatrix(2, 2), ComplexMatrix(3, 3)), DimensionError);

  CounterRng rng(11);
  for (int t = 0; t < 50; ++t) {
    const ComplexMatrix a = random_matrix(4, 4, rng);
    const Complex self = hs_inner(a, a);
    CHECK(self.imag() == doctest::Approx(0.0));
    CHECK(self.real() >= 0.0);
    CHECK(self.real() == doctest::Approx(frobenius_norm(a) * frobenius_norm(a)).epsilon(1e-13));
    // tr(a b*) computed through explicit products
    const ComplexMatrix b = random_matrix(4, 4, rng);
    CHECK(std::abs(hs_inner(a, b) - trace(a * adjoint(b))) < 1e-12);
  }
}

TEST_CASE("hermitian_eigen small cases") {
  auto e3 = hermitian_eigen(sigma3());
  CHECK(e3.eigenvalues == std::vector<double>{-1.0, 1.0});
  auto e1 = hermitian_eigen(sigma1());
  CHECK(e1.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(e1.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
  auto id = hermitian_eigen(ComplexMatrix::identity(3));
  CHECK(id.eigenvalues == std::vector<double>{1.0, 1.0, 1.0});
  CHECK(is_unitary(id.eigenvectors));

  auto zero = hermitian_eigen(ComplexMatrix(2, 2));
  CHECK(zero.eigenvalues == std::vector<double>{0.0, 0.0});
}

TEST_CASE("hermitian_eigen rejects non-Hermitian input") {
  CHECK_THROWS_AS(hermitian_eigen(ComplexMatrix{{0, 1}, {0, 0}}), DomainError);
  CHECK_THROWS_AS(hermitian_eigen(ComplexMatrix{{0, 1}, {1.0 + 1e-11, 0}}), DomainError);
  CHECK_NOTHROW(hermitian_eigen(ComplexMatrix{{0, 1}, {1.0 + 1e-13, 0}}));
  CHECK_THROWS_AS(hermitian_eigen(ComplexMatrix(2, 3)), DimensionError);
}

TEST_CASE("hermitian_eigen property: reconstruction and unitarity") {
  CounterRng rng(2024);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.below(6);
    const ComplexMatrix a = random_hermitian(n, rng);
    const auto e = hermitian_eigen(a);
    CHECK(std::is_sorted(e.eigenvalues.begin(), e.eigenvalues.end()));
    std::vector<Complex> diag(e.eigenvalues.begin(), e.eigenvalues.end());
    const ComplexMatrix rebuilt = e.eigenvectors * ComplexMatrix::diagonal(diag) * adjoint(e.eigenvectors);
    CHECK(max_abs_diff(rebuilt, a) <= 1e-10);
    CHECK(max_abs_diff(adjoint(e.eigenvectors) * e.eigenvectors, ComplexMatrix::identity(n)) <= 1e-10);
    // trace and determinism
    double sum = 0.0;
    for (double x : e.eigenvalues) sum += x;
    CHECK(sum == doctest::Approx(trace(a).real()).epsilon(1e-12));
    CHECK(hermitian_eigen(a).eigenvectors == e.eigenvectors);
  }
}

TEST_CASE("hermitian_eigen with degenerate spectrum") {
  // U diag(2,2,-1) U* for a non-trivial unitary
  CounterRng rng(5);
  const ComplexMatrix g = random_hermitian(3, rng);
  const ComplexMatrix v = hermitian_eigen(g).eigenvectors;
  const std::vector<Complex> d{2.0, 2.0, -1.0};
  const ComplexMatrix a = v * ComplexMatrix::diagonal(d) * adjoint(v);
  ComplexMatrix h = Complex(0.5) * (a + adjoint(a));
  const auto e = hermitian_eigen(h);
  CHECK(e.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(e.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(e.eigenvalues[2] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("tensor product") {
  CHECK(tensor(sigma3(), ComplexMatrix::identity(2)) ==
        ComplexMatrix::diagonal(std::vector<Complex>{1, 1, -1, -1}));
  CHECK(tensor(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) == ComplexMatrix::identity(4));
  CHECK(tensor(sigma1(), ComplexMatrix::identity(2)) ==
        ComplexMatrix{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});

  CounterRng rng(77);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_matrix(2, 2, rng);
    const auto b = random_matrix(2, 2, rng);
    const auto c = random_matrix(2, 2, rng);
    const auto d = random_matrix(2, 2, rng);
    CHECK(max_abs_diff(tensor(a, b) * tensor(c, d), tensor(a * c, b * d)) <= 1e-12);
    CHECK(max_abs_diff(tensor(a + c, b), tensor(a, b) + tensor(c, b)) <= 1e-12);
  }
}

TEST_CASE("partial trace over the second factor") {
  ComplexMatrix zero_zero(4, 4);
  zero_zero(0, 0) = 1.0;
  CHECK(partial_trace_second(zero_zero, 2, 2) == ComplexMatrix{{1, 0}, {0, 0}});

  CounterRng rng(8);
  const ComplexMatrix rho = random_density(3, rng);
  const ComplexMatrix sigma = random_density(2, rng);
  CHECK(max_abs_diff(partial_trace_second(tensor(rho, sigma), 3, 2), rho) <= 1e-14);

  const double s = 1.0 / std::sqrt(2.0);
  const std::vector<Complex> bell{s, 0, 0, s};
  CHECK(max_abs_diff(partial_trace_second(outer(bell, bell), 2, 2),
                     Complex(0.5) * ComplexMatrix::identity(2)) <= 1e-15);

  for (int t = 0; t < 20; ++t) {
    const auto a = random_matrix(6, 6, rng);
    CHECK(std::abs(trace(partial_trace_second(a, 3, 2)) - trace(a)) <= 1e-12);
  }
  CHECK_THROWS_AS(partial_trace_second(ComplexMatrix(4, 4), 2, 3), DimensionError);
}

TEST_CASE("singular values of a real matrix") {
  RealMatrix m(3, 2);
  m(0, 0) = 3.0;
  m(1, 1) = 4.0;
  const auto sv = singular_values(m);
  CHECK(sv[0] == doctest::Approx(3.0));
  CHECK(sv[1] == doctest::Approx(4.0));
}
