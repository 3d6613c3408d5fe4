#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "jnrange/errors.hpp"
#include "jnrange/jnr.hpp"
#include "jnrange/numrange.hpp"
#include "test_helpers.hpp"

using namespace jnrange;
using namespace jnrange::testing;

namespace {

double norm3(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("jnr_map worked values") {
  const auto pauli = pauli_basis();
  CHECK(jnr_map(pauli, PureState({1.0, 0.0})) == std::vector<double>{0.0, 0.0, 1.0});

  CounterRng rng(5);
  for (int t = 0; t < 1000; ++t) {
    CHECK(std::abs(norm3(jnr_map(pauli, haar_sample(2, rng))) - 1.0) <= 1e-12);
  }

  const auto pair = random_tuple(3, 2, rng);
  const ComplexMatrix a = pair[0] + I * pair[1];
  for (int t = 0; t < 50; ++t) {
    const auto psi = haar_sample(3, rng);
    const auto x = jnr_map(pair, psi);
    CHECK(std::abs(Complex(x[0], x[1]) - expectation(a, psi.amplitudes())) <= 1e-12);
    // equals tr(rho_psi A_j)
    const auto rho = outer(psi.amplitudes(), psi.amplitudes());
    CHECK(std::abs(x[0] - trace(rho * pair[0]).real()) <= 1e-12);
  }
  CHECK_THROWS_AS(jnr_map(pauli, haar_sample(3, rng)), DimensionError);
}

TEST_CASE("jnr_sample") {
  const auto pauli = pauli_basis();
  const auto cloud = jnr_sample(pauli, 10000, 42);
  REQUIRE(cloud.size() == 10000);
  for (std::size_t i = 0; i < cloud.size(); ++i) CHECK(std::abs(norm3(cloud.point(i)) - 1.0) <= 1e-12);

  // determinism and independence from the worker count
  CHECK(jnr_sample(pauli, 10000, 42, 3).coords == cloud.coords);
  CHECK(jnr_sample(pauli, 10000, 43).coords != cloud.coords);

  // commuting diagonal tuple: points in the hull of the joint diagonal entries
  const std::vector<std::vector<double>> diag{{1.0, 0.0}, {-1.0, 2.0}, {0.5, -1.0}};
  const HermitianTuple commuting({
      ComplexMatrix::diagonal(std::vector<Complex>{1.0, -1.0, 0.5}),
      ComplexMatrix::diagonal(std::vector<Complex>{0.0, 2.0, -1.0}),
  });
  const auto pts = jnr_sample(commuting, 2000, 3);
  CounterRng rng(8);
  for (const auto& u : random_directions(2, 64, rng)) {
    double h = -1e300;
    for (const auto& d : diag) h = std::max(h, u[0] * d[0] + u[1] * d[1]);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      CHECK(u[0] * pts.point(i)[0] + u[1] * pts.point(i)[1] <= h + 1e-12);
    }
  }

  // single operator: Rayleigh quotients lie in [lambda_min, lambda_max]
  const auto h = random_hermitian(4, rng);
  const auto ev = hermitian_eigenvalues(h);
  const auto single = jnr_sample(HermitianTuple({h}), 2000, 4);
  for (double x : single.coords) {
    CHECK(x >= ev.front() - 1e-12);
    CHECK(x <= ev.back() + 1e-12);
  }
  CHECK_THROWS_AS(jnr_sample(pauli, 0, 1), DomainError);
}

TEST_CASE("jnr_support") {
  const auto pauli = pauli_basis();
  CHECK(jnr_support(pauli, std::vector<double>{0, 0, 1}) == doctest::Approx(1.0));
  CounterRng rng(6);
  for (const auto& u : random_directions(3, 100, rng)) {
    CHECK(jnr_support(pauli, u) == doctest::Approx(1.0).epsilon(1e-13));
  }
  // normalization is internal
  CHECK(jnr_support(pauli, std::vector<double>{0, 0, 7}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(jnr_support(pauli, std::vector<double>{0, 0, 0}), DomainError);
  CHECK_THROWS_AS(jnr_support(pauli, std::vector<double>{1, 0}), DimensionError);

  const auto h = random_hermitian(4, rng);
  CHECK(jnr_support(HermitianTuple({h}), std::vector<double>{1.0}) ==
        doctest::Approx(hermitian_eigenvalues(h).back()));
}

TEST_CASE("2-tuple support agrees with the numerical range of A_1 + i A_2") {
  CounterRng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + rng.below(4);
    const auto a = random_matrix(n, n, rng);
    const auto parts = hermitian_parts(a);
    CHECK(max_abs_diff(parts[0] + I * parts[1], a) <= 1e-15);
    for (std::size_t t = 0; t < 64; ++t) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(t) / 64.0;
      const std::vector<double> u{std::cos(theta), std::sin(theta)};
      CHECK(std::abs(jnr_support(parts, u) - support_value(a, theta)) <= 1e-10);
    }
  }
}

TEST_CASE("sampled points pass the hull support test") {
  CounterRng rng(14);
  for (int trial = 0; trial < 5; ++trial) {
    const auto tuple = random_tuple(3, 4, rng);
    const auto pts = jnr_sample(tuple, 500, 100 + trial);
    const auto dirs = random_directions(4, 64, rng);
    CHECK(max_support_excess(tuple, pts, dirs) <= 1e-9);
  }
}

TEST_CASE("barycenter of sampled points is tr(A_j)/N") {
  CounterRng rng(15);
  const auto tuple = random_tuple(3, 3, rng);
  const std::size_t n = 100000;
  const auto pts = jnr_sample(tuple, n, 77);
  const auto center = tuple.barycenter();
  for (std::size_t j = 0; j < 3; ++j) {
    double s = 0.0, s2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double x = pts.point(i)[j];
      s += x;
      s2 += x * x;
    }
    const double mean = s / n;
    const double se = std::sqrt((s2 - n * mean * mean) / (n - 1.0) / n);
    CHECK(std::abs(mean - center[j]) <= 4.0 * se);
  }
}

TEST_CASE("factorize worked values") {
  const auto pauli = factorize(pauli_basis());
  CHECK(pauli.rank == 3);
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(std::abs(pauli.coefficient_map(j, k) - (j == k ? std::sqrt(2.0) : 0.0)) <= 1e-14);
    }
  }
  CHECK(pauli.condition_number == doctest::Approx(1.0));

  CHECK(factorize(HermitianTuple({sigma1(), sigma1()})).rank == 1);

  const auto gm = factorize(gellmann_basis());
  CHECK(gm.rank == 8);
  CHECK(std::isfinite(gm.condition_number));

  CHECK_THROWS_AS(factorize(HermitianTuple({ComplexMatrix::identity(2), Complex(3.0) * ComplexMatrix::identity(2)})),
                  DomainError);
}

TEST_CASE("factorization identity L = M o Pr on random inputs") {
  CounterRng rng(2718);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng.below(3);
    const std::size_t m = 1 + rng.below(6);
    std::vector<ComplexMatrix> ops;
    for (std::size_t j = 0; j < m; ++j) {
      // every third tuple repeats operators to force rank deficiency
      if (trial % 3 == 0 && j > 0 && rng.below(2) == 0) {
        ops.push_back(Complex(rng.uniform() - 0.5) * ops[rng.below(j)] +
                      Complex(rng.uniform()) * ComplexMatrix::identity(n));
        ops.back() = Complex(0.5) * (ops.back() + adjoint(ops.back()));
      } else {
        ops.push_back(random_hermitian(n, rng));
      }
    }
    const HermitianTuple tuple(std::move(ops));
    const auto f = factorize(tuple);
    CHECK(f.rank <= std::min(m, n * n - 1));
    for (std::size_t a = 0; a < f.rank; ++a) {
      CHECK(std::abs(trace(f.subspace_basis[a])) <= 1e-12);
      for (std::size_t b = 0; b < f.rank; ++b) {
        CHECK(std::abs(hs_inner(f.subspace_basis[a], f.subspace_basis[b]) - Complex(a == b ? 1.0 : 0.0)) <= 1e-10);
      }
    }
    for (int k = 0; k < 20; ++k) {
      const auto x = random_hermitian(n, rng);
      const auto direct = linear_map(tuple, x);
      const auto factored = f.apply(x);
      for (std::size_t j = 0; j < m; ++j) CHECK(std::abs(direct[j] - factored[j]) <= 1e-10);
    }
  }
}

TEST_CASE("affine injectivity") {
  const auto gm = gellmann_basis();
  CounterRng rng(30);
  const auto psi = haar_sample(3, rng);
  ComplexVector rotated(psi.amplitudes().begin(), psi.amplitudes().end());
  for (auto& z : rotated) z *= std::polar(1.0, 1.234);
  const auto x = jnr_map(gm, psi);
  const auto y = jnr_map(gm, PureState(rotated));
  for (std::size_t j = 0; j < 8; ++j) CHECK(std::abs(x[j] - y[j]) <= 1e-12);

  // e_1 and e_2 map to (0,0,1,0,0,0,0,1/sqrt3) and (0,0,-1,0,0,0,0,1/sqrt3)
  const auto e1 = jnr_map(gm, PureState({1.0, 0.0, 0.0}));
  const auto e2 = jnr_map(gm, PureState({0.0, 1.0, 0.0}));
  CHECK(e1[2] == doctest::Approx(1.0));
  CHECK(e2[2] == doctest::Approx(-1.0));
  CHECK(e1[7] == doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(e2[7] == doctest::Approx(1.0 / std::sqrt(3.0)));

  const auto rep_pauli = verify_affine_injectivity(pauli_basis(), 1000, 1);
  CHECK(rep_pauli.violations == 0);
  CHECK(rep_pauli.rank == 3);
  CHECK(rep_pauli.min_distance_ratio >= rep_pauli.sigma_min - 1e-8);

  const auto rep_gm = verify_affine_injectivity(gm, 1000, 2);
  CHECK(rep_gm.violations == 0);
  CHECK(rep_gm.min_distance_ratio >= rep_gm.sigma_min - 1e-8);

  CHECK_THROWS_AS(verify_affine_injectivity(HermitianTuple({sigma1(), sigma3()}), 10, 1), HypothesisError);
}
