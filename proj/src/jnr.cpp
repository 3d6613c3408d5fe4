#include "jnrange/jnr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "jnrange/errors.hpp"

namespace jnrange {

namespace {

constexpr double kDependenceTol = 1e-10;

double quadratic_form(const ComplexMatrix& a, std::span<const Complex> psi) {
  const std::size_t n = psi.size();
  Complex sum{};
  for (std::size_t i = 0; i < n; ++i) {
    Complex row{};
    for (std::size_t j = 0; j < n; ++j) row += a(i, j) * psi[j];
    sum += std::conj(psi[i]) * row;
  }
  return sum.real();
}

double euclidean_norm(std::span<const double> x) {
  double sum = 0.0;
  for (double v : x) sum += v * v;
  return std::sqrt(sum);
}

}  // namespace

std::vector<double> jnr_map(const HermitianTuple& tuple, const PureState& psi) {
  if (psi.dim() != tuple.dim()) {
    throw DimensionError("jnr_map: state dimension " + std::to_string(psi.dim()) +
                         " does not match operator dimension " + std::to_string(tuple.dim()));
  }
  std::vector<double> x;
  x.reserve(tuple.size());
  for (const auto& op : tuple.operators()) x.push_back(quadratic_form(op, psi.amplitudes()));
  return x;
}

PointCloud jnr_sample(const HermitianTuple& tuple, std::size_t count, std::uint64_t seed,
                      std::size_t workers) {
  if (count == 0) throw DomainError("jnr_sample: count must be positive");
  const std::size_t m = tuple.size();
  PointCloud cloud{m, std::vector<double>(count * m)};
  const std::size_t blocks = (count + kSampleBlock - 1) / kSampleBlock;
  parallel_blocks(blocks, workers, [&](std::size_t b) {
    CounterRng rng = CounterRng::substream(seed, b);
    const std::size_t end = std::min(count, (b + 1) * kSampleBlock);
    for (std::size_t i = b * kSampleBlock; i < end; ++i) {
      const PureState psi = haar_sample(tuple.dim(), rng);
      auto out = cloud.point(i);
      for (std::size_t j = 0; j < m; ++j) out[j] = quadratic_form(tuple[j], psi.amplitudes());
    }
  });
  return cloud;
}

double jnr_support(const HermitianTuple& tuple, std::span<const double> direction) {
  if (direction.size() != tuple.size()) {
    throw DimensionError("jnr_support: direction has " + std::to_string(direction.size()) +
                         " components, tuple has " + std::to_string(tuple.size()));
  }
  const double len = euclidean_norm(direction);
  if (!(len > 0.0)) throw DomainError("jnr_support: direction must be nonzero");
  std::vector<double> unit(direction.begin(), direction.end());
  for (double& u : unit) u /= len;
  return hermitian_eigenvalues(tuple.combination(unit)).back();
}

std::vector<std::vector<double>> random_directions(std::size_t m, std::size_t count,
                                                   CounterRng& rng) {
  std::vector<std::vector<double>> dirs;
  dirs.reserve(count);
  while (dirs.size() < count) {
    std::vector<double> u(m);
    for (std::size_t j = 0; j < m; j += 2) {
      const auto [a, b] = rng.normal_pair();
      u[j] = a;
      if (j + 1 < m) u[j + 1] = b;
    }
    const double len = euclidean_norm(u);
    if (len < 1e-12) continue;
    for (double& x : u) x /= len;
    dirs.push_back(std::move(u));
  }
  return dirs;
}

double max_support_excess(const HermitianTuple& tuple, const PointCloud& points,
                          std::span<const std::vector<double>> directions) {
  if (points.dim != tuple.size()) throw DimensionError("max_support_excess: dimension mismatch");
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& u : directions) {
    const double h = jnr_support(tuple, u);
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto x = points.point(i);
      double dot = 0.0;
      for (std::size_t j = 0; j < x.size(); ++j) dot += u[j] * x[j];
      worst = std::max(worst, dot - h);
    }
  }
  return worst;
}

std::vector<double> linear_map(const HermitianTuple& tuple, const ComplexMatrix& x) {
  if (!x.is_square() || x.rows() != tuple.dim()) throw DimensionError("linear_map: dimension mismatch");
  std::vector<double> y;
  y.reserve(tuple.size());
  // tr(X A) = (X, A*) = (X, A) for Hermitian A
  for (const auto& op : tuple.operators()) y.push_back(hs_inner(x, op).real());
  return y;
}

std::vector<double> ProjectionFactorization::project(const ComplexMatrix& x) const {
  std::vector<double> c;
  c.reserve(subspace_basis.size());
  for (const auto& e : subspace_basis) c.push_back(hs_inner(x, e).real());
  return c;
}

std::vector<double> ProjectionFactorization::apply(const ComplexMatrix& x) const {
  std::vector<double> y = coefficient_map.apply(project(x));
  const double tr = trace(x).real();
  for (std::size_t j = 0; j < y.size(); ++j) y[j] += trace_offsets[j] * tr;
  return y;
}

ProjectionFactorization factorize(const HermitianTuple& tuple) {
  const std::size_t n = tuple.dim();
  const std::size_t m = tuple.size();
  const ComplexMatrix id = ComplexMatrix::identity(n);

  ProjectionFactorization f;
  f.trace_offsets = tuple.barycenter();

  std::vector<ComplexMatrix> centered;
  centered.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    centered.push_back(tuple[j] - Complex(f.trace_offsets[j]) * id);
  }

  // modified Gram-Schmidt
  for (const auto& a : centered) {
    const double original = frobenius_norm(a);
    if (original == 0.0) continue;
    ComplexMatrix residual = a;
    for (const auto& e : f.subspace_basis) {
      residual -= Complex(hs_inner(residual, e).real()) * e;
    }
    const double rest = frobenius_norm(residual);
    if (rest < kDependenceTol * original) continue;
    residual *= Complex(1.0 / rest);
    f.subspace_basis.push_back(std::move(residual));
  }
  f.rank = f.subspace_basis.size();
  if (f.rank == 0) {
    throw DomainError("factorize: every operator is a multiple of the identity");
  }

  f.coefficient_map = RealMatrix(m, f.rank);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < f.rank; ++k) {
      f.coefficient_map(j, k) = hs_inner(centered[j], f.subspace_basis[k]).real();
    }
  }
  const auto sv = singular_values(f.coefficient_map);
  f.sigma_min = sv.front();
  f.condition_number = sv.front() > 0.0 ? sv.back() / sv.front()
                                        : std::numeric_limits<double>::infinity();
  return f;
}

InjectivityReport verify_affine_injectivity(const HermitianTuple& tuple, std::size_t trials,
                                            std::uint64_t seed, double tol) {
  const auto f = factorize(tuple);
  const std::size_t n = tuple.dim();
  if (f.rank != n * n - 1) {
    throw HypothesisError("verify_affine_injectivity: rank " + std::to_string(f.rank) +
                          " is below N^2 - 1 = " + std::to_string(n * n - 1));
  }
  InjectivityReport report;
  report.trials = trials;
  report.rank = f.rank;
  report.condition_number = f.condition_number;
  report.sigma_min = f.sigma_min;
  report.min_distance_ratio = std::numeric_limits<double>::infinity();

  CounterRng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const PureState psi = haar_sample(n, rng);
    const PureState phi = haar_sample(n, rng);
    const auto x = jnr_map(tuple, psi);

    // same ray, different phase: must map to the same point
    const Complex phase = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
    ComplexVector rotated(psi.amplitudes().begin(), psi.amplitudes().end());
    for (auto& z : rotated) z *= phase;
    const auto x_rot = jnr_map(tuple, PureState::normalized(std::move(rotated)));
    double d_rot = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) d_rot += (x[j] - x_rot[j]) * (x[j] - x_rot[j]);
    if (std::sqrt(d_rot) > tol) ++report.violations;

    const auto y = jnr_map(tuple, phi);
    double d2 = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) d2 += (x[j] - y[j]) * (x[j] - y[j]);
    const double distance = std::sqrt(d2);
    const double overlap = std::abs(inner(psi.amplitudes(), phi.amplitudes()));
    if (distance <= tol && std::abs(1.0 - overlap) > tol) ++report.violations;

    // ||rho_psi - rho_phi||_HS^2 = 2 - 2 |<psi|phi>|^2
    const double state_distance = std::sqrt(std::max(0.0, 2.0 - 2.0 * overlap * overlap));
    if (state_distance > 1e-6) {
      report.min_distance_ratio = std::min(report.min_distance_ratio, distance / state_distance);
    }
  }
  return report;
}

}  // namespace jnrange
