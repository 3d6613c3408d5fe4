#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "jnrange/hermitian_tuple.hpp"
#include "jnrange/linalg.hpp"
#include "jnrange/parallel.hpp"
#include "jnrange/states.hpp"

namespace jnrange {

/// Flat row-major cloud of points in R^m.
struct PointCloud {
  std::size_t dim = 0;
  std::vector<double> coords;

  std::size_t size() const { return dim == 0 ? 0 : coords.size() / dim; }
  std::span<const double> point(std::size_t i) const { return {coords.data() + i * dim, dim}; }
  std::span<double> point(std::size_t i) { return {coords.data() + i * dim, dim}; }
};

/// (<psi|A_1|psi>, ..., <psi|A_m|psi>).
std::vector<double> jnr_map(const HermitianTuple& tuple, const PureState& psi);

/// Images of `count` independent Haar states. Block b of kSampleBlock samples draws from
/// CounterRng::substream(seed, b); the result depends only on (tuple, count, seed).
PointCloud jnr_sample(const HermitianTuple& tuple, std::size_t count, std::uint64_t seed,
                      std::size_t workers = 1);

/// h(u) = lambda_max(sum_j u_j A_j) for u normalized to unit length; the support function
/// of conv W(A_1..A_m). Throws DomainError for a zero direction.
double jnr_support(const HermitianTuple& tuple, std::span<const double> direction);

/// Uniformly random unit directions in R^m (normalized Gaussian vectors).
std::vector<std::vector<double>> random_directions(std::size_t m, std::size_t count,
                                                   CounterRng& rng);

/// Largest excess <u, x> - h(u) of any point over the hull support in the given directions.
/// Non-positive means every point passed.
double max_support_excess(const HermitianTuple& tuple, const PointCloud& points,
                          std::span<const std::vector<double>> directions);

/// Operator factorization L = M o Pr of the linear map L(X) = (tr X A_1, ..., tr X A_m).
/// The traceless parts A_j - (tr A_j / N) I are orthonormalized by Gram-Schmidt under the
/// Hilbert-Schmidt product; L(X) = M c(X) + offsets * tr X, where c(X) are the HS
/// coordinates of the projection of X onto their span.
struct ProjectionFactorization {
  std::vector<ComplexMatrix> subspace_basis;  // orthonormal, traceless, Hermitian
  RealMatrix coefficient_map;                 // m x rank
  std::vector<double> trace_offsets;          // tr A_j / N
  std::size_t rank = 0;
  double condition_number = 0.0;              // of coefficient_map
  double sigma_min = 0.0;                     // smallest singular value of coefficient_map

  /// HS coordinates (X, E_k) of the projection onto the subspace.
  std::vector<double> project(const ComplexMatrix& x) const;
  /// M c(X) + offsets * tr X.
  std::vector<double> apply(const ComplexMatrix& x) const;
};

/// Gram-Schmidt treats a traceless part as dependent when its residual HS norm drops below
/// 1e-10 times its original norm. Throws DomainError if every traceless part vanishes.
ProjectionFactorization factorize(const HermitianTuple& tuple);

/// Direct evaluation of L(X) = (tr X A_1, ..., tr X A_m), real part.
std::vector<double> linear_map(const HermitianTuple& tuple, const ComplexMatrix& x);

struct InjectivityReport {
  std::size_t trials = 0;
  std::size_t rank = 0;
  double condition_number = 0.0;
  /// Pairs whose points coincide within tol although |<psi|phi>| != 1, plus phase-equivalent
  /// pairs whose points differ.
  std::size_t violations = 0;
  /// min over random pairs of ||x - y|| / ||rho_psi - rho_phi||_HS; bounded below by sigma_min
  /// when the tuple has full rank N^2 - 1.
  double min_distance_ratio = 0.0;
  double sigma_min = 0.0;
};

/// Samples `trials` random pairs and checks that the joint numerical range map separates
/// distinct pure states. Throws HypothesisError unless the factorization rank is N^2 - 1.
InjectivityReport verify_affine_injectivity(const HermitianTuple& tuple, std::size_t trials,
                                            std::uint64_t seed, double tol = 1e-8);

}  // namespace jnrange
