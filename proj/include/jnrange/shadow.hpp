#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "jnrange/hermitian_tuple.hpp"
#include "jnrange/jnr.hpp"
#include "jnrange/linalg.hpp"

namespace jnrange {

/// Monte-Carlo representation of the joint numerical shadow: the push-forward of the Haar
/// measure on unit vectors under the joint numerical range map, kept as raw samples.
struct ShadowEstimate {
  std::size_t dimension_m = 0;
  PointCloud samples;
  std::uint64_t seed = 0;
  std::size_t sample_count = 0;
};

ShadowEstimate estimate_shadow(const HermitianTuple& tuple, std::size_t count, std::uint64_t seed,
                               std::size_t workers = 1);

/// Wraps an existing point cloud (e.g. a point mass or a precomputed sample).
ShadowEstimate shadow_from_points(PointCloud points, std::uint64_t seed = 0);

struct MomentEntry {
  std::vector<unsigned> index;  // (k_1, ..., k_m)
  double estimate = 0.0;
  double std_error = 0.0;       // sample standard deviation / sqrt(n)
};

/// Empirical moments for every multi-index with total degree <= max_total_degree, ordered by
/// total degree and then lexicographically descending (so (1,0,0) precedes (0,1,0)).
struct MomentTable {
  std::size_t sample_count = 0;
  std::vector<MomentEntry> entries;

  /// nullptr if the index was not tabulated.
  const MomentEntry* find(const std::vector<unsigned>& index) const;
  const MomentEntry& at(const std::vector<unsigned>& index) const;
};

MomentTable moments(const ShadowEstimate& estimate, unsigned max_total_degree);

/// Rectangular-grid histogram for m <= 3.
struct Histogram {
  std::vector<std::pair<double, double>> bounds;  // per axis
  std::size_t bins_per_axis = 0;
  std::vector<std::uint64_t> counts;              // row-major, first axis slowest
  std::uint64_t total = 0;                        // samples binned
  std::uint64_t outside = 0;                      // samples outside explicit bounds

  std::vector<double> normalized() const;
};

/// Bounds default to the sample bounding box inflated by 1e-9 per side. Throws DomainError for
/// bins_per_axis == 0 or m > 3.
Histogram histogram(const ShadowEstimate& estimate, std::size_t bins_per_axis,
                    std::optional<std::vector<std::pair<double, double>>> bounds = std::nullopt);

/// Push-forward under v -> a v.
ShadowEstimate scale_pushforward(const ShadowEstimate& estimate, double a);

/// Empirical convolution: min(n1, n2) sums of pairs drawn independently with replacement.
ShadowEstimate convolve(const ShadowEstimate& e1, const ShadowEstimate& e2, std::uint64_t seed);

struct InvarianceReport {
  bool passed = false;
  std::size_t moments_compared = 0;
  double max_z = 0.0;  // largest |difference| / combined standard error
};

/// Compares the moment tables of (A_j) and (U A_j U*) sampled with independent seeds; passes
/// when every pair agrees within 5 combined standard errors. DomainError if u is not unitary
/// within 1e-10.
InvarianceReport unitary_invariance_check(const HermitianTuple& tuple, const ComplexMatrix& u,
                                          std::size_t count, unsigned degree,
                                          std::uint64_t seed_a, std::uint64_t seed_b,
                                          std::size_t workers = 1);

/// (sigma_1 (x) I, sigma_2 (x) I, sigma_3 (x) I) on C^4.
HermitianTuple pauli_extended_tuple();

enum class BallVariant {
  extended,  // A_j = sigma_j (x) I
  swapped,   // B_j = S A_j S* = I (x) sigma_j
};

struct BallReport {
  std::size_t sample_count = 0;
  double max_norm = 0.0;
  double ks_statistic = 0.0;
  double ks_critical = 0.0;           // 99.9% level
  std::vector<double> second_moments;  // E[x_j^2]
  std::vector<double> second_moment_std_errors;
  double max_second_moment_z = 0.0;   // max |E[x_j^2] - 1/5| / std_error
  double max_route_discrepancy = 0.0;  // JNR map vs partial trace + Bloch decomposition

  bool norms_ok = false;
  bool ks_ok = false;
  bool moments_ok = false;
  bool routes_ok = false;
  bool passed() const { return norms_ok && ks_ok && moments_ok && routes_ok; }
};

/// Samples the shadow of the extended (or swap-conjugated) Pauli tuple on C^2 (x) C^2 and
/// checks it against the uniform measure on the unit ball: norms <= 1 + 1e-10, radial KS test
/// against F(r) = r^3, coordinate second moments 1/5, and pointwise agreement (1e-12) with the
/// Bloch vector of the reduced state.
BallReport ball_shadow_check(std::size_t count, std::uint64_t seed,
                             BallVariant variant = BallVariant::extended);

/// Two-sided one-sample KS statistic of `values` against the CDF `cdf`.
double ks_statistic(std::vector<double> values, double (*cdf)(double));

/// Asymptotic two-sided KS critical value sqrt(-ln(alpha / 2) / 2) / sqrt(n).
double ks_critical_value(std::size_t n, double alpha);

/// Pearson chi-square of counts against equal expected counts.
double chi_square_uniform(const std::vector<std::uint64_t>& counts);

/// Upper quantile of the chi-square distribution.
double chi_square_critical(std::size_t dof, double alpha);

/// Sample counts per octant of R^3 (index bit j set when x_j < 0).
std::vector<std::uint64_t> octant_counts(const PointCloud& points);

}  // namespace jnrange
