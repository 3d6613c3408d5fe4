#include "jnrange/shadow.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <limits>

#include "jnrange/channels.hpp"
#include "jnrange/errors.hpp"
#include "jnrange/states.hpp"

namespace jnrange {

namespace {

// Multi-indices of total degree exactly `degree` over m slots, lexicographically descending.
void indices_of_degree(std::size_t m, unsigned degree, std::vector<unsigned>& prefix,
                       std::vector<std::vector<unsigned>>& out) {
  if (prefix.size() + 1 == m) {
    prefix.push_back(degree);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned k = degree + 1; k-- > 0;) {
    prefix.push_back(k);
    indices_of_degree(m, degree - k, prefix, out);
    prefix.pop_back();
  }
}

double ipow(double x, unsigned k) {
  double r = 1.0;
  for (unsigned i = 0; i < k; ++i) r *= x;
  return r;
}

double radial_cdf_ball(double r) { return std::clamp(r * r * r, 0.0, 1.0); }

}  // namespace

ShadowEstimate estimate_shadow(const HermitianTuple& tuple, std::size_t count, std::uint64_t seed,
                               std::size_t workers) {
  ShadowEstimate e;
  e.dimension_m = tuple.size();
  e.samples = jnr_sample(tuple, count, seed, workers);
  e.seed = seed;
  e.sample_count = count;
  return e;
}

ShadowEstimate shadow_from_points(PointCloud points, std::uint64_t seed) {
  ShadowEstimate e;
  e.dimension_m = points.dim;
  e.sample_count = points.size();
  e.samples = std::move(points);
  e.seed = seed;
  return e;
}

const MomentEntry* MomentTable::find(const std::vector<unsigned>& index) const {
  auto it = std::find_if(entries.begin(), entries.end(),
                         [&](const MomentEntry& e) { return e.index == index; });
  return it == entries.end() ? nullptr : &*it;
}

const MomentEntry& MomentTable::at(const std::vector<unsigned>& index) const {
  const MomentEntry* e = find(index);
  if (e == nullptr) throw DomainError("MomentTable: index not tabulated");
  return *e;
}

MomentTable moments(const ShadowEstimate& estimate, unsigned max_total_degree) {
  const std::size_t m = estimate.dimension_m;
  const std::size_t n = estimate.samples.size();
  MomentTable table;
  table.sample_count = n;
  if (m == 0) return table;

  for (unsigned degree = 0; degree <= max_total_degree; ++degree) {
    std::vector<std::vector<unsigned>> idx;
    std::vector<unsigned> prefix;
    indices_of_degree(m, degree, prefix, idx);
    for (auto& index : idx) {
      MomentEntry entry;
      entry.index = std::move(index);
      if (degree == 0) {
        entry.estimate = 1.0;
        entry.std_error = 0.0;
        table.entries.push_back(std::move(entry));
        continue;
      }
      double sum = 0.0;
      double sum_sq = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const auto x = estimate.samples.point(i);
        double v = 1.0;
        for (std::size_t j = 0; j < m; ++j) v *= ipow(x[j], entry.index[j]);
        sum += v;
        sum_sq += v * v;
      }
      const double nd = static_cast<double>(n);
      entry.estimate = sum / nd;
      if (n > 1) {
        const double var = std::max(0.0, (sum_sq - nd * entry.estimate * entry.estimate) / (nd - 1.0));
        entry.std_error = std::sqrt(var) / std::sqrt(nd);
      }
      table.entries.push_back(std::move(entry));
    }
  }
  return table;
}

std::vector<double> Histogram::normalized() const {
  std::vector<double> p(counts.size(), 0.0);
  if (total == 0) return p;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    p[k] = static_cast<double>(counts[k]) / static_cast<double>(total);
  }
  return p;
}

Histogram histogram(const ShadowEstimate& estimate, std::size_t bins_per_axis,
                    std::optional<std::vector<std::pair<double, double>>> bounds) {
  const std::size_t m = estimate.dimension_m;
  if (bins_per_axis == 0) throw DomainError("histogram: bins_per_axis must be positive");
  if (m == 0 || m > 3) throw DomainError("histogram: dense grids support 1 <= m <= 3");
  const auto& pts = estimate.samples;

  Histogram h;
  h.bins_per_axis = bins_per_axis;
  if (bounds) {
    if (bounds->size() != m) throw DimensionError("histogram: one (min, max) pair per axis");
    h.bounds = *bounds;
  } else {
    h.bounds.assign(m, {std::numeric_limits<double>::infinity(),
                        -std::numeric_limits<double>::infinity()});
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto x = pts.point(i);
      for (std::size_t j = 0; j < m; ++j) {
        h.bounds[j].first = std::min(h.bounds[j].first, x[j]);
        h.bounds[j].second = std::max(h.bounds[j].second, x[j]);
      }
    }
    for (auto& [lo, hi] : h.bounds) {
      if (pts.size() == 0) lo = hi = 0.0;
      lo -= 1e-9;
      hi += 1e-9;
    }
  }
  for (const auto& [lo, hi] : h.bounds) {
    if (!(hi > lo)) throw DomainError("histogram: each axis needs max > min");
  }

  std::size_t cells = 1;
  for (std::size_t j = 0; j < m; ++j) cells *= bins_per_axis;
  h.counts.assign(cells, 0);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto x = pts.point(i);
    std::size_t cell = 0;
    bool inside = true;
    for (std::size_t j = 0; j < m; ++j) {
      const auto [lo, hi] = h.bounds[j];
      if (x[j] < lo || x[j] > hi) {
        inside = false;
        break;
      }
      auto bin = static_cast<std::size_t>((x[j] - lo) / (hi - lo) * static_cast<double>(bins_per_axis));
      bin = std::min(bin, bins_per_axis - 1);
      cell = cell * bins_per_axis + bin;
    }
    if (!inside) {
      ++h.outside;
      continue;
    }
    ++h.counts[cell];
    ++h.total;
  }
  return h;
}

ShadowEstimate scale_pushforward(const ShadowEstimate& estimate, double a) {
  ShadowEstimate scaled = estimate;
  for (double& x : scaled.samples.coords) x *= a;
  return scaled;
}

ShadowEstimate convolve(const ShadowEstimate& e1, const ShadowEstimate& e2, std::uint64_t seed) {
  if (e1.dimension_m != e2.dimension_m) throw DimensionError("convolve: dimension mismatch");
  const std::size_t n1 = e1.samples.size();
  const std::size_t n2 = e2.samples.size();
  const std::size_t n = std::min(n1, n2);
  const std::size_t m = e1.dimension_m;
  PointCloud out{m, std::vector<double>(n * m)};
  CounterRng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = e1.samples.point(rng.below(n1));
    const auto b = e2.samples.point(rng.below(n2));
    auto dst = out.point(i);
    for (std::size_t j = 0; j < m; ++j) dst[j] = a[j] + b[j];
  }
  return shadow_from_points(std::move(out), seed);
}

InvarianceReport unitary_invariance_check(const HermitianTuple& tuple, const ComplexMatrix& u,
                                          std::size_t count, unsigned degree,
                                          std::uint64_t seed_a, std::uint64_t seed_b,
                                          std::size_t workers) {
  if (!u.is_square() || u.rows() != tuple.dim()) {
    throw DimensionError("unitary_invariance_check: unitary has the wrong size");
  }
  if (!is_unitary(u, 1e-10)) throw DomainError("unitary_invariance_check: u is not unitary");

  std::vector<ComplexMatrix> conjugated;
  conjugated.reserve(tuple.size());
  const ComplexMatrix u_star = adjoint(u);
  for (const auto& a : tuple.operators()) {
    ComplexMatrix b = u * a * u_star;
    conjugated.push_back(Complex(0.5) * (b + adjoint(b)));
  }
  const HermitianTuple other(std::move(conjugated));

  const MomentTable ma = moments(estimate_shadow(tuple, count, seed_a, workers), degree);
  const MomentTable mb = moments(estimate_shadow(other, count, seed_b, workers), degree);

  InvarianceReport report;
  report.passed = true;
  for (std::size_t k = 0; k < ma.entries.size(); ++k) {
    const auto& ea = ma.entries[k];
    const auto& eb = mb.entries[k];
    const double diff = std::abs(ea.estimate - eb.estimate);
    const double se = std::hypot(ea.std_error, eb.std_error);
    ++report.moments_compared;
    if (se == 0.0) {
      if (diff > 1e-12) report.passed = false;
      continue;
    }
    const double z = diff / se;
    report.max_z = std::max(report.max_z, z);
    if (z > 5.0) report.passed = false;
  }
  return report;
}

HermitianTuple pauli_extended_tuple() {
  const HermitianTuple pauli = pauli_basis();
  const ComplexMatrix id = ComplexMatrix::identity(2);
  std::vector<ComplexMatrix> ops;
  for (const auto& s : pauli.operators()) ops.push_back(tensor(s, id));
  return HermitianTuple(std::move(ops));
}

BallReport ball_shadow_check(std::size_t count, std::uint64_t seed, BallVariant variant) {
  if (count == 0) throw DomainError("ball_shadow_check: count must be positive");
  const HermitianTuple extended = pauli_extended_tuple();
  const ComplexMatrix swap = swap_operator();
  HermitianTuple tuple = extended;
  if (variant == BallVariant::swapped) {
    std::vector<ComplexMatrix> ops;
    for (const auto& a : extended.operators()) ops.push_back(swap * a * adjoint(swap));
    tuple = HermitianTuple(std::move(ops));
  }
  const HermitianTuple pauli = pauli_basis();

  BallReport r;
  r.sample_count = count;
  std::vector<double> radii(count);
  std::vector<double> sum_sq(3, 0.0);
  std::vector<double> sum_quad(3, 0.0);

  const std::size_t blocks = (count + kSampleBlock - 1) / kSampleBlock;
  for (std::size_t b = 0; b < blocks; ++b) {
    CounterRng rng = CounterRng::substream(seed, b);
    const std::size_t end = std::min(count, (b + 1) * kSampleBlock);
    for (std::size_t i = b * kSampleBlock; i < end; ++i) {
      const PureState psi = haar_sample(4, rng);
      const auto x = jnr_map(tuple, psi);

      // reduced state of the factor the tuple acts on
      ComplexVector v(psi.amplitudes().begin(), psi.amplitudes().end());
      if (variant == BallVariant::swapped) v = mat_vec(swap, v);
      const ComplexMatrix omega = partial_trace_second(outer(v, v), 2, 2);
      const BlochVector tau =
          bloch_decompose(DensityMatrix(omega), pauli, BlochConvention::expectation);

      double r2 = 0.0;
      for (std::size_t j = 0; j < 3; ++j) {
        r.max_route_discrepancy = std::max(r.max_route_discrepancy, std::abs(x[j] - tau.components[j]));
        r2 += x[j] * x[j];
        sum_sq[j] += x[j] * x[j];
        sum_quad[j] += x[j] * x[j] * x[j] * x[j];
      }
      radii[i] = std::sqrt(r2);
      r.max_norm = std::max(r.max_norm, radii[i]);
    }
  }

  const double n = static_cast<double>(count);
  r.second_moments.resize(3);
  r.second_moment_std_errors.resize(3);
  for (std::size_t j = 0; j < 3; ++j) {
    const double mean = sum_sq[j] / n;
    const double var = count > 1 ? std::max(0.0, (sum_quad[j] - n * mean * mean) / (n - 1.0)) : 0.0;
    r.second_moments[j] = mean;
    r.second_moment_std_errors[j] = std::sqrt(var / n);
    const double z = r.second_moment_std_errors[j] > 0.0
                         ? std::abs(mean - 0.2) / r.second_moment_std_errors[j]
                         : std::numeric_limits<double>::infinity();
    r.max_second_moment_z = std::max(r.max_second_moment_z, z);
  }

  r.ks_statistic = ks_statistic(std::move(radii), radial_cdf_ball);
  r.ks_critical = ks_critical_value(count, 1e-3);

  r.norms_ok = r.max_norm <= 1.0 + 1e-10;
  r.ks_ok = r.ks_statistic < r.ks_critical;
  r.moments_ok = r.max_second_moment_z <= 5.0;
  r.routes_ok = r.max_route_discrepancy <= 1e-12;
  return r;
}

double ks_statistic(std::vector<double> values, double (*cdf)(double)) {
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double f = cdf(values[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_critical_value(std::size_t n, double alpha) {
  return std::sqrt(-std::log(alpha / 2.0) / 2.0) / std::sqrt(static_cast<double>(n));
}

double chi_square_uniform(const std::vector<std::uint64_t>& counts) {
  if (counts.empty()) return 0.0;
  double total = 0.0;
  for (auto c : counts) total += static_cast<double>(c);
  const double expected = total / static_cast<double>(counts.size());
  double chi2 = 0.0;
  for (auto c : counts) {
    const double d = static_cast<double>(c) - expected;
    chi2 += d * d / expected;
  }
  return chi2;
}

double chi_square_critical(std::size_t dof, double alpha) {
  const boost::math::chi_squared dist(static_cast<double>(dof));
  return boost::math::quantile(boost::math::complement(dist, alpha));
}

std::vector<std::uint64_t> octant_counts(const PointCloud& points) {
  if (points.dim != 3) throw DimensionError("octant_counts: points must lie in R^3");
  std::vector<std::uint64_t> counts(8, 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto x = points.point(i);
    std::size_t cell = 0;
    for (std::size_t j = 0; j < 3; ++j) {
      if (x[j] < 0.0) cell |= std::size_t{1} << j;
    }
    ++counts[cell];
  }
  return counts;
}

}  // namespace jnrange
