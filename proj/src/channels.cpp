#include "jnrange/channels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "jnrange/errors.hpp"
#include "jnrange/jnr.hpp"

namespace jnrange {

namespace {

constexpr double kVanishingTol = 1e-14;

ComplexMatrix permutation_matrix(std::initializer_list<std::size_t> image) {
  const std::size_t n = image.size();
  ComplexMatrix p(n, n);
  std::size_t row = 0;
  for (std::size_t col : image) p(row++, col) = 1.0;
  return p;
}

void require_open_unit(double p, const char* name) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError(std::string(name) + ": parameter p must lie in (0, 1)");
  }
}

std::vector<double> parse_parameters(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      throw ParseError("builtin channel: cannot parse parameter '" + item + "'");
    }
    if (used != item.size()) throw ParseError("builtin channel: trailing text in '" + item + "'");
    values.push_back(value);
  }
  return values;
}

}  // namespace

ComplexMatrix KrausTerm::kraus() const { return Complex(std::sqrt(weight)) * op; }

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus) {
  std::vector<KrausTerm> terms;
  terms.reserve(kraus.size());
  for (auto& x : kraus) terms.push_back({1.0, std::move(x)});
  *this = KrausChannel(std::move(terms));
}

KrausChannel::KrausChannel(std::vector<KrausTerm> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw DimensionError("KrausChannel: at least one Kraus operator required");
  dim_ = terms_.front().op.rows();
  for (const auto& t : terms_) {
    if (!t.op.is_square() || t.op.rows() != dim_) {
      throw DimensionError("KrausChannel: Kraus operators must all be " + std::to_string(dim_) +
                           "x" + std::to_string(dim_));
    }
    if (!(t.weight >= 0.0) || !std::isfinite(t.weight)) {
      throw DomainError("KrausChannel: term weights must be finite and non-negative");
    }
  }
}

std::vector<ComplexMatrix> KrausChannel::kraus() const {
  std::vector<ComplexMatrix> xs;
  xs.reserve(terms_.size());
  for (const auto& t : terms_) xs.push_back(t.kraus());
  return xs;
}

ComplexMatrix apply(const KrausChannel& channel, const ComplexMatrix& a) {
  if (!a.is_square() || a.rows() != channel.dim()) {
    throw DimensionError("apply: operand is " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", channel acts on dimension " +
                         std::to_string(channel.dim()));
  }
  ComplexMatrix sum(a.rows(), a.cols());
  for (const auto& t : channel.terms()) {
    if (t.weight == 0.0) continue;
    ComplexMatrix term = t.op * a * adjoint(t.op);
    if (t.weight != 1.0) term *= Complex(t.weight);
    sum += term;
  }
  return sum;
}

ComplexMatrix apply_iterated(const KrausChannel& channel, const ComplexMatrix& a,
                             std::size_t times) {
  ComplexMatrix current = a;
  for (std::size_t j = 0; j < times; ++j) current = apply(channel, current);
  return current;
}

HermitianTuple apply(const KrausChannel& channel, const HermitianTuple& tuple) {
  std::vector<ComplexMatrix> image;
  image.reserve(tuple.size());
  for (const auto& op : tuple.operators()) {
    ComplexMatrix img = apply(channel, op);
    // restore exact Hermiticity lost to roundoff
    img = Complex(0.5) * (img + adjoint(img));
    image.push_back(std::move(img));
  }
  return HermitianTuple(std::move(image));
}

KrausChannel adjoint_channel(const KrausChannel& channel) {
  std::vector<KrausTerm> terms;
  terms.reserve(channel.size());
  for (const auto& t : channel.terms()) terms.push_back({t.weight, adjoint(t.op)});
  return KrausChannel(std::move(terms));
}

KrausChannel compose(const KrausChannel& second, const KrausChannel& first) {
  if (second.dim() != first.dim()) throw DimensionError("compose: channel dimensions differ");
  std::vector<KrausTerm> terms;
  terms.reserve(second.size() * first.size());
  for (const auto& y : second.terms()) {
    for (const auto& x : first.terms()) terms.push_back({y.weight * x.weight, y.op * x.op});
  }
  return KrausChannel(std::move(terms));
}

ChannelReport analyze(const KrausChannel& channel) {
  const std::size_t n = channel.dim();
  ComplexMatrix left(n, n);   // sum X X*
  ComplexMatrix right(n, n);  // sum X* X
  for (const auto& t : channel.terms()) {
    const ComplexMatrix op_star = adjoint(t.op);
    left += Complex(t.weight) * (t.op * op_star);
    right += Complex(t.weight) * (op_star * t.op);
  }
  const ComplexMatrix id = ComplexMatrix::identity(n);
  ChannelReport r;
  r.unital_defect = max_abs_diff(left, id);
  r.tp_defect = max_abs_diff(right, id);
  r.is_unital = r.unital_defect <= kChannelDefectTol;
  r.is_trace_preserving = r.tp_defect <= kChannelDefectTol;
  return r;
}

PureDecomposition decompose_pure(const KrausChannel& channel, const PureState& psi) {
  if (psi.dim() != channel.dim()) throw DimensionError("decompose_pure: dimension mismatch");
  PureDecomposition d;
  for (const auto& t : channel.terms()) {
    ComplexVector v = mat_vec(t.op, psi.amplitudes());
    const double op_norm = norm(v);
    const double x_norm = std::sqrt(t.weight) * op_norm;
    if (x_norm <= kVanishingTol) continue;
    d.weights.push_back(t.weight * op_norm * op_norm);
    d.states.push_back(PureState::normalized(std::move(v)));
  }
  if (d.weights.empty()) throw DomainError("decompose_pure: every Kraus term annihilates psi");
  return d;
}

KrausChannel decaying_channel(double p) {
  require_open_unit(p, "decaying");
  return KrausChannel(std::vector<KrausTerm>{
      {1.0, ComplexMatrix{{1.0, 0.0}, {0.0, std::sqrt(1.0 - p)}}},
      {p, ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}},
  });
}

KrausChannel phase_flip_channel(double p) {
  require_open_unit(p, "phase_flip");
  return KrausChannel(std::vector<KrausTerm>{
      {1.0 - p, ComplexMatrix::identity(2)},
      {p, ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}},
  });
}

KrausChannel double_flip_channel(double p, double q) {
  if (!(p >= 0.0 && q >= 0.0 && p + q <= 1.0)) {
    throw DomainError("double_flip: parameters need p, q >= 0 and p + q <= 1");
  }
  return KrausChannel(std::vector<KrausTerm>{
      {1.0 - p - q, ComplexMatrix::identity(3)},
      {p, permutation_matrix({1, 0, 2})},
      {q, permutation_matrix({0, 2, 1})},
  });
}

ComplexMatrix swap_operator() { return permutation_matrix({0, 2, 1, 3}); }

KrausChannel swap_conjugation_channel() { return KrausChannel(std::vector{swap_operator()}); }

KrausChannel builtin_channel(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::vector<double> params =
      colon == std::string::npos ? std::vector<double>{} : parse_parameters(spec.substr(colon + 1));
  auto expect = [&](std::size_t count) {
    if (params.size() != count) {
      throw ParseError("builtin channel '" + name + "' takes " + std::to_string(count) +
                       " parameter(s)");
    }
  };
  if (name == "decaying") {
    expect(1);
    return decaying_channel(params[0]);
  }
  if (name == "phase_flip") {
    expect(1);
    return phase_flip_channel(params[0]);
  }
  if (name == "double_flip") {
    expect(2);
    return double_flip_channel(params[0], params[1]);
  }
  if (name == "swap_conjugation") {
    expect(0);
    return swap_conjugation_channel();
  }
  throw ParseError("unknown builtin channel '" + name + "'");
}

namespace {

// Gram-Schmidt on the columns of a complex Gaussian n x cols matrix.
ComplexMatrix haar_isometry(std::size_t n, std::size_t cols, CounterRng& rng) {
  std::vector<ComplexVector> basis;
  basis.reserve(cols);
  while (basis.size() < cols) {
    ComplexVector v(n);
    for (auto& z : v) {
      const auto [re, im] = rng.normal_pair();
      z = Complex(re, im);
    }
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& e : basis) {
        const Complex c = inner(e, v);
        for (std::size_t i = 0; i < n; ++i) v[i] -= c * e[i];
      }
    }
    const double len = norm(v);
    if (len < 1e-8) continue;
    for (auto& z : v) z /= len;
    basis.push_back(std::move(v));
  }
  ComplexMatrix u(n, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < n; ++i) u(i, j) = basis[j][i];
  }
  return u;
}

}  // namespace

ComplexMatrix haar_unitary(std::size_t n, CounterRng& rng) { return haar_isometry(n, n, rng); }

KrausChannel random_unital_channel(std::size_t dim, std::size_t k, CounterRng& rng) {
  if (dim == 0 || k == 0) throw DomainError("random_unital_channel: dim and k must be positive");
  const ComplexMatrix v = haar_isometry(dim * k, dim, rng);
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(k);
  for (std::size_t b = 0; b < k; ++b) {
    ComplexMatrix y(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) y(i, j) = v(b * dim + i, j);
    }
    kraus.push_back(adjoint(y));
  }
  return KrausChannel(std::move(kraus));
}

InclusionReport verify_inclusion(const KrausChannel& channel, const HermitianTuple& tuple,
                                 std::size_t directions, std::size_t samples, std::uint64_t seed,
                                 double tol) {
  if (channel.dim() != tuple.dim()) throw DimensionError("verify_inclusion: dimension mismatch");
  const ChannelReport hyp = analyze(channel);
  if (!hyp.is_unital) {
    throw HypothesisError("verify_inclusion: channel is not unital (defect " +
                          std::to_string(hyp.unital_defect) + ")");
  }
  InclusionReport report;
  report.unital_defect = hyp.unital_defect;
  report.tp_defect = hyp.tp_defect;
  report.tolerance = tol;

  const HermitianTuple image = apply(channel, tuple);
  CounterRng rng(seed);
  const auto dirs = random_directions(tuple.size(), directions, rng);
  std::vector<double> source_support;
  source_support.reserve(dirs.size());
  for (const auto& u : dirs) {
    const double h_src = jnr_support(tuple, u);
    const double excess = jnr_support(image, u) - h_src;
    source_support.push_back(h_src);
    report.max_violation = std::max(report.max_violation, excess);
    if (excess > tol) ++report.violations;
  }
  report.directions_checked = dirs.size();

  if (samples > 0) {
    const PointCloud points = jnr_sample(image, samples, mix64(seed) ^ 0x5eedULL);
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto x = points.point(i);
      double worst = 0.0;
      for (std::size_t d = 0; d < dirs.size(); ++d) {
        double dot = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) dot += dirs[d][j] * x[j];
        worst = std::max(worst, dot - source_support[d]);
      }
      report.max_violation = std::max(report.max_violation, worst);
      if (worst > tol) ++report.violations;
    }
    report.samples_checked = points.size();
  }
  return report;
}

InclusionReport verify_inclusion(const KrausChannel& channel, const ComplexMatrix& a,
                                 std::size_t directions, std::size_t samples, std::uint64_t seed,
                                 double tol) {
  return verify_inclusion(channel, hermitian_parts(a), directions, samples, seed, tol);
}

}  // namespace jnrange
