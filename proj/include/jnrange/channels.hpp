#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "jnrange/hermitian_tuple.hpp"
#include "jnrange/linalg.hpp"
#include "jnrange/rng.hpp"
#include "jnrange/states.hpp"

namespace jnrange {

/// One Kraus operator in scaled form: X = sqrt(weight) * op.
///
/// Built-in channels keep the probability in `weight` so that X A X* = weight * op A op*
/// is evaluated without the round trip through sqrt.
struct KrausTerm {
  double weight = 1.0;
  ComplexMatrix op;

  ComplexMatrix kraus() const;
};

/// Quantum map Phi(A) = sum_i X_i A X_i*.
class KrausChannel {
 public:
  /// Plain Kraus list, every weight 1. Throws DimensionError if the list is empty or the
  /// operators are not all N x N.
  explicit KrausChannel(std::vector<ComplexMatrix> kraus);
  explicit KrausChannel(std::vector<KrausTerm> terms);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<KrausTerm>& terms() const { return terms_; }

  /// Materialized Kraus operators X_i.
  std::vector<ComplexMatrix> kraus() const;

 private:
  std::size_t dim_ = 0;
  std::vector<KrausTerm> terms_;
};

ComplexMatrix apply(const KrausChannel& channel, const ComplexMatrix& a);

/// Phi applied `times` times.
ComplexMatrix apply_iterated(const KrausChannel& channel, const ComplexMatrix& a,
                             std::size_t times);

/// Phi applied to every operator of the tuple.
HermitianTuple apply(const KrausChannel& channel, const HermitianTuple& tuple);

/// Kraus list (X_1*, ..., X_k*); the Hilbert-Schmidt adjoint of Phi.
KrausChannel adjoint_channel(const KrausChannel& channel);

/// Kraus list of products Y_j X_i, i.e. the map A -> Psi(Phi(A)) for second after first.
KrausChannel compose(const KrausChannel& second, const KrausChannel& first);

struct ChannelReport {
  bool is_unital = false;
  bool is_trace_preserving = false;
  double unital_defect = 0.0;  // ||sum X_i X_i* - I||_max
  double tp_defect = 0.0;      // ||sum X_i* X_i - I||_max
};

inline constexpr double kChannelDefectTol = 1e-10;

ChannelReport analyze(const KrausChannel& channel);

struct PureDecomposition {
  std::vector<double> weights;  // ||X_i psi||^2
  std::vector<PureState> states;
};

/// Phi(|psi><psi|) = sum_i p_i |psi_i><psi_i| with psi_i = X_i psi / ||X_i psi||. Terms with
/// ||X_i psi|| <= 1e-14 are dropped; DomainError if none survive.
PureDecomposition decompose_pure(const KrausChannel& channel, const PureState& psi);

KrausChannel decaying_channel(double p);
KrausChannel phase_flip_channel(double p);
KrausChannel double_flip_channel(double p, double q);
/// Unitary channel {S} for the swap S on C^2 (x) C^2.
KrausChannel swap_conjugation_channel();
ComplexMatrix swap_operator();

/// Parses "decaying:p", "phase_flip:p", "double_flip:p,q" or "swap_conjugation".
/// Throws ParseError on malformed text, DomainError on out-of-range parameters.
KrausChannel builtin_channel(const std::string& spec);

/// Haar-random unitary of size n (Gram-Schmidt on a complex Gaussian matrix).
ComplexMatrix haar_unitary(std::size_t n, CounterRng& rng);

/// Random unital channel with k Kraus operators on C^dim: the first block column of a Haar
/// isometry C^dim -> C^{dim k} gives blocks Y_i with sum Y_i* Y_i = I; X_i = Y_i*.
KrausChannel random_unital_channel(std::size_t dim, std::size_t k, CounterRng& rng);

struct InclusionReport {
  double max_violation = 0.0;  // largest h_image(u) - h_source(u) or point excess, clamped at 0
  std::size_t directions_checked = 0;
  std::size_t samples_checked = 0;
  std::size_t violations = 0;  // checks exceeding the tolerance
  double unital_defect = 0.0;
  double tp_defect = 0.0;
  double tolerance = 1e-8;

  bool passed() const { return violations == 0; }
};

/// Checks conv W(Phi(A_1), ..., Phi(A_m)) inside conv W(A_1, ..., A_m) by support-function
/// dominance in `directions` random directions, and checks `samples` sampled points of the
/// image range against the source hull. Throws HypothesisError unless Phi is unital.
InclusionReport verify_inclusion(const KrausChannel& channel, const HermitianTuple& tuple,
                                 std::size_t directions, std::size_t samples, std::uint64_t seed,
                                 double tol = 1e-8);

/// Same for the numerical range of a single matrix via its Hermitian parts.
InclusionReport verify_inclusion(const KrausChannel& channel, const ComplexMatrix& a,
                                 std::size_t directions, std::size_t samples, std::uint64_t seed,
                                 double tol = 1e-8);

}  // namespace jnrange
