#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sepcode/code.hpp"
#include "sepcode/descendant.hpp"

namespace sepcode {

using Signal = std::vector<double>;

/// Noiseless spread-spectrum setup: n orthonormal noise-like carriers in R^N,
/// a host signal, and an embedding strength. Immutable once built.
class EmbeddingContext {
 public:
  std::size_t dimension() const { return host_.size(); }
  std::size_t code_length() const { return basis_.size(); }
  double alpha() const { return alpha_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<Signal>& basis() const { return basis_; }
  const Signal& host() const { return host_; }

  /// max |<u_i,u_j> - δ_ij|.
  double orthonormality_error() const;

 private:
  friend EmbeddingContext make_context(std::size_t, std::size_t, double, std::uint64_t);
  EmbeddingContext(std::vector<Signal> basis, Signal host, double alpha, std::uint64_t seed)
      : basis_(std::move(basis)), host_(std::move(host)), alpha_(alpha), seed_(seed) {}

  std::vector<Signal> basis_;
  Signal host_;
  double alpha_;
  std::uint64_t seed_;
};

/// Per-position correlation statistics T(1..n).
struct DetectionStatistics {
  std::vector<double> values;
};

/// Seeded Gaussian vectors, Gram-Schmidt with one re-orthogonalization pass.
EmbeddingContext make_context(std::size_t dimension, std::size_t code_length, double alpha,
                              std::uint64_t seed);

/// x + alpha * sum_i b_i u_i for a binary codeword b.
Signal embed(const EmbeddingContext& ctx, const Codeword& codeword);

/// Equal-weight mean of the colluders' copies.
Signal averaging_attack(std::span<const Signal> signals);

/// T(i) = <(y - x) / alpha, u_i>.
DetectionStatistics correlate(const EmbeddingContext& ctx, const Signal& y);

inline constexpr double kDefaultEps = 1e-6;

/// {1} where T >= 1-eps, {0} where T <= eps, {0,1} otherwise. eps in (0, 1/2).
FeasibleSet threshold(const DetectionStatistics& stats, double eps = kDefaultEps);

/// embed -> averaging_attack -> correlate for the given coalition.
DetectionStatistics simulate_attack(const EmbeddingContext& ctx, const Code& code,
                                    const Coalition& coalition);

}  // namespace sepcode
