#include "sepcode/signal_sim.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace sepcode {

namespace {

double dot(const Signal& a, const Signal& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

void subtract_projections(Signal& v, const std::vector<Signal>& basis) {
  for (const auto& u : basis) {
    const double c = dot(v, u);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c * u[k];
  }
}

constexpr double kPivotFloor = 1e-12;
constexpr double kGramTolerance = 1e-9;

}  // namespace

double EmbeddingContext::orthonormality_error() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = 0; j < basis_.size(); ++j)
      worst = std::max(worst, std::abs(dot(basis_[i], basis_[j]) - (i == j ? 1.0 : 0.0)));
  return worst;
}

EmbeddingContext make_context(std::size_t dimension, std::size_t code_length, double alpha,
                              std::uint64_t seed) {
  if (code_length == 0) throw std::invalid_argument("code length must be positive");
  if (code_length > dimension) throw std::invalid_argument("code length exceeds signal dimension");
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto draw = [&] {
    Signal v(dimension);
    for (auto& x : v) x = gauss(rng);
    return v;
  };

  std::vector<Signal> basis;
  basis.reserve(code_length);
  while (basis.size() < code_length) {
    Signal v = draw();
    const double raw = std::sqrt(dot(v, v));
    subtract_projections(v, basis);
    subtract_projections(v, basis);  // second pass restores orthogonality lost to rounding
    const double norm = std::sqrt(dot(v, v));
    if (norm < kPivotFloor * std::max(1.0, raw)) continue;  // nearly dependent, redraw
    for (auto& x : v) x /= norm;
    basis.push_back(std::move(v));
  }
  Signal host = draw();

  EmbeddingContext ctx(std::move(basis), std::move(host), alpha, seed);
  if (ctx.orthonormality_error() > kGramTolerance) {
    std::vector<Signal> again;
    for (auto v : ctx.basis()) {
      subtract_projections(v, again);
      const double norm = std::sqrt(dot(v, v));
      for (auto& x : v) x /= norm;
      again.push_back(std::move(v));
    }
    ctx = EmbeddingContext(std::move(again), ctx.host(), alpha, seed);
  }
  return ctx;
}

Signal embed(const EmbeddingContext& ctx, const Codeword& codeword) {
  if (codeword.length() != ctx.code_length()) throw std::invalid_argument("embed: codeword length mismatch");
  Signal y = ctx.host();
  for (std::size_t i = 0; i < codeword.length(); ++i) {
    if (codeword[i] > 1) throw std::invalid_argument("embed: codeword is not binary");
    if (codeword[i] == 0) continue;
    const auto& u = ctx.basis()[i];
    for (std::size_t k = 0; k < y.size(); ++k) y[k] += ctx.alpha() * u[k];
  }
  return y;
}

Signal averaging_attack(std::span<const Signal> signals) {
  if (signals.empty()) throw std::invalid_argument("averaging_attack: no signals");
  Signal y(signals.front().size(), 0.0);
  for (const auto& s : signals) {
    if (s.size() != y.size()) throw std::invalid_argument("averaging_attack: dimension mismatch");
    for (std::size_t k = 0; k < y.size(); ++k) y[k] += s[k];
  }
  const double inv = 1.0 / static_cast<double>(signals.size());
  for (auto& x : y) x *= inv;
  return y;
}

DetectionStatistics correlate(const EmbeddingContext& ctx, const Signal& y) {
  if (y.size() != ctx.dimension()) throw std::invalid_argument("correlate: dimension mismatch");
  Signal residual(y.size());
  for (std::size_t k = 0; k < y.size(); ++k) residual[k] = (y[k] - ctx.host()[k]) / ctx.alpha();
  DetectionStatistics out;
  out.values.reserve(ctx.code_length());
  for (const auto& u : ctx.basis()) out.values.push_back(dot(residual, u));
  return out;
}

FeasibleSet threshold(const DetectionStatistics& stats, double eps) {
  if (!(eps > 0.0 && eps < 0.5)) throw std::invalid_argument("eps must lie in (0, 1/2)");
  std::vector<LetterSet> pos;
  pos.reserve(stats.values.size());
  for (double v : stats.values) {
    if (v >= 1.0 - eps) pos.push_back({1});
    else if (v <= eps) pos.push_back({0});
    else pos.push_back({0, 1});
  }
  return FeasibleSet(std::move(pos));
}

DetectionStatistics simulate_attack(const EmbeddingContext& ctx, const Code& code,
                                    const Coalition& coalition) {
  std::vector<Signal> copies;
  copies.reserve(coalition.size());
  for (auto i : coalition.members()) copies.push_back(embed(ctx, code.word(i)));
  return correlate(ctx, averaging_attack(copies));
}

}  // namespace sepcode
