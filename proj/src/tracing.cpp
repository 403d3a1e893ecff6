#include "sepcode/tracing.hpp"

#include <array>
#include <cctype>
#include <stdexcept>

namespace sepcode {

namespace {

void require_binary(const Code& code) {
  if (!code.is_binary()) throw std::invalid_argument("tracing requires a binary code");
}

void require_binary_r(const Code& code, const FeasibleSet& r) {
  if (r.length() != code.length()) throw std::invalid_argument("R length does not match code length");
  for (const auto& p : r.positions())
    if (p.back() > 1) throw std::invalid_argument("R must be binary");
}

/// Pinned-position filter shared by both tracers: phi[i] is true iff word i
/// agrees with every position where R is a singleton.
std::vector<char> consistent_words(const Code& code, const FeasibleSet& r, std::uint64_t& ops) {
  const std::size_t m = code.size();
  std::vector<char> phi(m, 1);
  for (std::size_t j = 0; j < code.length(); ++j) {
    const auto& pos = r.at(j);
    if (pos.size() != 1) continue;
    const Letter bit = pos.front();
    for (std::size_t i = 0; i < m; ++i) phi[i] &= static_cast<char>(code.word(i)[j] == bit);
    ops += m;
  }
  return phi;
}

TraceReport finish(TraceReport rep, std::size_t t) {
  rep.outcome = rep.colluders.size() <= t ? TraceReport::Outcome::identified : TraceReport::Outcome::overflow;
  return rep;
}

}  // namespace

FeasibleSet coalition_feasible_set(const Code& code, const Coalition& coalition) {
  require_binary(code);
  return descendant(code, coalition.members());
}

FeasibleSet parse_binary_feasible_set(std::string_view text) {
  std::vector<LetterSet> pos;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') continue;
    switch (ch) {
      case '0': pos.push_back({0}); break;
      case '1': pos.push_back({1}); break;
      case '*': pos.push_back({0, 1}); break;
      default:
        throw std::invalid_argument(std::string("invalid R token '") + ch + "', expected 0, 1 or *");
    }
  }
  if (pos.empty()) throw std::invalid_argument("empty R specification");
  return FeasibleSet(std::move(pos));
}

std::string format_binary_feasible_set(const FeasibleSet& r) {
  std::string out;
  for (const auto& p : r.positions()) {
    if (p.size() == 2) out += '*';
    else if (p.front() <= 1) out += static_cast<char>('0' + p.front());
    else throw std::invalid_argument("R is not binary");
  }
  return out;
}

TraceReport lacc_identify(const Code& code, const FeasibleSet& r, std::size_t t) {
  require_binary(code);
  require_binary_r(code, r);
  TraceReport rep;
  // Applying the R={1} and R={0} filters in one sweep yields U1 ∩ U2 directly.
  const auto phi = consistent_words(code, r, rep.operations);
  for (std::size_t i = 0; i < code.size(); ++i)
    if (phi[i]) rep.candidates.push_back(i);
  rep.operations += code.size();
  rep.colluders = rep.candidates;
  return finish(std::move(rep), t);
}

TraceReport ssc_trace(const Code& code, const FeasibleSet& r, std::size_t t) {
  require_binary(code);
  require_binary_r(code, r);
  TraceReport rep;
  const auto phi = consistent_words(code, r, rep.operations);
  for (std::size_t i = 0; i < code.size(); ++i)
    if (phi[i]) rep.candidates.push_back(i);
  if (rep.candidates.empty()) throw std::invalid_argument("infeasible R");

  std::vector<char> chosen(code.size(), 0);
  for (std::size_t k = 0; k < code.length(); ++k) {
    std::array<std::size_t, 2> count{0, 0};
    std::array<std::size_t, 2> last{0, 0};
    for (std::size_t i = 0; i < code.size(); ++i) {
      if (!phi[i]) continue;
      const Letter b = code.word(i)[k];
      ++count[b];
      last[b] = i;
    }
    rep.operations += code.size();
    for (Letter b : {Letter{1}, Letter{0}}) {
      if (count[b] != 1) continue;
      rep.evidence.push_back({k, b, last[b]});
      chosen[last[b]] = 1;
    }
  }
  for (std::size_t i = 0; i < code.size(); ++i)
    if (chosen[i]) rep.colluders.push_back(i);
  return finish(std::move(rep), t);
}

}  // namespace sepcode
