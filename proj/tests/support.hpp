#pragma once
// Shared fixtures and brute-force oracles for the test suites. The oracles
// materialize descendant codes as explicit word sets and enumerate subsets by
// bitmask; they share nothing with the library's FeasibleSet machinery.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "sepcode/code.hpp"

namespace sepcode::testing {

using Word = std::vector<Letter>;
using WordSet = std::set<Word>;

inline Code make_code(std::uint32_t q, std::vector<Word> rows) {
  std::vector<Codeword> w;
  for (auto& r : rows) w.emplace_back(std::move(r));
  const std::size_t n = w.front().length();
  return Code(n, q, std::move(w));
}

// Columns c1..c4 of the (3,4,2) example: c1 = 000, c2 = 100, c3 = 010, c4 = 001.
inline Code example1() { return make_code(2, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }

// (3,5,2) example: example1 plus c5 = 111.
inline Code example2() { return make_code(2, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}); }

inline std::vector<std::size_t> members_of(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < 64; ++b)
    if (mask >> b & 1U) out.push_back(b);
  return out;
}

inline WordSet oracle_desc(const Code& code, std::uint64_t mask) {
  const std::size_t n = code.length();
  std::vector<std::set<Letter>> cols(n);
  for (auto i : members_of(mask))
    for (std::size_t k = 0; k < n; ++k) cols[k].insert(code.word(i)[k]);
  WordSet out{Word{}};
  for (std::size_t k = 0; k < n; ++k) {
    WordSet next;
    for (const auto& prefix : out)
      for (Letter l : cols[k]) {
        Word w = prefix;
        w.push_back(l);
        next.insert(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

inline std::uint64_t oracle_members_in(const Code& code, const WordSet& words) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < code.size(); ++i) {
    Word w(code.word(i).begin(), code.word(i).end());
    if (words.count(w)) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

inline std::vector<std::uint64_t> oracle_coalitions(std::size_t m, std::size_t t) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask)
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) <= t) out.push_back(mask);
  return out;
}

inline bool oracle_is_fpc(const Code& code, std::size_t t) {
  for (auto s : oracle_coalitions(code.size(), t))
    if (oracle_members_in(code, oracle_desc(code, s)) != s) return false;
  return true;
}

inline bool oracle_is_sc(const Code& code, std::size_t t) {
  const auto subsets = oracle_coalitions(code.size(), t);
  for (std::size_t a = 0; a < subsets.size(); ++a)
    for (std::size_t b = a + 1; b < subsets.size(); ++b)
      if (oracle_desc(code, subsets[a]) == oracle_desc(code, subsets[b])) return false;
  return true;
}

/// Definition of strong separability, quantifying C' over every subset of C.
inline bool oracle_is_ssc(const Code& code, std::size_t t) {
  const std::size_t m = code.size();
  std::vector<WordSet> all_desc(std::size_t{1} << m);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) all_desc[mask] = oracle_desc(code, mask);
  for (auto c0 : oracle_coalitions(m, t)) {
    std::uint64_t meet = ~std::uint64_t{0};
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask)
      if (all_desc[mask] == all_desc[c0]) meet &= mask;
    if (meet != c0) return false;
  }
  return true;
}

/// Random (n, M, q) code with M distinct words; M is clipped to q^n.
inline Code random_code(std::mt19937_64& rng, std::size_t n, std::size_t m, std::uint32_t q) {
  std::size_t cap = 1;
  for (std::size_t k = 0; k < n; ++k) cap *= q;
  m = std::min(m, cap);
  std::uniform_int_distribution<Letter> letter(0, q - 1);
  std::set<Word> seen;
  std::vector<Word> rows;
  while (rows.size() < m) {
    Word w(n);
    for (auto& l : w) l = letter(rng);
    if (seen.insert(w).second) rows.push_back(w);
  }
  return make_code(q, std::move(rows));
}

}  // namespace sepcode::testing
