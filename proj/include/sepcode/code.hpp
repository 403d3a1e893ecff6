#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sepcode {

/// Canonical alphabet letter, always in 0..q-1 once stored in a Code.
using Letter = std::uint32_t;

/// Sorted, duplicate-free list of codeword indices (0-based).
using IndexSet = std::vector<std::size_t>;

/// Raised when an instance exceeds a configured enumeration cap.
class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Mixed alphabet used by the length-3 construction: Z_{q-s} plus s absorbing
// infinity letters. Only construction routines do arithmetic on Symbols; codes
// store the canonical relabeling (finite u -> u, inf_i -> (q-s)+i).
// ---------------------------------------------------------------------------

class Symbol {
 public:
  enum class Kind : std::uint8_t { finite, infinity };

  static constexpr Symbol finite(std::uint32_t value) { return Symbol(Kind::finite, value); }
  static constexpr Symbol infinity(std::uint32_t index) { return Symbol(Kind::infinity, index); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_infinity() const { return kind_ == Kind::infinity; }
  /// Residue for finite symbols, infinity index otherwise.
  constexpr std::uint32_t value() const { return value_; }

  constexpr auto operator<=>(const Symbol&) const = default;

 private:
  constexpr Symbol(Kind k, std::uint32_t v) : kind_(k), value_(v) {}
  Kind kind_;
  std::uint32_t value_;
};

class MixedAlphabet {
 public:
  /// q letters total: residues modulo (q - infinities) plus `infinities` absorbing symbols.
  MixedAlphabet(std::uint32_t q, std::uint32_t infinities);

  std::uint32_t size() const { return q_; }
  std::uint32_t modulus() const { return q_ - s_; }
  std::uint32_t infinities() const { return s_; }

  Symbol residue(std::int64_t v) const;
  Symbol infinity(std::uint32_t index) const;

  Symbol add(Symbol a, Symbol b) const;
  Symbol mul(Symbol a, Symbol b) const;

  Letter canonical(Symbol x) const;
  Symbol from_canonical(Letter l) const;

 private:
  void check(Symbol x) const;
  std::uint32_t q_;
  std::uint32_t s_;
};

// ---------------------------------------------------------------------------

class Codeword {
 public:
  Codeword() = default;
  explicit Codeword(std::vector<Letter> entries) : entries_(std::move(entries)) {}
  Codeword(std::initializer_list<Letter> entries) : entries_(entries) {}

  std::size_t length() const { return entries_.size(); }
  Letter operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Letter> entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  auto operator<=>(const Codeword&) const = default;

  std::string to_string() const;

 private:
  std::vector<Letter> entries_;
};

/// An (n, M, q) code: M distinct length-n words over {0..q-1}. Stored as an
/// ordered list so indices are stable; verdicts treat it as a set.
class Code {
 public:
  Code(std::size_t n, std::uint32_t q, std::vector<Codeword> words);

  std::size_t length() const { return n_; }
  std::size_t size() const { return words_.size(); }
  std::uint32_t alphabet_size() const { return q_; }
  bool is_binary() const { return q_ == 2; }

  const Codeword& word(std::size_t i) const { return words_.at(i); }
  const std::vector<Codeword>& words() const { return words_; }

  /// Index of `w`, or size() when absent.
  std::size_t find(const Codeword& w) const;

  /// Codewords at the given indices, in index order.
  std::vector<Codeword> select(std::span<const std::size_t> indices) const;

  friend bool operator==(const Code& a, const Code& b);

 private:
  std::size_t n_;
  std::uint32_t q_;
  std::vector<Codeword> words_;
  std::map<Codeword, std::size_t> index_;
};

/// Non-empty set of distinct, valid codeword indices into a Code.
class Coalition {
 public:
  Coalition(const Code& code, IndexSet members);
  const IndexSet& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

 private:
  IndexSet members_;
};

std::size_t hamming(const Codeword& u, const Codeword& v);

}  // namespace sepcode
