#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "sepcode/code.hpp"

namespace sepcode {

/// Sorted, duplicate-free set of letters occurring at one position.
using LetterSet = std::vector<Letter>;

/// Product representation R(1) x ... x R(n) of a descendant code. Every
/// descendant comparison is n per-position set equalities on this form.
class FeasibleSet {
 public:
  FeasibleSet() = default;
  /// Normalizes each position (sort + dedupe); rejects empty positions.
  explicit FeasibleSet(std::vector<LetterSet> positions);

  std::size_t length() const { return positions_.size(); }
  const LetterSet& at(std::size_t i) const { return positions_.at(i); }
  const std::vector<LetterSet>& positions() const { return positions_; }

  bool contains(const Codeword& w) const;
  bool is_subset_of(const FeasibleSet& other) const;

  /// |R(1)| * ... * |R(n)|, saturating at SIZE_MAX.
  std::size_t cardinality() const;

  /// Explicit member list; throws InstanceTooLarge above `limit` words.
  std::vector<Codeword> enumerate(std::size_t limit = 1'000'000) const;

  std::size_t fingerprint() const;

  bool operator==(const FeasibleSet&) const = default;

 private:
  std::vector<LetterSet> positions_;
};

/// desc(words); words must be non-empty and of uniform length.
FeasibleSet descendant(std::span<const Codeword> words);
FeasibleSet descendant(const Code& code, std::span<const std::size_t> indices);

bool desc_contains(const FeasibleSet& r, const Codeword& w);

/// Indices of codewords of `code` lying in desc of the coalition.
IndexSet desc_intersect_code(const Code& code, const Coalition& coalition);
IndexSet desc_intersect_code(const Code& code, std::span<const std::size_t> members);
IndexSet desc_intersect_code(const Code& code, const FeasibleSet& r);

/// Words having `g` at position `j` (0-based) with that position removed.
std::set<Codeword> shortened(const Code& code, std::size_t j, Letter g);

}  // namespace sepcode

template <>
struct std::hash<sepcode::FeasibleSet> {
  std::size_t operator()(const sepcode::FeasibleSet& r) const noexcept { return r.fingerprint(); }
};
