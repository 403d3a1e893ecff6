#include "sepcode/descendant.hpp"

#include <algorithm>
#include <limits>

namespace sepcode {

FeasibleSet::FeasibleSet(std::vector<LetterSet> positions) : positions_(std::move(positions)) {
  for (auto& p : positions_) {
    if (p.empty()) throw std::invalid_argument("feasible set position must be non-empty");
    std::ranges::sort(p);
    p.erase(std::unique(p.begin(), p.end()), p.end());
  }
}

bool FeasibleSet::contains(const Codeword& w) const {
  if (w.length() != positions_.size()) throw std::invalid_argument("desc_contains: length mismatch");
  for (std::size_t i = 0; i < positions_.size(); ++i)
    if (!std::ranges::binary_search(positions_[i], w[i])) return false;
  return true;
}

bool FeasibleSet::is_subset_of(const FeasibleSet& other) const {
  if (length() != other.length()) return false;
  for (std::size_t i = 0; i < positions_.size(); ++i)
    if (!std::ranges::includes(other.positions_[i], positions_[i])) return false;
  return true;
}

std::size_t FeasibleSet::cardinality() const {
  std::size_t total = 1;
  for (const auto& p : positions_) {
    if (total > std::numeric_limits<std::size_t>::max() / p.size())
      return std::numeric_limits<std::size_t>::max();
    total *= p.size();
  }
  return total;
}

std::vector<Codeword> FeasibleSet::enumerate(std::size_t limit) const {
  if (cardinality() > limit) throw InstanceTooLarge("descendant code too large to enumerate");
  std::vector<Codeword> out;
  std::vector<std::size_t> odometer(positions_.size(), 0);
  std::vector<Letter> cur(positions_.size());
  while (true) {
    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = positions_[i][odometer[i]];
    out.emplace_back(cur);
    bool advanced = false;
    for (std::size_t k = cur.size(); k-- > 0;) {
      if (++odometer[k] < positions_[k].size()) {
        advanced = true;
        break;
      }
      odometer[k] = 0;
    }
    if (!advanced) return out;
  }
}

std::size_t FeasibleSet::fingerprint() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::size_t v) { h = (h ^ v) * 0x100000001b3ULL; };
  for (const auto& p : positions_) {
    mix(p.size());
    for (Letter l : p) mix(l);
  }
  return h;
}

FeasibleSet descendant(std::span<const Codeword> words) {
  if (words.empty()) throw std::invalid_argument("empty codeword set");
  const std::size_t n = words.front().length();
  std::vector<LetterSet> pos(n);
  for (const auto& w : words) {
    if (w.length() != n) throw std::invalid_argument("descendant: codewords of unequal length");
    for (std::size_t i = 0; i < n; ++i) pos[i].push_back(w[i]);
  }
  return FeasibleSet(std::move(pos));
}

FeasibleSet descendant(const Code& code, std::span<const std::size_t> indices) {
  if (indices.empty()) throw std::invalid_argument("empty codeword set");
  std::vector<LetterSet> pos(code.length());
  for (auto idx : indices) {
    const auto& w = code.word(idx);
    for (std::size_t i = 0; i < pos.size(); ++i) pos[i].push_back(w[i]);
  }
  return FeasibleSet(std::move(pos));
}

bool desc_contains(const FeasibleSet& r, const Codeword& w) { return r.contains(w); }

IndexSet desc_intersect_code(const Code& code, const FeasibleSet& r) {
  if (r.length() != code.length()) throw std::invalid_argument("desc_intersect_code: length mismatch");
  IndexSet out;
  for (std::size_t i = 0; i < code.size(); ++i)
    if (r.contains(code.word(i))) out.push_back(i);
  return out;
}

IndexSet desc_intersect_code(const Code& code, std::span<const std::size_t> members) {
  return desc_intersect_code(code, descendant(code, members));
}

IndexSet desc_intersect_code(const Code& code, const Coalition& coalition) {
  return desc_intersect_code(code, std::span<const std::size_t>(coalition.members()));
}

std::set<Codeword> shortened(const Code& code, std::size_t j, Letter g) {
  if (j >= code.length()) throw std::out_of_range("shortened: invalid position");
  std::set<Codeword> out;
  for (const auto& w : code.words()) {
    if (w[j] != g) continue;
    std::vector<Letter> rest;
    rest.reserve(w.length() - 1);
    for (std::size_t i = 0; i < w.length(); ++i)
      if (i != j) rest.push_back(w[i]);
    out.emplace(std::move(rest));
  }
  return out;
}

}  // namespace sepcode
