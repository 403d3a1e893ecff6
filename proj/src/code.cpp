#include "sepcode/code.hpp"

#include <algorithm>
#include <sstream>

namespace sepcode {

MixedAlphabet::MixedAlphabet(std::uint32_t q, std::uint32_t infinities) : q_(q), s_(infinities) {
  if (s_ >= q_) throw std::invalid_argument("mixed alphabet needs at least one residue");
}

Symbol MixedAlphabet::residue(std::int64_t v) const {
  const auto m = static_cast<std::int64_t>(modulus());
  return Symbol::finite(static_cast<std::uint32_t>(((v % m) + m) % m));
}

Symbol MixedAlphabet::infinity(std::uint32_t index) const {
  if (index >= s_) throw std::invalid_argument("infinity index out of range");
  return Symbol::infinity(index);
}

void MixedAlphabet::check(Symbol x) const {
  if (x.is_infinity() ? x.value() >= s_ : x.value() >= modulus())
    throw std::invalid_argument("symbol not in alphabet");
}

// inf_i absorbs every finite operand. inf_i (+) inf_j is never formed by the
// construction and is rejected.
Symbol MixedAlphabet::add(Symbol a, Symbol b) const {
  check(a);
  check(b);
  if (a.is_infinity() && b.is_infinity()) throw std::domain_error("sum of two infinity symbols");
  if (a.is_infinity()) return a;
  if (b.is_infinity()) return b;
  return residue(static_cast<std::int64_t>(a.value()) + b.value());
}

Symbol MixedAlphabet::mul(Symbol a, Symbol b) const {
  check(a);
  check(b);
  if (a.is_infinity() && b.is_infinity()) throw std::domain_error("product of two infinity symbols");
  if (a.is_infinity()) return a;
  if (b.is_infinity()) return b;
  return residue(static_cast<std::int64_t>(a.value()) * b.value());
}

Letter MixedAlphabet::canonical(Symbol x) const {
  check(x);
  return x.is_infinity() ? modulus() + x.value() : x.value();
}

Symbol MixedAlphabet::from_canonical(Letter l) const {
  if (l >= q_) throw std::invalid_argument("letter not in alphabet");
  return l < modulus() ? Symbol::finite(l) : Symbol::infinity(l - modulus());
}

std::string Codeword::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
  os << ')';
  return os.str();
}

Code::Code(std::size_t n, std::uint32_t q, std::vector<Codeword> words)
    : n_(n), q_(q), words_(std::move(words)) {
  if (n_ < 1) throw std::invalid_argument("code length must be at least 1");
  if (q_ < 2) throw std::invalid_argument("alphabet size must be at least 2");
  if (words_.empty()) throw std::invalid_argument("code must contain at least one codeword");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const auto& w = words_[i];
    if (w.length() != n_)
      throw std::invalid_argument("codeword " + std::to_string(i) + " has length " +
                                  std::to_string(w.length()) + ", expected " + std::to_string(n_));
    for (Letter l : w)
      if (l >= q_)
        throw std::invalid_argument("codeword " + std::to_string(i) + " uses symbol " +
                                    std::to_string(l) + " outside alphabet of size " +
                                    std::to_string(q_));
    if (!index_.emplace(w, i).second)
      throw std::invalid_argument("duplicate codeword " + w.to_string());
  }
}

std::size_t Code::find(const Codeword& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? words_.size() : it->second;
}

std::vector<Codeword> Code::select(std::span<const std::size_t> indices) const {
  std::vector<Codeword> out;
  out.reserve(indices.size());
  for (auto i : indices) out.push_back(word(i));
  return out;
}

bool operator==(const Code& a, const Code& b) {
  if (a.n_ != b.n_ || a.q_ != b.q_ || a.size() != b.size()) return false;
  return std::ranges::equal(a.index_, b.index_, {}, [](const auto& kv) { return kv.first; },
                            [](const auto& kv) { return kv.first; });
}

Coalition::Coalition(const Code& code, IndexSet members) : members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("coalition must be non-empty");
  std::ranges::sort(members_);
  if (std::ranges::adjacent_find(members_) != members_.end())
    throw std::invalid_argument("coalition members must be distinct");
  if (members_.back() >= code.size())
    throw std::out_of_range("coalition member " + std::to_string(members_.back()) +
                            " out of range for code of size " + std::to_string(code.size()));
}

std::size_t hamming(const Codeword& u, const Codeword& v) {
  if (u.length() != v.length()) throw std::invalid_argument("hamming: length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < u.length(); ++i) d += u[i] != v[i];
  return d;
}

}  // namespace sepcode
