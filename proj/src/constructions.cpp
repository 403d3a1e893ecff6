#include "sepcode/constructions.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace sepcode {

namespace {

void check_params(std::int64_t q, std::int64_t s) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  if (s < 0 || 2 * s > q) throw std::invalid_argument("s out of range");
  if ((q - s) % 2 == 0) throw std::invalid_argument("q-s must be odd");
}

std::int64_t defect(std::int64_t m) { return m % 4 == 0 ? 4 - m : std::min(m, 8 - m); }

}  // namespace

Code one_hot_compose(const Code& code) {
  const std::size_t q = code.alphabet_size();
  std::vector<Codeword> out;
  out.reserve(code.size());
  for (const auto& w : code.words()) {
    std::vector<Letter> bits(code.length() * q, 0);
    for (std::size_t j = 0; j < code.length(); ++j) bits[j * q + w[j]] = 1;
    out.emplace_back(std::move(bits));
  }
  return Code(code.length() * q, 2, std::move(out));
}

std::int64_t predicted_size(std::int64_t q, std::int64_t s) {
  check_params(q, s);
  return q * q + s * q - 2 * s * s;
}

Code build_length3(std::int64_t q, std::int64_t s) {
  check_params(q, s);
  const MixedAlphabet alpha(static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(s));
  const auto modulus = static_cast<std::int64_t>(alpha.modulus());

  using Column = std::array<Symbol, 3>;
  std::vector<Codeword> words;
  words.reserve(static_cast<std::size_t>(q * q + s * q - 2 * s * s));

  auto orbit = [&](const std::vector<Column>& base) {
    for (const auto& col : base) {
      for (std::int64_t g = 0; g < modulus; ++g) {
        const Symbol shift = alpha.residue(g);
        std::vector<Letter> e;
        for (const Symbol& x : col) e.push_back(alpha.canonical(alpha.add(x, shift)));
        words.emplace_back(std::move(e));
      }
    }
  };

  for (std::int64_t i = 0; i < s; ++i) {
    const Symbol inf = alpha.infinity(static_cast<std::uint32_t>(i));
    const Symbol zero = alpha.residue(0);
    const Symbol r = alpha.residue(i);
    orbit({Column{inf, zero, r}, Column{r, inf, zero}, Column{zero, r, inf}});
  }
  std::vector<Column> main_base;
  for (std::int64_t j = 0; j < modulus; ++j)
    main_base.push_back(Column{alpha.residue(0), alpha.residue(j), alpha.residue(2 * j)});
  orbit(main_base);

  try {
    return Code(3, static_cast<std::uint32_t>(q), std::move(words));
  } catch (const std::invalid_argument& e) {
    throw std::logic_error("build_length3(" + std::to_string(q) + ", " + std::to_string(s) +
                           ") produced an invalid code: " + e.what());
  }
}

ConstructionPlan plan_for(std::int64_t q, std::int64_t s) {
  const std::int64_t size = predicted_size(q, s);
  const std::int64_t m = q % 8;
  return {q, s, m, defect(m), size};
}

ConstructionPlan optimal_s(std::int64_t q) {
  if (q < 4) throw std::invalid_argument("optimal_s requires q >= 4");
  const std::int64_t m = q % 8;
  static constexpr std::array<std::int64_t, 8> offset = {-4, -1, 2, -3, 0, 3, -2, 1};
  const std::int64_t s = (q + offset[static_cast<std::size_t>(m)]) / 4;
  ConstructionPlan plan = plan_for(q, s);
  const std::int64_t w = plan.w;
  if (8 * plan.predicted_M != 9 * q * q - w * w)
    throw std::logic_error("optimal_s: closed form disagrees for q = " + std::to_string(q));
  return plan;
}

}  // namespace sepcode
