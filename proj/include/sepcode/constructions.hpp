#pragma once

#include <cstdint>

#include "sepcode/code.hpp"

namespace sepcode {

/// Parameters of a length-3 construction over q letters with s infinities.
struct ConstructionPlan {
  std::int64_t q;
  std::int64_t s;
  std::int64_t m;            ///< q mod 8
  std::int64_t w;            ///< defect: predicted_M = (9q^2 - w^2) / 8 for the table's s
  std::int64_t predicted_M;  ///< q^2 + sq - 2s^2
};

/// Maps each letter i to the q-bit unit vector e_{i+1}: an (n, M, q) code
/// becomes an (nq, M, 2) code, block j encoding position j.
Code one_hot_compose(const Code& code);

/// q^2 + sq - 2s^2. Requires 0 <= s <= q/2 and q - s odd.
std::int64_t predicted_size(std::int64_t q, std::int64_t s);

/// Strongly 2-separable (3, q^2 + sq - 2s^2, q) code: orbits under Z_{q-s}
/// translation of the columns (inf_i, i, 0)-cycles for i < s, then of
/// (0, j, 2j). Infinity letters are relabeled to q-s .. q-1.
Code build_length3(std::int64_t q, std::int64_t s);

/// The s maximizing q^2 + sq - 2s^2 subject to q - s odd, picked by q mod 8.
ConstructionPlan optimal_s(std::int64_t q);

/// Plan for an explicit s (m and w still derived from q).
ConstructionPlan plan_for(std::int64_t q, std::int64_t s);

}  // namespace sepcode
