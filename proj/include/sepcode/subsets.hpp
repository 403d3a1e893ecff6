#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>

#include "sepcode/code.hpp"

namespace sepcode {

__extension__ using uint128 = unsigned __int128;

/// Number of subsets of {0..m-1} with 1..max_size elements, saturating.
inline std::size_t count_subsets(std::size_t m, std::size_t max_size) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t total = 0;
  std::size_t binom = 1;  // C(m, k)
  for (std::size_t k = 1; k <= max_size && k <= m; ++k) {
    // C(m, k) = C(m, k-1) * (m - k + 1) / k, done in 128 bits to avoid overflow.
    const uint128 next = static_cast<uint128>(binom) * (m - k + 1) / k;
    if (next > kMax) return kMax;
    binom = static_cast<std::size_t>(next);
    if (total > kMax - binom) return kMax;
    total += binom;
  }
  return total;
}

namespace detail {

template <class Visit>
bool extend_subsets(IndexSet& cur, std::size_t m, std::size_t max_size, Visit& visit) {
  if (visit(static_cast<const IndexSet&>(cur))) return true;
  if (cur.size() == max_size) return false;
  for (std::size_t next = cur.back() + 1; next < m; ++next) {
    cur.push_back(next);
    const bool stop = extend_subsets(cur, m, max_size, visit);
    cur.pop_back();
    if (stop) return true;
  }
  return false;
}

}  // namespace detail

/// Visits every subset of {0..m-1} whose smallest element is `first` and whose
/// size is at most `max_size`, in lexicographic order of sorted index lists.
/// `visit` returns true to stop; the function returns whether it stopped.
template <class Visit>
bool for_each_subset_from(std::size_t first, std::size_t m, std::size_t max_size, Visit&& visit) {
  if (first >= m || max_size == 0) return false;
  IndexSet cur{first};
  cur.reserve(max_size);
  return detail::extend_subsets(cur, m, max_size, visit);
}

/// All non-empty subsets of size <= max_size, lexicographic order.
template <class Visit>
bool for_each_subset(std::size_t m, std::size_t max_size, Visit&& visit) {
  for (std::size_t first = 0; first < m; ++first)
    if (for_each_subset_from(first, m, max_size, visit)) return true;
  return false;
}

}  // namespace sepcode
