#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sepcode/code.hpp"
#include "sepcode/descendant.hpp"

namespace sepcode {

/// One firing of the uniqueness test: `index` is the sole candidate carrying
/// `bit` at `position`.
struct Evidence {
  std::size_t position;
  Letter bit;
  std::size_t index;
  bool operator==(const Evidence&) const = default;
};

struct TraceReport {
  enum class Outcome { identified, overflow };

  Outcome outcome = Outcome::identified;
  /// Identified set (or the oversize set U on overflow), sorted.
  IndexSet colluders;
  /// Codewords consistent with every pinned position of R.
  IndexSet candidates;
  std::vector<Evidence> evidence;
  /// (position, codeword) cell visits; at most 2 * n * M.
  std::uint64_t operations = 0;

  bool identified() const { return outcome == Outcome::identified; }
  static constexpr const char* overflow_message = "The set of colluders has size at least t+1";
};

/// R(i) = bits the coalition shows at position i. Binary codes only.
FeasibleSet coalition_feasible_set(const Code& code, const Coalition& coalition);

/// Parses n tokens from {0, 1, *} (whitespace optional) into a binary R.
FeasibleSet parse_binary_feasible_set(std::string_view text);
std::string format_binary_feasible_set(const FeasibleSet& r);

/// Frameproof tracer: U1 = words with 1 wherever R = {1}, U2 = words with 0
/// wherever R = {0}; reports U1 ∩ U2, or overflow when it exceeds t.
TraceReport lacc_identify(const Code& code, const FeasibleSet& r, std::size_t t);

/// Strongly-separable tracer. Filters candidates as above, then for every
/// position k adds the candidate that is alone in carrying 1 (or alone in
/// carrying 0) at k. Uniqueness is judged per position.
/// Throws "infeasible R" when no codeword survives the filter.
TraceReport ssc_trace(const Code& code, const FeasibleSet& r, std::size_t t);

}  // namespace sepcode
