#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>

#include "sepcode/code.hpp"

namespace sepcode {

struct VerifyOptions {
  /// Largest coalition bound accepted; enumeration is O(M^t).
  std::size_t max_t = 4;
  /// Upper limit on enumerated subsets before InstanceTooLarge.
  std::size_t subset_cap = 10'000'000;
  /// Largest |desc(C0) ∩ C| the naive SSC oracle will expand into subsets.
  std::size_t oracle_bound = 25;
  /// Worker threads for coalition scans. Verdicts do not depend on it.
  unsigned threads = 1;
};

/// Coalition `coalition` (|S| <= t) can produce `framed`, which lies outside it.
struct FrameWitness {
  IndexSet coalition;
  std::size_t framed;
};

/// Two distinct sets of size <= t with identical descendant codes.
struct SeparationWitness {
  IndexSet first;
  IndexSet second;
};

/// desc(alternative) == desc(coalition) while coalition is not contained in alternative.
struct StrongSeparationWitness {
  IndexSet coalition;
  IndexSet alternative;
};

using Witness = std::variant<FrameWitness, SeparationWitness, StrongSeparationWitness>;

/// The four length-3 configurations of desc({c1,c2}) ∩ C that block strong
/// separability (c1, c2 at distance 3; c3..c5 the neighbours of c1 below).
///   I:   c3=(a1,b1,e2), c4=(a1,b2,e1)
///   II:  c3=(a1,b1,e2), c5=(a2,b1,e1)
///   III: c4=(a1,b2,e1), c5=(a2,b1,e1)
///   IV:  c3, c4, c5
enum class ForbiddenType { I, II, III, IV };

std::string_view to_string(ForbiddenType t);

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;
  /// Set only by forbidden_type_scan on failure.
  std::optional<ForbiddenType> forbidden_type;

  static Verdict pass() { return {}; }
  static Verdict fail(Witness w, std::optional<ForbiddenType> type = std::nullopt) {
    return {false, std::move(w), type};
  }
};

/// t-frameproof: desc(S) ∩ C = S for every S with |S| <= t.
Verdict is_fpc(const Code& code, std::size_t t, const VerifyOptions& opts = {});

/// t-separable: distinct subsets of size <= t have distinct descendants.
/// Hashes every subset's FeasibleSet; collisions are re-checked exactly.
Verdict is_sc(const Code& code, std::size_t t, const VerifyOptions& opts = {});

/// Strongly t-separable, via the delete-one test: for each coalition C0 with
/// D = desc(C0) ∩ C, no x in C0 may satisfy desc(D \ {x}) == desc(C0).
/// Every C' with desc(C') == desc(C0) lies inside D, so this is equivalent to
/// intersecting all such C'. The witness is pruned to an inclusion-minimal C'.
Verdict is_ssc(const Code& code, std::size_t t, const VerifyOptions& opts = {});

/// Strong separability by literal subset enumeration of every D. Exponential
/// in |D|; throws InstanceTooLarge("oracle bound") past opts.oracle_bound.
Verdict is_ssc_naive(const Code& code, std::size_t t, const VerifyOptions& opts = {});

/// Length-3 only. For a 2-separable code, fails iff some distance-3 pair has
/// desc ∩ C of Type I-IV; then equals is_ssc(code, 2). Throws if the code is
/// not 2-separable.
Verdict forbidden_type_scan(const Code& code);

/// Length-3 only: |A^j_g1 ∩ A^j_g2| <= 1 for every position j and letters
/// g1 != g2, where A^j_g is the code shortened at j on g. Equals is_sc(code, 2).
Verdict shortened_sc_check(const Code& code);

/// Length-3 only: max |desc(C0) ∩ C| over |C0| <= 2. A value <= 3 implies the
/// code is strongly 2-separable.
std::size_t desc_cap_bound(const Code& code);

/// Re-checks a witness against the raw definition it claims to violate.
bool witness_is_valid(const Code& code, std::size_t t, const Witness& w);

}  // namespace sepcode
