#include "sepcode/verifiers.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>

#include "sepcode/descendant.hpp"
#include "sepcode/subsets.hpp"

namespace sepcode {

std::string_view to_string(ForbiddenType t) {
  switch (t) {
    case ForbiddenType::I: return "I";
    case ForbiddenType::II: return "II";
    case ForbiddenType::III: return "III";
    case ForbiddenType::IV: return "IV";
  }
  return "?";
}

namespace {

void check_t(const Code& code, std::size_t t, const VerifyOptions& opts) {
  if (t < 2) throw std::invalid_argument("t must be at least 2");
  if (t > opts.max_t)
    throw std::invalid_argument("t = " + std::to_string(t) + " exceeds configured maximum " +
                                std::to_string(opts.max_t));
  if (count_subsets(code.size(), t) > opts.subset_cap) throw InstanceTooLarge("instance too large");
}

void check_length3(const Code& code, std::string_view op) {
  if (code.length() != 3)
    throw std::invalid_argument(std::string(op) + " requires a code of length 3");
}

bool lex_less(const IndexSet& a, const IndexSet& b) { return std::ranges::lexicographical_compare(a, b); }

bool contains_all(const IndexSet& super, const IndexSet& sub) { return std::ranges::includes(super, sub); }

IndexSet without(const IndexSet& s, std::size_t x) {
  IndexSet out;
  out.reserve(s.size());
  for (auto v : s)
    if (v != x) out.push_back(v);
  return out;
}

/// Lexicographically first coalition (|S| <= t) for which `check` yields a
/// result. Coalitions are sharded by smallest member; since all coalitions
/// starting at f precede those starting at f+1, the lowest shard with a hit
/// holds the global answer regardless of scheduling.
template <class Result, class Check>
std::optional<Result> first_failure(std::size_t m, std::size_t t, unsigned threads, Check check) {
  std::vector<std::optional<Result>> per_first(m);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{m};

  auto worker = [&] {
    while (true) {
      const std::size_t f = next.fetch_add(1);
      if (f >= m || f > best.load()) return;
      for_each_subset_from(f, m, t, [&](const IndexSet& s) {
        if (auto r = check(s)) {
          per_first[f] = std::move(r);
          return true;
        }
        return false;
      });
      if (per_first[f]) {
        std::size_t cur = best.load();
        while (f < cur && !best.compare_exchange_weak(cur, f)) {
        }
      }
    }
  };

  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(m)));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  }
  for (auto& r : per_first)
    if (r) return r;
  return std::nullopt;
}

/// Removes members from `alt` (highest index first) while desc stays equal to
/// `target`, giving an inclusion-minimal alternative set.
IndexSet prune_alternative(const Code& code, IndexSet alt, const FeasibleSet& target) {
  for (std::size_t k = alt.size(); k-- > 0;) {
    if (alt.size() == 1) break;
    IndexSet trial = alt;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(k));
    if (descendant(code, trial) == target) alt = std::move(trial);
  }
  return alt;
}

Codeword insert_at(const Codeword& rest, std::size_t j, Letter g) {
  std::vector<Letter> e(rest.begin(), rest.end());
  e.insert(e.begin() + static_cast<std::ptrdiff_t>(j), g);
  return Codeword(std::move(e));
}

IndexSet sorted_pair(std::size_t a, std::size_t b) { return a < b ? IndexSet{a, b} : IndexSet{b, a}; }

}  // namespace

Verdict is_fpc(const Code& code, std::size_t t, const VerifyOptions& opts) {
  check_t(code, t, opts);
  auto hit = first_failure<FrameWitness>(code.size(), t, opts.threads,
                                         [&](const IndexSet& s) -> std::optional<FrameWitness> {
                                           if (s.size() == 1) return std::nullopt;
                                           for (auto i : desc_intersect_code(code, s))
                                             if (!std::ranges::binary_search(s, i))
                                               return FrameWitness{s, i};
                                           return std::nullopt;
                                         });
  return hit ? Verdict::fail(std::move(*hit)) : Verdict::pass();
}

Verdict is_sc(const Code& code, std::size_t t, const VerifyOptions& opts) {
  check_t(code, t, opts);
  std::unordered_multimap<std::size_t, IndexSet> seen;
  std::optional<SeparationWitness> hit;
  for_each_subset(code.size(), t, [&](const IndexSet& s) {
    const FeasibleSet r = descendant(code, s);
    const std::size_t key = r.fingerprint();
    auto [lo, hi] = seen.equal_range(key);
    for (auto it = lo; it != hi; ++it) {
      if (descendant(code, it->second) == r) {
        hit = SeparationWitness{it->second, s};
        return true;
      }
    }
    seen.emplace(key, s);
    return false;
  });
  return hit ? Verdict::fail(std::move(*hit)) : Verdict::pass();
}

Verdict is_ssc(const Code& code, std::size_t t, const VerifyOptions& opts) {
  check_t(code, t, opts);
  auto hit = first_failure<StrongSeparationWitness>(
      code.size(), t, opts.threads, [&](const IndexSet& c0) -> std::optional<StrongSeparationWitness> {
        if (c0.size() == 1) return std::nullopt;
        const FeasibleSet r = descendant(code, c0);
        const IndexSet d = desc_intersect_code(code, r);
        for (auto x : c0) {
          IndexSet rest = without(d, x);
          if (descendant(code, rest) == r)
            return StrongSeparationWitness{c0, prune_alternative(code, std::move(rest), r)};
        }
        return std::nullopt;
      });
  return hit ? Verdict::fail(std::move(*hit)) : Verdict::pass();
}

Verdict is_ssc_naive(const Code& code, std::size_t t, const VerifyOptions& opts) {
  check_t(code, t, opts);
  const std::size_t bound = std::min<std::size_t>(opts.oracle_bound, 62);
  std::optional<StrongSeparationWitness> hit;
  for_each_subset(code.size(), t, [&](const IndexSet& c0) {
    const FeasibleSet r = descendant(code, c0);
    const IndexSet d = desc_intersect_code(code, r);
    if (d.size() > bound) throw InstanceTooLarge("oracle bound");

    // S(C0): every subset of D with the same descendant. Subsets of C outside
    // D cannot qualify since each member of C' lies in desc(C') = desc(C0).
    std::vector<IndexSet> same;
    const std::uint64_t full = std::uint64_t{1} << d.size();
    for (std::uint64_t mask = 1; mask < full; ++mask) {
      IndexSet sub;
      for (std::size_t b = 0; b < d.size(); ++b)
        if (mask >> b & 1U) sub.push_back(d[b]);
      if (descendant(code, sub) == r) same.push_back(std::move(sub));
    }

    IndexSet meet = same.front();
    for (const auto& s : same) {
      IndexSet next;
      std::ranges::set_intersection(meet, s, std::back_inserter(next));
      meet = std::move(next);
    }
    if (meet == c0) return false;

    const IndexSet* best = nullptr;
    for (const auto& s : same) {
      if (contains_all(s, c0)) continue;
      if (!best || s.size() < best->size() || (s.size() == best->size() && lex_less(s, *best)))
        best = &s;
    }
    hit = StrongSeparationWitness{c0, *best};
    return true;
  });
  return hit ? Verdict::fail(std::move(*hit)) : Verdict::pass();
}

Verdict shortened_sc_check(const Code& code) {
  check_length3(code, "shortened_sc_check");
  for (std::size_t j = 0; j < 3; ++j) {
    std::map<Letter, std::set<Codeword>> by_letter;
    for (const auto& w : code.words()) by_letter[w[j]];
    for (auto& [g, set] : by_letter) set = shortened(code, j, g);

    for (auto a = by_letter.begin(); a != by_letter.end(); ++a) {
      for (auto b = std::next(a); b != by_letter.end(); ++b) {
        std::vector<Codeword> common;
        std::ranges::set_intersection(a->second, b->second, std::back_inserter(common));
        if (common.size() <= 1) continue;
        const Codeword& u = common[0];
        const Codeword& v = common[1];
        const auto idx = [&](const Codeword& rest, Letter g) { return code.find(insert_at(rest, j, g)); };
        return Verdict::fail(SeparationWitness{sorted_pair(idx(u, a->first), idx(v, b->first)),
                                               sorted_pair(idx(v, a->first), idx(u, b->first))});
      }
    }
  }
  return Verdict::pass();
}

std::size_t desc_cap_bound(const Code& code) {
  check_length3(code, "desc_cap_bound");
  std::size_t best = 1;
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i + 1; j < code.size(); ++j)
      best = std::max(best, desc_intersect_code(code, IndexSet{i, j}).size());
  return best;
}

Verdict forbidden_type_scan(const Code& code) {
  check_length3(code, "forbidden_type_scan");
  if (!shortened_sc_check(code).holds)
    throw std::invalid_argument("forbidden_type_scan requires a 2-separable code");

  for (std::size_t i = 0; i < code.size(); ++i) {
    for (std::size_t j = i + 1; j < code.size(); ++j) {
      if (hamming(code.word(i), code.word(j)) != 3) continue;
      const IndexSet d = desc_intersect_code(code, IndexSet{i, j});
      std::set<std::size_t> extras(d.begin(), d.end());
      extras.erase(i);
      extras.erase(j);
      if (extras.size() < 2) continue;

      for (auto [p, o] : {std::pair{i, j}, std::pair{j, i}}) {
        const Codeword& c1 = code.word(p);
        const Codeword& c2 = code.word(o);
        const std::array<std::size_t, 3> nb = {
            code.find(Codeword{c1[0], c1[1], c2[2]}),   // c3
            code.find(Codeword{c1[0], c2[1], c1[2]}),   // c4
            code.find(Codeword{c2[0], c1[1], c1[2]})};  // c5
        struct Pattern {
          ForbiddenType type;
          std::vector<int> members;  // offsets into nb
          bool keep_c2;
        };
        static const std::array<Pattern, 4> patterns = {{{ForbiddenType::I, {0, 1}, true},
                                                         {ForbiddenType::II, {0, 2}, true},
                                                         {ForbiddenType::III, {1, 2}, true},
                                                         {ForbiddenType::IV, {0, 1, 2}, false}}};
        for (const auto& pat : patterns) {
          std::set<std::size_t> want;
          for (int k : pat.members) want.insert(nb[static_cast<std::size_t>(k)]);
          if (want != extras) continue;
          IndexSet alt(want.begin(), want.end());
          if (pat.keep_c2) alt.push_back(o);
          std::ranges::sort(alt);
          return Verdict::fail(StrongSeparationWitness{IndexSet{i, j}, std::move(alt)}, pat.type);
        }
      }
    }
  }
  return Verdict::pass();
}

bool witness_is_valid(const Code& code, std::size_t t, const Witness& w) {
  const auto valid = [&](const IndexSet& s) {
    return !s.empty() && std::ranges::is_sorted(s) && std::ranges::adjacent_find(s) == s.end() &&
           s.back() < code.size();
  };
  return std::visit(
      [&](const auto& wit) -> bool {
        using W = std::decay_t<decltype(wit)>;
        if constexpr (std::is_same_v<W, FrameWitness>) {
          if (!valid(wit.coalition) || wit.coalition.size() > t || wit.framed >= code.size()) return false;
          if (std::ranges::binary_search(wit.coalition, wit.framed)) return false;
          return descendant(code, wit.coalition).contains(code.word(wit.framed));
        } else if constexpr (std::is_same_v<W, SeparationWitness>) {
          if (!valid(wit.first) || !valid(wit.second)) return false;
          if (wit.first.size() > t || wit.second.size() > t || wit.first == wit.second) return false;
          return descendant(code, wit.first) == descendant(code, wit.second);
        } else {
          if (!valid(wit.coalition) || !valid(wit.alternative) || wit.coalition.size() > t) return false;
          if (contains_all(wit.alternative, wit.coalition)) return false;
          return descendant(code, wit.coalition) == descendant(code, wit.alternative);
        }
      },
      w);
}

}  // namespace sepcode
