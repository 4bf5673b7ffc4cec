#pragma once

// Exact searches for the five ranks of an arbitrary finite semigroup:
//
//   r1  largest k such that every k-subset is independent
//   r2  smallest generating set
//   r3  largest independent generating set
//   r4  largest independent set
//   r5  smallest k such that every k-subset generates
//
// Every search takes a SearchBudget. Running out is not an error: the
// outcome then carries proven bounds instead of an exact value.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "bnrank/budget.hpp"
#include "bnrank/errors.hpp"
#include "bnrank/index_set.hpp"
#include "bnrank/kernel.hpp"
#include "bnrank/semigroup.hpp"

namespace bnrank {

struct SearchOutcome {
  std::size_t lower = 0;
  std::size_t upper = 0;
  IndexSet witness;                     // realises `lower`
  std::optional<IndexSet> certificate;  // r5: the smallest prime subset
  bool complete = false;                // search ran to the end
  std::uint64_t nodes = 0;
  std::chrono::milliseconds elapsed{0};

  bool exact() const noexcept { return lower == upper; }
};

// Caps the number of members a solution may take from one stratum. Strata
// passed together must be pairwise disjoint.
struct StratumCap {
  IndexSet members;
  std::size_t max = SIZE_MAX;
  std::size_t min = 0;
};

template <typename Fn>
decltype(auto) with_kernel(const FiniteSemigroup& s, Fn&& fn) {
  if (s.size() <= Kernel64::kMaxSize) return fn(Kernel64(s));
  return fn(KernelDyn(s));
}

namespace detail {

// Visits k-subsets of [0, m) in lexicographic order; `visit` returns true to
// stop. Returns false if the meter ran out.
inline bool for_each_k_subset(std::size_t m, std::size_t k, BudgetMeter& meter,
                              const std::function<bool(const std::vector<std::size_t>&)>& visit,
                              bool& stopped) {
  stopped = false;
  if (k > m) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (!meter.step()) return false;
    if (visit(idx)) {
      stopped = true;
      return true;
    }
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

template <class K>
bool independent_in(const K& k, const typename K::Set& u) {
  bool ok = true;
  K::for_each(u, [&](std::size_t a) {
    if (!ok) return;
    auto rest = u;
    K::erase(rest, a);
    if (K::has(k.closure(rest), a)) ok = false;
  });
  return ok;
}

template <class K>
struct KStratum {
  typename K::Set members;
  std::size_t max;
  std::size_t min;
};

template <class K>
std::vector<KStratum<K>> to_kernel_strata(const K& k, const std::vector<StratumCap>& caps) {
  std::vector<KStratum<K>> out;
  auto seen = k.empty();
  for (const auto& c : caps) {
    auto members = k.from_index_set(c.members);
    if (!K::is_empty(K::intersect(seen, members))) {
      throw InvalidParameter("strata must be pairwise disjoint");
    }
    seen = K::unite(seen, members);
    out.push_back({members, c.max, c.min});
  }
  return out;
}

// A node of the independent-set searches: U together with <U> and, for each
// a in U, the span <U \ {a}>. Adding x only extends these closures.
template <class K>
struct IndependentState {
  typename K::Set members;
  typename K::Set span;
  std::vector<std::pair<std::size_t, typename K::Set>> without;

  static IndependentState root(const K& k) { return {k.empty(), k.empty(), {}}; }

  // U ∪ {y} stays independent.
  bool accepts(const K& k, std::size_t y) const {
    if (K::has(span, y)) return false;
    for (const auto& [a, c] : without) {
      if (k.extend_reaches(c, y, a)) return false;
    }
    return true;
  }

  IndependentState with(const K& k, std::size_t x) const {
    IndependentState out;
    out.members = members;
    K::insert(out.members, x);
    out.span = k.extend(span, x);
    out.without.reserve(without.size() + 1);
    for (const auto& [a, c] : without) out.without.emplace_back(a, k.extend(c, x));
    out.without.emplace_back(x, span);
    return out;
  }

  typename K::Set filter(const K& k, typename K::Set candidates) const {
    auto out = k.empty();
    K::for_each(candidates, [&](std::size_t y) {
      if (accepts(k, y)) K::insert(out, y);
    });
    return out;
  }
};

// Upper bound on |W| over independent W with U ⊆ W ⊆ U ∪ P.
template <class K>
std::size_t stratified_bound(const typename K::Set& u, const typename K::Set& p,
                             const std::vector<KStratum<K>>& strata) {
  std::size_t bound = K::count(u);
  auto rest = p;
  for (const auto& s : strata) {
    const std::size_t used = K::count(K::intersect(u, s.members));
    const std::size_t room = s.max > used ? s.max - used : 0;
    bound += std::min(K::count(K::intersect(p, s.members)), room);
    rest = K::minus(rest, s.members);
  }
  return bound + K::count(rest);
}

template <class K>
typename K::Set capped_candidates(const typename K::Set& u, typename K::Set p,
                                  const std::vector<KStratum<K>>& strata) {
  for (const auto& s : strata) {
    if (K::count(K::intersect(u, s.members)) >= s.max) p = K::minus(p, s.members);
  }
  return p;
}

template <class K>
bool below_minimum(const typename K::Set& u, const typename K::Set& p,
                   const std::vector<KStratum<K>>& strata) {
  for (const auto& s : strata) {
    if (K::count(K::intersect(K::unite(u, p), s.members)) < s.min) return true;
  }
  return false;
}

template <class K>
std::size_t first_member(const typename K::Set& s) {
  std::size_t out = SIZE_MAX;
  K::for_each(s, [&](std::size_t i) {
    if (out == SIZE_MAX) out = i;
  });
  return out;
}

template <>
inline std::size_t first_member<Kernel64>(const Kernel64::Set& s) {
  return s ? static_cast<std::size_t>(std::countr_zero(s)) : SIZE_MAX;
}

template <>
inline std::size_t first_member<KernelDyn>(const IndexSet& s) {
  auto i = s.next(0);
  return i == s.universe() ? SIZE_MAX : i;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// r1

// Definition-level r1: the largest k such that every k-subset is independent.
inline SearchOutcome small_rank_bruteforce(const FiniteSemigroup& s,
                                           const SearchBudget& budget = {}) {
  BudgetMeter meter(budget);
  return with_kernel(s, [&](const auto& k) {
    using K = std::decay_t<decltype(k)>;
    const std::size_t m = s.size();
    SearchOutcome out;
    out.lower = 1;  // singletons are always independent
    out.upper = m;
    for (std::size_t size = 2; size <= m; ++size) {
      bool stopped = false;
      const bool finished = detail::for_each_k_subset(
          m, size, meter,
          [&](const std::vector<std::size_t>& idx) {
            auto u = k.empty();
            for (auto i : idx) K::insert(u, i);
            return !detail::independent_in(k, u);
          },
          stopped);
      if (!finished) break;
      if (stopped) {
        out.upper = out.lower;
        break;
      }
      out.lower = size;
    }
    if (out.lower == m) out.upper = m;
    out.complete = out.lower == out.upper;
    // Any r1-sized subset witnesses the value; report the first one.
    out.witness = IndexSet(m);
    for (std::size_t i = 0; i < out.lower; ++i) out.witness.insert(i);
    out.nodes = meter.nodes();
    out.elapsed = meter.elapsed();
    return out;
  });
}

// r1 with the shortcut that a finite non-band with at least two elements has
// r1 = 1 (the pair {a, a+a} for a non-idempotent a is dependent).
inline SearchOutcome small_rank(const FiniteSemigroup& s, const SearchBudget& budget = {}) {
  if (s.size() >= 2 && !is_band(s)) {
    SearchOutcome out;
    out.lower = out.upper = 1;
    out.witness = IndexSet(s.size(), {0});
    out.complete = true;
    return out;
  }
  return small_rank_bruteforce(s, budget);
}

// ---------------------------------------------------------------------------
// r2

// Lower bound on the size of any generating set: a generating set meets every
// maximal R-class and every maximal L-class, and each family is disjoint.
inline std::size_t generating_lower_bound(const FiniteSemigroup& s) {
  const auto r = greens_classes(s, Side::Right);
  const auto l = greens_classes(s, Side::Left);
  return std::max(maximal_classes(s, r, Side::Right).size(),
                  maximal_classes(s, l, Side::Left).size());
}

struct LowerRankOptions {
  // Require candidates to meet every maximal R- and L-class, and start the
  // deepening at the resulting lower bound.
  bool class_pruning = true;
  // Abandon a prefix when even adding every remaining index cannot generate.
  bool closure_pruning = true;
  // A known generating set; its size caps the deepening.
  std::optional<IndexSet> seed;
};

// Iterative deepening over subset sizes. Within a size, subsets are visited
// in lexicographic order, so the witness is the lexicographically smallest
// generating set of minimum size, unless the seed already meets the proven
// lower bound, in which case the seed is returned.
inline SearchOutcome lower_rank_exact(const FiniteSemigroup& s, const SearchBudget& budget = {},
                                      const LowerRankOptions& options = {}) {
  BudgetMeter meter(budget);
  const std::size_t m = s.size();
  SearchOutcome out;
  out.witness = IndexSet::full(m);
  out.upper = m;
  if (options.seed) {
    if (!is_generating(s, *options.seed)) throw InvalidParameter("seed does not generate");
    out.witness = *options.seed;
    out.upper = options.seed->size();
  }

  // Maximal R-classes, then maximal L-classes; each family is disjoint.
  std::vector<std::vector<IndexSet>> required;
  out.lower = 1;
  if (options.class_pruning) {
    for (auto side : {Side::Right, Side::Left}) {
      auto p = greens_classes(s, side);
      std::vector<IndexSet> family;
      for (auto c : maximal_classes(s, p, side)) family.push_back(IndexSet::from_range(m, p.classes[c]));
      out.lower = std::max(out.lower, family.size());
      required.push_back(std::move(family));
    }
  }
  if (out.lower >= out.upper) {
    out.lower = out.upper;
    out.complete = true;
    out.elapsed = meter.elapsed();
    return out;
  }

  return with_kernel(s, [&](const auto& k) {
    using K = std::decay_t<decltype(k)>;
    using Set = typename K::Set;
    std::vector<std::vector<Set>> families;
    for (const auto& family : required) {
      auto& f = families.emplace_back();
      for (const auto& c : family) f.push_back(k.from_index_set(c));
    }
    std::vector<Set> suffix(m + 1, k.empty());
    for (std::size_t i = m; i-- > 0;) {
      suffix[i] = suffix[i + 1];
      K::insert(suffix[i], i);
    }
    const Set everything = k.full();

    std::size_t target = 0;
    std::optional<Set> found;
    std::function<void(Set, std::size_t, std::size_t)> dfs = [&](Set chosen, std::size_t start,
                                                                 std::size_t count) {
      if (found || !meter.step()) return;
      if (count == target) {
        if (k.closure(chosen) == everything) found = chosen;
        return;
      }
      const std::size_t slots = target - count;
      for (const auto& family : families) {
        std::size_t unhit = 0;
        for (const auto& c : family) {
          if (!K::is_empty(K::intersect(chosen, c))) continue;
          if (K::is_empty(K::intersect(suffix[start], c))) return;
          ++unhit;
        }
        if (unhit > slots) return;
      }
      if (options.closure_pruning && k.closure(K::unite(chosen, suffix[start])) != everything) {
        return;
      }
      for (std::size_t i = start; i + slots <= m && !found; ++i) {
        Set next = chosen;
        K::insert(next, i);
        dfs(next, i + 1, count + 1);
        if (meter.exhausted()) return;
      }
    };

    for (target = out.lower; target <= out.upper; ++target) {
      dfs(k.empty(), 0, 0);
      if (found) {
        out.lower = out.upper = target;
        out.witness = k.to_index_set(*found);
        out.complete = true;
        break;
      }
      if (meter.exhausted()) {
        out.lower = target;
        break;
      }
      // Nothing of this size generates.
      out.lower = target + 1;
    }
    if (out.lower > out.upper) out.lower = out.upper;  // unreachable for valid seeds
    out.nodes = meter.nodes();
    out.elapsed = meter.elapsed();
    return out;
  });
}

// ---------------------------------------------------------------------------
// r3 and r4: depth-first search over the hereditary system of independent
// sets. Elements are branched on in index order, "include" before "exclude".

struct IndependentSearchOptions {
  // Elements the search may use; all elements when empty.
  std::optional<IndexSet> candidates;
  std::vector<StratumCap> strata;
  // A known independent (and, for r3, generating) set to start from.
  std::optional<IndexSet> seed;
  // Visit every qualifying set instead of pruning by the incumbent.
  bool exhaustive = false;
};

// r4: largest independent set by branch and bound. The bound at a node is
// |U| plus the number of candidates still compatible with U, reduced by the
// optional stratum caps.
inline SearchOutcome upper_rank_search(const FiniteSemigroup& s, const SearchBudget& budget = {},
                                       const IndependentSearchOptions& options = {}) {
  BudgetMeter meter(budget);
  return with_kernel(s, [&](const auto& k) {
    using K = std::decay_t<decltype(k)>;
    using Set = typename K::Set;
    using State = detail::IndependentState<K>;
    const auto strata = detail::to_kernel_strata(k, options.strata);

    SearchOutcome out;
    std::size_t best = 0;
    Set best_set = k.empty();
    if (options.seed) {
      if (options.seed->empty() || !is_independent(s, *options.seed)) {
        throw InvalidParameter("seed is not an independent set");
      }
      best_set = k.from_index_set(*options.seed);
      best = K::count(best_set);
    }
    std::size_t open_bound = 0;

    std::function<void(const State&, Set)> dfs = [&](const State& st, Set p) {
      p = detail::capped_candidates<K>(st.members, p, strata);
      if (!meter.step()) {
        open_bound = std::max(open_bound, detail::stratified_bound<K>(st.members, p, strata));
        return;
      }
      const std::size_t size = K::count(st.members);
      if (size > best) {
        best = size;
        best_set = st.members;
      }
      if (K::is_empty(p)) return;
      if (!options.exhaustive && detail::stratified_bound<K>(st.members, p, strata) <= best) return;
      const std::size_t x = detail::first_member<K>(p);
      K::erase(p, x);
      const State next = st.with(k, x);
      dfs(next, next.filter(k, p));
      if (meter.exhausted()) {
        open_bound = std::max(open_bound, detail::stratified_bound<K>(st.members, p, strata));
        return;
      }
      dfs(st, p);
    };

    Set root = options.candidates ? k.from_index_set(*options.candidates) : k.full();
    dfs(State::root(k), root);

    out.witness = k.to_index_set(best_set);
    out.lower = best;
    out.complete = !meter.exhausted();
    out.upper = out.complete ? best : std::max(best, open_bound);
    out.nodes = meter.nodes();
    out.elapsed = meter.elapsed();
    return out;
  });
}

// r3: largest independent generating set. `visit`, when given, sees every
// independent generating set the search reaches; with options.exhaustive that
// is all of them inside the candidate universe and strata.
inline SearchOutcome intermediate_rank_search(
    const FiniteSemigroup& s, const SearchBudget& budget = {},
    const IndependentSearchOptions& options = {},
    const std::function<void(const IndexSet&)>& visit = {}) {
  BudgetMeter meter(budget);
  return with_kernel(s, [&](const auto& k) {
    using K = std::decay_t<decltype(k)>;
    using Set = typename K::Set;
    using State = detail::IndependentState<K>;
    const auto strata = detail::to_kernel_strata(k, options.strata);
    const Set everything = k.full();

    SearchOutcome out;
    std::size_t best = 0;
    Set best_set = k.empty();
    if (options.seed) {
      if (options.seed->empty() || !is_independent(s, *options.seed)
          || !is_generating(s, *options.seed)) {
        throw InvalidParameter("seed is not an independent generating set");
      }
      best_set = k.from_index_set(*options.seed);
      best = K::count(best_set);
    }
    std::size_t open_bound = 0;

    std::function<void(const State&, Set)> dfs = [&](const State& st, Set p) {
      p = detail::capped_candidates<K>(st.members, p, strata);
      if (!meter.step()) {
        open_bound = std::max(open_bound, detail::stratified_bound<K>(st.members, p, strata));
        return;
      }
      if (detail::below_minimum<K>(st.members, p, strata)) return;
      // Subsets of U ∪ P generate at most <U ∪ P>.
      if (k.closure(K::unite(st.members, p)) != everything) return;
      if (st.span == everything) {
        bool meets_minimums = true;
        for (const auto& stratum : strata) {
          meets_minimums &= K::count(K::intersect(st.members, stratum.members)) >= stratum.min;
        }
        if (meets_minimums) {
          if (visit) visit(k.to_index_set(st.members));
          const std::size_t size = K::count(st.members);
          if (size > best) {
            best = size;
            best_set = st.members;
          }
        }
      }
      if (K::is_empty(p)) return;
      if (!options.exhaustive && detail::stratified_bound<K>(st.members, p, strata) <= best) return;
      const std::size_t x = detail::first_member<K>(p);
      K::erase(p, x);
      const State next = st.with(k, x);
      dfs(next, next.filter(k, p));
      if (meter.exhausted()) {
        open_bound = std::max(open_bound, detail::stratified_bound<K>(st.members, p, strata));
        return;
      }
      dfs(st, p);
    };

    Set root = options.candidates ? k.from_index_set(*options.candidates) : k.full();
    dfs(State::root(k), root);

    out.witness = k.to_index_set(best_set);
    out.lower = best;
    out.complete = !meter.exhausted();
    out.upper = out.complete ? best : std::max(best, open_bound);
    out.nodes = meter.nodes();
    out.elapsed = meter.elapsed();
    return out;
  });
}

// ---------------------------------------------------------------------------
// r5

// Smallest nonempty proper prime subset of size at most `max_size`, searched
// size by size; within a size, by smallest member first. Prime subsets are
// grown as hitting sets: while some u in U has a factorisation b + c = u
// with b, c outside U, one of b, c must join U.
inline std::optional<IndexSet> smallest_prime_subset(const FiniteSemigroup& s,
                                                     std::size_t max_size, BudgetMeter& meter,
                                                     bool& exhausted) {
  exhausted = false;
  const std::size_t m = s.size();
  if (m < 2) return std::nullopt;
  max_size = std::min(max_size, m - 1);

  // Factorisations grouped by their sum.
  std::vector<std::size_t> offset(m + 1, 0);
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t c = 0; c < m; ++c) ++offset[s.sum(b, c) + 1];
  for (std::size_t i = 0; i < m; ++i) offset[i + 1] += offset[i];
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factors(m * m);
  {
    auto fill = offset;
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        factors[fill[s.sum(b, c)]++] = {static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(c)};
  }

  IndexSet u(m);
  std::vector<std::size_t> members;
  std::size_t limit = 0;
  std::size_t floor = 0;

  std::function<bool()> grow = [&]() -> bool {
    if (!meter.step()) return false;
    for (auto a : members) {
      for (std::size_t f = offset[a]; f < offset[a + 1]; ++f) {
        const auto [b, c] = factors[f];
        if (u.contains(b) || u.contains(c)) continue;
        if (members.size() == limit) return false;
        const std::size_t options[2] = {b, c};
        for (std::size_t o = 0; o < (b == c ? 1U : 2U); ++o) {
          const std::size_t pick = options[o];
          if (pick < floor) continue;
          u.insert(pick);
          members.push_back(pick);
          if (grow()) return true;
          members.pop_back();
          u.erase(pick);
          if (meter.exhausted()) return false;
        }
        return false;
      }
    }
    return true;
  };

  for (limit = 1; limit <= max_size; ++limit) {
    for (floor = 0; floor < m; ++floor) {
      u = IndexSet(m);
      u.insert(floor);
      members = {floor};
      members.reserve(limit + 1);
      if (grow()) return u;
      if (meter.exhausted()) {
        exhausted = true;
        return std::nullopt;
      }
    }
  }
  return std::nullopt;
}

// r5 = |V| + 1 for a largest proper subsemigroup V, which is the complement
// of a smallest proper prime subset. The witness is V.
inline SearchOutcome large_rank_exact(const FiniteSemigroup& s, std::size_t max_prime_size,
                                      const SearchBudget& budget = {}) {
  BudgetMeter meter(budget);
  const std::size_t m = s.size();
  SearchOutcome out;
  if (m == 1) {
    // The only proper subsemigroup is empty.
    out.lower = out.upper = 1;
    out.witness = IndexSet(m);
    out.complete = true;
    return out;
  }
  bool exhausted = false;
  auto prime = smallest_prime_subset(s, max_prime_size, meter, exhausted);
  if (prime) {
    out.certificate = *prime;
    out.witness = IndexSet::full(m) - *prime;
    out.lower = out.upper = m - prime->size() + 1;
    out.complete = true;
  } else {
    // Every proper prime subset is larger than the cap.
    out.upper = exhausted ? m : m - std::min(max_prime_size, m - 1);
    out.lower = 1;
    out.witness = IndexSet(m);
    for (std::size_t a = 0; a < m; ++a) {
      auto c = closure(s, IndexSet(m, {a}));
      if (c.size() < m && c.size() + 1 > out.lower) {
        out.lower = c.size() + 1;
        out.witness = c;
      }
    }
  }
  out.nodes = meter.nodes();
  out.elapsed = meter.elapsed();
  return out;
}

}  // namespace bnrank
