#pragma once

// Rank reports for A+(B_n): closed forms, and drivers that tie the generic
// searches to the known structure of A+(B_n).

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bnrank/a_plus.hpp"
#include "bnrank/budget.hpp"
#include "bnrank/errors.hpp"
#include "bnrank/index_set.hpp"
#include "bnrank/search.hpp"
#include "bnrank/semigroup.hpp"
#include "bnrank/witnesses.hpp"

namespace bnrank {

using BigInt = boost::multiprecision::cpp_int;

enum class Provenance { Formula, Witness, ExactSearch, Bounds };

inline std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Formula: return "formula";
    case Provenance::Witness: return "witness-verified";
    case Provenance::ExactSearch: return "exact-search";
    case Provenance::Bounds: return "bounds";
  }
  return "?";
}

struct RankValue {
  BigInt lower;
  BigInt upper;
  Provenance provenance = Provenance::Formula;
  std::optional<IndexSet> witness;
  std::chrono::milliseconds elapsed{0};

  bool exact() const { return lower == upper; }

  static RankValue exact_value(BigInt v, Provenance p) { return {v, v, p, std::nullopt, {}}; }
};

struct RankReport {
  std::optional<int> n;
  std::array<std::optional<RankValue>, 5> ranks;  // r1..r5 at [0..4]

  std::optional<RankValue>& operator[](int k) { return ranks.at(static_cast<std::size_t>(k - 1)); }
  const std::optional<RankValue>& operator[](int k) const {
    return ranks.at(static_cast<std::size_t>(k - 1));
  }
};

inline RankValue from_outcome(const SearchOutcome& o, Provenance when_exact) {
  RankValue v;
  v.lower = o.lower;
  v.upper = o.upper;
  v.provenance = o.exact() ? when_exact : Provenance::Bounds;
  v.witness = o.witness;
  v.elapsed = o.elapsed;
  return v;
}

inline BigInt big_factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Upper bound on the size of an independent subset of A+(B_n), summed over
// the constant, singleton and n-support strata.
inline BigInt kappa(int n) {
  require_valid_n(n);
  const BigInt nn = BigInt(n) * n;
  const BigInt constants = nn / 4 + n;
  return big_factorial(n) * nn + constants + nn * constants;
}

inline RankReport rank_formulas(int n) {
  require_valid_n(n);
  RankReport r;
  r.n = n;
  if (n == 1) {
    for (int k = 1; k <= 5; ++k) r[k] = RankValue::exact_value(3, Provenance::Formula);
    return r;
  }
  const BigInt f = big_factorial(n);
  const BigInt nn = BigInt(n) * n;
  r[1] = RankValue::exact_value(1, Provenance::Formula);
  r[2] = RankValue::exact_value(n * (f + 1), Provenance::Formula);
  r[3] = RankValue::exact_value(n * f + 2 * n - 2, Provenance::Formula);
  const BigInt r4_lower = n == 2 ? BigInt(14) : f * nn + n;
  if (n >= 6) {
    r[4] = RankValue::exact_value(r4_lower, Provenance::Formula);
  } else {
    r[4] = RankValue{r4_lower, kappa(n), Provenance::Bounds, std::nullopt, {}};
  }
  r[5] = RankValue::exact_value(f * nn + nn + nn * nn - n + 3, Provenance::Formula);
  return r;
}

// r1 <= r2 <= r3 <= r4 <= r5, read on whatever is known: exact values, or
// lower bounds on the left of an inequality and upper bounds on the right.
inline bool chain_consistent(const RankReport& r) {
  for (int k = 1; k < 5; ++k) {
    if (!r[k] || !r[k + 1]) continue;
    if (r[k]->lower > r[k + 1]->upper) return false;
    if (r[k]->exact() && r[k + 1]->exact() && r[k]->lower > r[k + 1]->lower) return false;
  }
  return true;
}

// Stratum caps for independent sets of A+(B_n), n >= 2: at most
// floor(n^2/4)+n constants, n^2 (floor(n^2/4)+n) singleton maps, and
// (n!) n^2 n-support maps.
inline std::vector<StratumCap> a_plus_independence_caps(int n) {
  if (n < 2) throw InvalidParameter("stratum caps are defined for n >= 2");
  const auto strata = support_strata(n);
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  const std::size_t constants = nn / 4 + static_cast<std::size_t>(n);
  return {{strata.constants, constants, 0},
          {strata.singletons, nn * constants, 0},
          {strata.nsupport, factorial(n) * nn, 0}};
}

// r2 of A+(B_n): the class lower bound against the generating set S ∪ T.
inline SearchOutcome a_plus_lower_rank(int n, const FiniteSemigroup& a, const SearchBudget& budget) {
  LowerRankOptions options;
  if (n >= 2) options.seed = construct_witness(n, WitnessKind::SUnionT);
  return lower_rank_exact(a, budget, options);
}

struct IntermediateRankCheck {
  std::size_t value = 0;
  IndexSet witness;
  // Set when the exhaustive stratified search ran (n = 2).
  std::optional<SearchOutcome> search;
};

// Checks that S' ∪ T is an independent generating set of the claimed size
// n(n!) + 2n - 2 and, for n = 2, that no independent generating set with no
// singleton maps, exactly n(n!) n-support maps and between n and 2n-2
// constants is larger. Throws TheoremMismatch on any disagreement.
inline IntermediateRankCheck intermediate_rank_verify(int n, const FiniteSemigroup& a,
                                                      const SearchBudget& budget = {}) {
  require_valid_n(n);
  if (n < 2) throw InvalidParameter("intermediate_rank_verify needs n >= 2");
  const std::size_t expected = static_cast<std::size_t>(n) * factorial(n) + 2 * n - 2;
  IntermediateRankCheck out;
  out.witness = construct_witness(n, WitnessKind::SprimeUnionT);
  if (out.witness.size() != expected) throw TheoremMismatch("|S' ∪ T| differs from n(n!)+2n-2");
  if (!is_generating(a, out.witness)) throw TheoremMismatch("S' ∪ T does not generate");
  if (!is_independent(a, out.witness)) throw TheoremMismatch("S' ∪ T is not independent");
  out.value = expected;
  if (n == 2) {
    const auto strata = support_strata(n);
    IndependentSearchOptions options;
    options.candidates = strata.constants | strata.nsupport;
    const std::size_t nfact = static_cast<std::size_t>(n) * factorial(n);
    options.strata = {{strata.nsupport, nfact, nfact},
                      {strata.constants, 2 * static_cast<std::size_t>(n) - 2,
                       static_cast<std::size_t>(n)}};
    auto result = intermediate_rank_search(a, budget, options);
    if (result.complete && result.lower != expected) {
      throw TheoremMismatch("stratified search found r3 = " + std::to_string(result.lower));
    }
    out.search = result;
  }
  return out;
}

}  // namespace bnrank
