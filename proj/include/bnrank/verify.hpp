#pragma once

// End-to-end verification of the structure and ranks of A+(B_n): every
// closed form is recomputed from the Cayley table by an independent route.

#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bnrank/a_plus.hpp"
#include "bnrank/affine_map.hpp"
#include "bnrank/oracle.hpp"
#include "bnrank/ranks.hpp"
#include "bnrank/search.hpp"
#include "bnrank/semigroup.hpp"
#include "bnrank/witnesses.hpp"

namespace bnrank {

struct CheckItem {
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;
  std::chrono::milliseconds elapsed{0};
};

struct VerificationReport {
  int n = 0;
  std::vector<CheckItem> items;
  RankReport ranks;
  bool budget_exhausted = false;

  bool all_passed() const {
    for (const auto& i : items) {
      if (!i.skipped && !i.passed) return false;
    }
    return true;
  }
};

// Largest n whose Cayley table verify_all builds.
inline constexpr int kMaxTableN = 5;

namespace detail {

// Partition of the elements outside `skip` by a key, as sorted classes.
template <typename Key>
std::set<std::vector<std::size_t>> partition_by(std::size_t m, const std::function<Key(std::size_t)>& key,
                                                const std::function<bool(std::size_t)>& keep) {
  std::map<Key, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < m; ++i) {
    if (keep(i)) groups[key(i)].push_back(i);
  }
  std::set<std::vector<std::size_t>> out;
  for (auto& [k, v] : groups) out.insert(v);
  return out;
}

inline std::set<std::vector<std::size_t>> restrict_partition(const Partition& p,
                                                             const std::function<bool(std::size_t)>& keep) {
  std::set<std::vector<std::size_t>> out;
  for (const auto& c : p.classes) {
    std::vector<std::size_t> kept;
    for (auto i : c) {
      if (keep(i)) kept.push_back(i);
    }
    if (!kept.empty()) out.insert(kept);
  }
  return out;
}

inline std::string str(const BigInt& v) { return v.str(); }

}  // namespace detail

// Green's relations on A+(B_n) \ {xi(0)} computed from principal ideals
// agree with the support/projection description.
inline bool greens_match_projections(int n, const FiniteSemigroup& a, Side side) {
  const auto elems = enumerate_a_plus(n);
  const auto generic = greens_classes(a, side);
  const auto nn = static_cast<std::size_t>(n) * n;
  std::function<bool(std::size_t)> keep;
  if (side == Side::Right) {
    keep = [](std::size_t i) { return i != 0; };
  } else {
    keep = [nn](std::size_t i) { return i != 0 && i <= nn; };  // nonzero constants
  }
  const int projection = side == Side::Right ? 1 : 2;
  auto expected = detail::partition_by<std::vector<int>>(
      a.size(), [&](std::size_t i) { return projection_key(n, elems[i], projection); }, keep);
  return detail::restrict_partition(generic, keep) == expected;
}

inline std::size_t nsupport_r_class_count(int n, const FiniteSemigroup& a) {
  const auto r = greens_classes(a, Side::Right);
  const auto strata = support_strata(n);
  std::set<std::size_t> classes;
  for (auto i : strata.nsupport) classes.insert(r.class_of[i]);
  return classes.size();
}

// |supp(f+g)| <= |supp f| and <= |supp g| over all pairs.
inline bool support_bound_holds(int n, const FiniteSemigroup& a) {
  const auto elems = enumerate_a_plus(n);
  std::vector<std::size_t> supp;
  for (const auto& f : elems) supp.push_back(table_support_size(to_table(n, f)));
  for (std::size_t f = 0; f < a.size(); ++f) {
    for (std::size_t g = 0; g < a.size(); ++g) {
      const std::size_t s = supp[a.sum(f, g)];
      if (s > supp[f] || s > supp[g]) return false;
    }
  }
  return true;
}

// Witness set for the r4 search: P for n = 2, I otherwise.
inline IndexSet a_plus_r4_seed(int n) {
  return n == 2 ? construct_witness(2, WitnessKind::P2) : construct_witness(n, WitnessKind::I);
}

// Largest independent set of A+(B_n), seeded with the best known witness.
// The upper bound is clamped to kappa.
inline RankValue a_plus_upper_rank(int n, const FiniteSemigroup& a, const SearchBudget& budget,
                                   bool strata_caps) {
  IndependentSearchOptions options;
  if (n >= 2) options.seed = a_plus_r4_seed(n);
  if (strata_caps && n >= 2) options.strata = a_plus_independence_caps(n);
  auto outcome = upper_rank_search(a, budget, options);
  auto v = from_outcome(outcome, Provenance::ExactSearch);
  if (n >= 2 && v.upper > kappa(n)) v.upper = kappa(n);
  if (v.exact()) v.provenance = Provenance::ExactSearch;
  return v;
}

inline VerificationReport verify_all(int n, const SearchBudget& budget = {}) {
  require_valid_n(n);
  VerificationReport report;
  report.n = n;
  const auto formulas = rank_formulas(n);
  report.ranks.n = n;

  auto run = [&](const std::string& name, const std::function<std::string()>& body) -> bool {
    CheckItem item;
    item.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
      item.detail = body();
      item.passed = true;
    } catch (const std::exception& e) {
      item.detail = e.what();
    }
    item.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now()
                                                                         - start);
    report.items.push_back(item);
    return item.passed;
  };
  auto skip = [&](const std::string& name, const std::string& why) {
    CheckItem item;
    item.name = name;
    item.skipped = true;
    item.detail = why;
    report.items.push_back(item);
  };
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw TheoremMismatch(what);
  };
  auto expect_rank = [&](int k, const RankValue& got) {
    report.ranks[k] = got;
    const auto& want = *formulas[k];
    if (want.exact()) {
      require(got.exact() && got.lower == want.lower,
              "r" + std::to_string(k) + " = " + detail::str(got.lower) + ".." + detail::str(got.upper)
                  + ", expected " + detail::str(want.lower));
    } else {
      require(got.lower >= want.lower && got.upper <= want.upper,
              "r" + std::to_string(k) + " bounds outside [" + detail::str(want.lower) + ", "
                  + detail::str(want.upper) + "]");
    }
    if (got.provenance == Provenance::Bounds) report.budget_exhausted = true;
    return "r" + std::to_string(k) + (got.exact() ? " = " + detail::str(got.lower)
                                                  : " in [" + detail::str(got.lower) + ", "
                                                        + detail::str(got.upper) + "]")
           + " (" + provenance_name(got.provenance) + ")";
  };

  if (n > kMaxTableN) {
    run("closed forms and rank chain", [&] {
      report.ranks = formulas;
      require(chain_consistent(formulas), "rank chain violated");
      return "table-based checks are limited to n <= " + std::to_string(kMaxTableN);
    });
    return report;
  }

  run("element count", [&] {
    const auto got = enumerate_a_plus(n).size();
    require(got == a_plus_size_formula(n), "enumerated " + std::to_string(got) + " elements");
    return "|A+(B_" + std::to_string(n) + ")| = " + std::to_string(got);
  });

  std::optional<FiniteSemigroup> built;
  const bool closed = run("closure under pointwise addition", [&] {
    built = a_plus_semigroup(n);
    return std::to_string(built->size()) + "x" + std::to_string(built->size()) + " Cayley table";
  });
  if (!closed) return report;
  const FiniteSemigroup& a = *built;

  if (n <= 2) {
    run("affine closure oracle", [&] {
      auto oracle = affine_closure_oracle(n);
      std::set<MapTable> mine;
      for (const auto& f : enumerate_a_plus(n)) mine.insert(to_table(n, f));
      require(oracle == mine, "oracle closure has " + std::to_string(oracle.size()) + " maps");
      return std::to_string(oracle.size()) + " maps from endomorphisms + constants";
    });
  } else {
    skip("affine closure oracle", "brute-force endomorphisms need n <= 2");
  }

  if (n >= 2) {
    run("Green's R: ideals match support and first projection", [&] {
      require(greens_match_projections(n, a, Side::Right), "R partitions differ");
      return std::to_string(greens_classes(a, Side::Right).classes.size()) + " R-classes";
    });
    run("Green's L on constants: ideals match second projection", [&] {
      require(greens_match_projections(n, a, Side::Left), "L partitions differ");
      return std::to_string(greens_classes(a, Side::Left).classes.size()) + " L-classes";
    });
    run("n-support R-classes = (n!)n", [&] {
      const auto got = nsupport_r_class_count(n, a);
      require(got == factorial(n) * static_cast<std::size_t>(n), "found " + std::to_string(got));
      return std::to_string(got) + " classes";
    });
  }

  run("support bound under sums", [&] {
    require(support_bound_holds(n, a), "some |supp(f+g)| exceeds a summand's support");
    return std::to_string(a.size() * a.size()) + " sums checked";
  });

  if (n >= 2) {
    run("witness S and T sizes", [&] {
      const auto s = construct_witness(n, WitnessKind::S);
      const auto t = construct_witness(n, WitnessKind::T);
      require(s.size() == static_cast<std::size_t>(n), "|S| != n");
      require(t.size() == static_cast<std::size_t>(n) * factorial(n), "|T| != n(n!)");
      require(closure(a, s) == support_strata(n).constants, "<S> is not the constants");
      return "|S| = " + std::to_string(s.size()) + ", |T| = " + std::to_string(t.size());
    });
    run("witness I independent", [&] {
      const auto i = construct_witness(n, WitnessKind::I);
      require(i.size() == factorial(n) * n * n + n, "|I| wrong");
      require(is_independent(a, i), "I is dependent");
      return "|I| = " + std::to_string(i.size());
    });
    if (n == 2) {
      run("witness P independent", [&] {
        const auto p = construct_witness(2, WitnessKind::P2);
        require(p.size() == 14 && is_independent(a, p), "P is not a 14-element independent set");
        return "|P| = 14";
      });
    }
    run("witness V prime", [&] {
      const auto v = construct_witness(n, WitnessKind::V);
      require(v.size() == static_cast<std::size_t>(n) - 1 && is_prime_subset(a, v), "V is not prime");
      return "|V| = " + std::to_string(v.size());
    });
  }

  // r1
  run("r1 small rank", [&] {
    auto v = from_outcome(small_rank(a, budget), Provenance::ExactSearch);
    if (n >= 2) {
      v.provenance = Provenance::Formula;
      if (n == 2) {
        auto brute = small_rank_bruteforce(a, budget);
        require(brute.exact() && brute.lower == 1, "definition-level r1 disagrees");
        v.provenance = Provenance::ExactSearch;
      }
    }
    return expect_rank(1, v);
  });

  // r2
  run("r2 lower rank", [&] {
    SearchOutcome o;
    if (n <= 2) {
      o = lower_rank_exact(a, budget);
    } else {
      o = a_plus_lower_rank(n, a, budget);
    }
    auto v = from_outcome(o, n <= 2 ? Provenance::ExactSearch : Provenance::Witness);
    if (v.witness) require(is_generating(a, *v.witness), "r2 witness does not generate");
    return expect_rank(2, v);
  });

  // r3
  run("r3 intermediate rank", [&] {
    RankValue v;
    if (n == 1) {
      auto o = intermediate_rank_search(a, budget);
      v = from_outcome(o, Provenance::ExactSearch);
    } else {
      auto check = intermediate_rank_verify(n, a, budget);
      v = RankValue::exact_value(check.value, Provenance::Witness);
      v.witness = check.witness;
      if (check.search && !check.search->complete) report.budget_exhausted = true;
    }
    if (v.witness) {
      require(is_independent(a, *v.witness) && is_generating(a, *v.witness),
              "r3 witness is not an independent generating set");
    }
    return expect_rank(3, v);
  });

  // r4
  run("r4 upper rank", [&] {
    auto v = a_plus_upper_rank(n, a, budget, false);
    if (v.witness) require(is_independent(a, *v.witness), "r4 witness is dependent");
    return expect_rank(4, v);
  });

  // r5
  run("r5 large rank", [&] {
    auto o = large_rank_exact(a, static_cast<std::size_t>(n), budget);
    if (o.certificate) require(is_prime_subset(a, *o.certificate), "r5 certificate is not prime");
    if (!o.witness.empty() && o.witness.size() < a.size()) {
      require(closure(a, o.witness) == o.witness, "r5 witness is not a subsemigroup");
    }
    return expect_rank(5, from_outcome(o, Provenance::ExactSearch));
  });

  if (n >= 2) {
    run("indecomposable elements", [&] {
      const auto ind = indecomposables(a);
      if (n == 2) {
        require(ind.contains(const_index(2, 0, 1)), "xi(1,2) is decomposable");
      } else {
        require(ind.empty(), std::to_string(ind.size()) + " indecomposable elements");
      }
      return std::to_string(ind.size()) + " indecomposable";
    });
  }

  run("rank chain r1 <= ... <= r5", [&] {
    require(chain_consistent(report.ranks), "rank chain violated");
    return std::string("consistent");
  });
  return report;
}

}  // namespace bnrank
