#include <catch2/catch_amalgamated.hpp>

#include "bnrank/a_plus.hpp"
#include "bnrank/search.hpp"
#include "bnrank/witnesses.hpp"
#include "oracles.hpp"

using namespace bnrank;

namespace {

const SearchBudget kBudget = SearchBudget::unlimited();

std::vector<std::pair<std::string, FiniteSemigroup>> small_semigroups() {
  std::vector<std::pair<std::string, FiniteSemigroup>> out{
      {"B_1", brandt_semigroup(1)},
      {"B_2", brandt_semigroup(2)},
      {"B_3", brandt_semigroup(3)},
      {"A+(B_1)", a_plus_semigroup(1)},
      {"C_B3", subsemigroup(a_plus_semigroup(3), support_strata(3).constants)},
      {"trivial", FiniteSemigroup({"e"}, {0})},
  };
  int i = 0;
  for (auto& s : oracle::random_semigroups(25, 4, 12, 2024)) out.emplace_back("random" + std::to_string(i++), s);
  // Left-zero and right-zero bands.
  out.emplace_back("left-zero", FiniteSemigroup({"a", "b", "c"}, {0, 0, 0, 1, 1, 1, 2, 2, 2}));
  out.emplace_back("right-zero", FiniteSemigroup({"a", "b", "c"}, {0, 1, 2, 0, 1, 2, 0, 1, 2}));
  return out;
}

void check_witness_generates(const FiniteSemigroup& s, const SearchOutcome& o) {
  CHECK(o.witness.size() == o.lower);
  CHECK(is_generating(s, o.witness));
}

}  // namespace

TEST_CASE("every rank matches the all-subsets oracle", "[search][oracle]") {
  for (const auto& [name, s] : small_semigroups()) {
    INFO(name << " (m = " << s.size() << ")");
    const auto expected = oracle::all_ranks(s);

    const auto r1 = small_rank(s, kBudget);
    CHECK(r1.exact());
    CHECK(r1.lower == expected.r[1]);
    CHECK(small_rank_bruteforce(s, kBudget).lower == expected.r[1]);

    for (bool pruning : {true, false}) {
      const auto r2 = lower_rank_exact(s, kBudget, {pruning, pruning, std::nullopt});
      CHECK(r2.exact());
      CHECK(r2.lower == expected.r[2]);
      check_witness_generates(s, r2);
    }
    CHECK(generating_lower_bound(s) <= expected.r[2]);

    const auto r3 = intermediate_rank_search(s, kBudget);
    CHECK(r3.exact());
    CHECK(r3.lower == expected.r[3]);
    check_witness_generates(s, r3);
    CHECK(is_independent(s, r3.witness));

    const auto r4 = upper_rank_search(s, kBudget);
    CHECK(r4.exact());
    CHECK(r4.lower == expected.r[4]);
    CHECK(oracle::naive_max_independent(s) == expected.r[4]);
    CHECK(r4.witness.size() == r4.lower);
    CHECK(is_independent(s, r4.witness));

    const auto r5 = large_rank_exact(s, s.size(), kBudget);
    CHECK(r5.exact());
    CHECK(r5.lower == expected.r[5]);
    if (s.size() > 1) {
      REQUIRE(r5.certificate);
      CHECK(is_prime_subset(s, *r5.certificate));
      CHECK(closure(s, r5.witness) == r5.witness);
      CHECK(r5.witness.size() + 1 == r5.lower);
    }

    CHECK(expected.r[1] <= expected.r[2]);
    CHECK(expected.r[2] <= expected.r[3]);
    CHECK(expected.r[3] <= expected.r[4]);
    CHECK(expected.r[4] <= expected.r[5]);
  }
}

TEST_CASE("known small values", "[search]") {
  const auto c3 = subsemigroup(a_plus_semigroup(3), support_strata(3).constants);
  CHECK(upper_rank_search(c3, kBudget).lower == 3 * 3 / 4 + 3);
  CHECK(small_rank(brandt_semigroup(2), kBudget).lower == 1);
  CHECK(small_rank_bruteforce(brandt_semigroup(2), kBudget).lower == 1);
  for (int k = 0; k < 5; ++k) {
    CHECK(oracle::all_ranks(a_plus_semigroup(1)).r[k + 1] == 3);
  }
}

TEST_CASE("r1 of A+(B_2) by definition", "[search]") {
  const auto a = a_plus_semigroup(2);
  CHECK_FALSE(is_band(a));
  CHECK(small_rank(a, kBudget).lower == 1);
  const auto brute = small_rank_bruteforce(a, kBudget);
  CHECK(brute.exact());
  CHECK(brute.lower == 1);
}

TEST_CASE("r2 of A+(B_2) is 6 with or without pruning", "[search]") {
  const auto a = a_plus_semigroup(2);
  for (bool pruning : {true, false}) {
    const auto r = lower_rank_exact(a, kBudget, {pruning, pruning, std::nullopt});
    CHECK(r.exact());
    CHECK(r.lower == 6);
    check_witness_generates(a, r);
  }
  const auto seeded = lower_rank_exact(a, kBudget, {true, true, construct_witness(2, WitnessKind::SUnionT)});
  CHECK(seeded.lower == 6);
  CHECK(seeded.witness == construct_witness(2, WitnessKind::SUnionT));
}

TEST_CASE("r3 stratified and unstratified searches agree on A+(B_2)", "[search]") {
  const auto a = a_plus_semigroup(2);
  std::size_t sets = 0, largest = 0;
  IndependentSearchOptions all;
  all.exhaustive = true;
  const auto singles = support_strata(2).singletons;
  const auto r = intermediate_rank_search(a, kBudget, all, [&](const IndexSet& u) {
    ++sets;
    largest = std::max(largest, u.size());
    CHECK((u & singles).empty());
    CHECK(u.size() <= 2 * 2 + 2 * 2 - 2);
  });
  CHECK(r.exact());
  CHECK(r.lower == 6);
  CHECK(largest == 6);
  CHECK(sets > 0);
}

TEST_CASE("r4 of A+(B_2): capped and uncapped searches agree", "[search][r4]") {
  const auto a = a_plus_semigroup(2);
  IndependentSearchOptions plain;
  const auto uncapped = upper_rank_search(a, kBudget, plain);
  IndependentSearchOptions capped;
  capped.strata = {
      {support_strata(2).constants, 2 * 2 / 4 + 2, 0},
      {support_strata(2).singletons, 4 * (2 * 2 / 4 + 2), 0},
      {support_strata(2).nsupport, 2 * 4, 0},
  };
  const auto with_caps = upper_rank_search(a, kBudget, capped);
  CHECK(uncapped.exact());
  CHECK(with_caps.exact());
  CHECK(uncapped.lower == with_caps.lower);
  CHECK(uncapped.lower >= 14);
  CHECK(uncapped.lower <= 23);
  CHECK(is_independent(a, uncapped.witness));
  CHECK(uncapped.lower == oracle::naive_max_independent(a));
}

TEST_CASE("searches are deterministic", "[search]") {
  const auto a = a_plus_semigroup(2);
  const auto x = upper_rank_search(a, kBudget);
  const auto y = upper_rank_search(a, kBudget);
  CHECK(x.witness == y.witness);
  CHECK(x.nodes == y.nodes);
  CHECK(lower_rank_exact(a, kBudget).witness == lower_rank_exact(a, kBudget).witness);
}

TEST_CASE("exhausted budgets yield bounds", "[search][budget]") {
  const auto a = a_plus_semigroup(3);
  SearchBudget tiny{std::chrono::milliseconds(50), 2000};
  const auto r4 = upper_rank_search(a, tiny);
  CHECK_FALSE(r4.complete);
  CHECK(r4.lower <= r4.upper);
  CHECK(is_independent(a, r4.witness));

  const auto r2 = lower_rank_exact(a, tiny);
  CHECK(r2.lower <= r2.upper);
  CHECK(is_generating(a, r2.witness));

  const auto r5 = large_rank_exact(a, 1, kBudget);  // prime subsets of size 1 only
  CHECK_FALSE(r5.exact());
  CHECK(r5.lower <= 144);
  CHECK(r5.upper >= 144);
}

TEST_CASE("smallest prime subsets by scan", "[search][r5]") {
  const auto a = a_plus_semigroup(3);
  const std::size_t m = a.size();
  // No single element is prime, and the first prime pair is V-like.
  for (std::size_t x = 0; x < m; ++x) CHECK_FALSE(is_prime_subset(a, IndexSet(m, {x})));
  std::size_t prime_pairs = 0;
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = x + 1; y < m; ++y)
      if (is_prime_subset(a, IndexSet(m, {x, y}))) ++prime_pairs;
  CHECK(prime_pairs > 0);
  BudgetMeter meter(kBudget);
  bool exhausted = false;
  const auto p = smallest_prime_subset(a, 3, meter, exhausted);
  REQUIRE(p);
  CHECK(p->size() == 2);
  CHECK(is_prime_subset(a, *p));
}
