#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bnrank/a_plus.hpp"
#include "bnrank/errors.hpp"
#include "bnrank/kernel.hpp"
#include "bnrank/semigroup.hpp"
#include "bnrank/witnesses.hpp"
#include "oracles.hpp"

using namespace bnrank;

namespace {

std::size_t idx(const FiniteSemigroup& s, const std::string& label) {
  auto i = s.index_of(label);
  REQUIRE(i);
  return *i;
}

IndexSet set_of(const FiniteSemigroup& s, std::initializer_list<const char*> labels) {
  IndexSet u(s.size());
  for (auto l : labels) u.insert(idx(s, l));
  return u;
}

oracle::Mask to_mask(const IndexSet& u) {
  oracle::Mask m = 0;
  for (auto i : u) m |= oracle::Mask{1} << i;
  return m;
}

FiniteSemigroup trivial() { return FiniteSemigroup({"e"}, {0}); }

}  // namespace

TEST_CASE("from_elements builds Cayley tables", "[semigroup]") {
  const auto b2 = from_elements(bn_elements(2), [](BnElement a, BnElement b) { return bn_add(2, a, b); }, bn_label,
                                2, [](BnElement a) { return a.index(2); });
  CHECK(b2.size() == 5);
  CHECK(b2 == brandt_semigroup(2));
  CHECK(a_plus_semigroup(2).size() == 29);
  CHECK(a_plus_semigroup(3).size() == 145);

  // {0, 1} under addition mod 3 escapes the list.
  std::vector<int> partial{0, 1};
  try {
    from_elements(partial, [](int a, int b) { return (a + b) % 3; }, [](int a) { return std::to_string(a); });
    FAIL("expected ClosureViolation");
  } catch (const ClosureViolation& e) {
    CHECK(e.left() == 1);
    CHECK(e.right() == 1);
  }
}

TEST_CASE("FiniteSemigroup validates its table", "[semigroup]") {
  CHECK_THROWS_AS(FiniteSemigroup({"a", "b"}, {0, 1, 1, 2}), ValidationError);
  CHECK_THROWS_AS(FiniteSemigroup({"a", "b"}, {0, 1, 1}), ValidationError);
  // x+y = y+1 mod 2 style table that breaks associativity.
  CHECK_THROWS_AS(FiniteSemigroup({"a", "b"}, {1, 0, 0, 0}), ValidationError);
}

TEST_CASE("closure examples", "[semigroup]") {
  const auto a = a_plus_semigroup(2);
  CHECK(closure(a, set_of(a, {"xi(1,2)"})) == set_of(a, {"xi(1,2)", "xi(0)"}));
  CHECK(closure(a, IndexSet(a.size())).empty());
  CHECK(closure(a, construct_witness(2, WitnessKind::SUnionT)) == IndexSet::full(a.size()));
  CHECK(is_generating(a, construct_witness(2, WitnessKind::SUnionT)));
  CHECK_FALSE(is_generating(a, construct_witness(2, WitnessKind::S)));
  CHECK(closure(a, construct_witness(2, WitnessKind::S)).size() == 5);
  CHECK(is_generating(a, IndexSet::full(a.size())));
  CHECK(closure_contains(a, set_of(a, {"xi(1,2)", "xi(2,1)"}), idx(a, "xi(1,1)")));
  CHECK_FALSE(closure_contains(a, set_of(a, {"xi(1,2)"}), idx(a, "xi(1,1)")));
}

TEST_CASE("independence examples", "[semigroup]") {
  const auto a = a_plus_semigroup(2);
  CHECK(is_independent(a, construct_witness(2, WitnessKind::P2)));
  CHECK_FALSE(is_independent(a, set_of(a, {"xi(1,2)", "xi(0)"})));
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(is_independent(a, IndexSet(a.size(), {i})));
  CHECK_THROWS_AS(is_independent(a, IndexSet(a.size())), InvalidParameter);
}

TEST_CASE("Green's classes", "[semigroup][greens]") {
  for (int n = 1; n <= 4; ++n) {
    const auto b = brandt_semigroup(n);
    for (auto side : {Side::Right, Side::Left}) {
      const auto g = greens_classes(b, side);
      CHECK(g.classes[g.class_of[0]] == std::vector<std::size_t>{0});
      CHECK(g.classes.size() == static_cast<std::size_t>(n) + 1);  // rows (or columns) plus zero
    }
  }
  for (int n = 2; n <= 3; ++n) {
    const auto a = a_plus_semigroup(n);
    const auto r = greens_classes(a, Side::Right);
    const auto nsupport = support_strata(n).nsupport;
    std::set<std::size_t> classes;
    for (auto i : nsupport) classes.insert(r.class_of[i]);
    CHECK(classes.size() == factorial(n) * static_cast<std::size_t>(n));
    for (const auto& c : r.classes) CHECK(std::is_sorted(c.begin(), c.end()));
  }
}

TEST_CASE("principal ideals include the element", "[semigroup][greens]") {
  const auto s = trivial();
  CHECK(principal_ideal(s, 0, Side::Right) == IndexSet(1, {0}));
  const auto a = a_plus_semigroup(2);
  const auto zero_ideal = principal_ideal(a, 0, Side::Left);
  CHECK(zero_ideal == IndexSet(a.size(), {0}));
}

TEST_CASE("bands", "[semigroup]") {
  CHECK_FALSE(is_band(a_plus_semigroup(2)));
  CHECK_FALSE(is_band(brandt_semigroup(2)));
  CHECK(is_band(trivial()));
  CHECK(is_band(a_plus_semigroup(1)));
  CHECK(is_band(brandt_semigroup(1)));
}

TEST_CASE("indecomposable elements", "[semigroup]") {
  const auto a2 = a_plus_semigroup(2);
  const auto ind2 = indecomposables(a2);
  CHECK(ind2.contains(idx(a2, "xi(1,2)")));
  CHECK(ind2.contains(idx(a2, "xi(2,1)")));
  CHECK(ind2.size() == 2);
  CHECK(indecomposables(a_plus_semigroup(3)).empty());
  CHECK(indecomposables(trivial()) == IndexSet(1, {0}));
  // Definition, checked directly on A+(B_2).
  for (std::size_t x = 0; x < a2.size(); ++x) {
    bool decomposable = false;
    for (std::size_t b = 0; b < a2.size(); ++b)
      for (std::size_t c = 0; c < a2.size(); ++c)
        if (b != x && c != x && a2.sum(b, c) == x) decomposable = true;
    CHECK(ind2.contains(x) == !decomposable);
  }
}

TEST_CASE("prime subsets", "[semigroup]") {
  for (int n = 2; n <= 4; ++n) {
    const auto a = a_plus_semigroup(n);
    CHECK(is_prime_subset(a, construct_witness(n, WitnessKind::V)));
  }
  const auto a = a_plus_semigroup(2);
  CHECK(is_prime_subset(a, set_of(a, {"xi(1,2)"})));
  CHECK_FALSE(is_prime_subset(a, set_of(a, {"xi(0)"})));
  CHECK(is_prime_subset(a, IndexSet::full(a.size())));
  CHECK_THROWS_AS(is_prime_subset(a, IndexSet(a.size())), InvalidParameter);
  // Complement of a prime subset is a subsemigroup.
  const auto v = IndexSet::full(a.size()) - set_of(a, {"xi(1,2)"});
  CHECK(closure(a, v) == v);
}

TEST_CASE("subsemigroup restricts the table", "[semigroup]") {
  const auto a = a_plus_semigroup(3);
  const auto constants = support_strata(3).constants;
  const auto c = subsemigroup(a, constants);
  CHECK(c.size() == 10);
  CHECK(c.label(0) == "xi(0)");
  CHECK(c.label(1) == "xi(1,1)");
  // Isomorphic to B_3 via xi(p,q) <-> (p,q).
  const auto b = brandt_semigroup(3);
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) CHECK(c.sum(i, j) == b.sum(i, j));
  CHECK_THROWS_AS(subsemigroup(a, set_of(a, {"xi(1,2)"})), InvalidParameter);
}

TEST_CASE("closure agrees with a naive fixpoint and is monotone", "[semigroup][property]") {
  std::mt19937 rng(7);
  auto sgs = oracle::random_semigroups(20, 4, 30, 11);
  sgs.push_back(brandt_semigroup(4));
  sgs.push_back(a_plus_semigroup(2));
  for (const auto& s : sgs) {
    std::bernoulli_distribution coin(0.15);
    for (int trial = 0; trial < 50; ++trial) {
      IndexSet u(s.size()), w(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (coin(rng)) u.insert(i);
        if (coin(rng)) w.insert(i);
      }
      w |= u;
      const auto cu = closure(s, u);
      CHECK(to_mask(cu) == oracle::naive_closure(s, to_mask(u)));
      CHECK(cu.is_subset_of(closure(s, w)));
      CHECK(closure(s, cu) == cu);
    }
  }
}

TEST_CASE("independence is hereditary on A+(B_2) up to size 4", "[semigroup][property]") {
  const auto a = a_plus_semigroup(2);
  const std::size_t m = a.size();
  std::size_t independent_sets = 0;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> walk = [&](std::size_t from) {
    if (!pick.empty()) {
      const auto u = IndexSet::from_range(m, pick);
      if (is_independent(a, u)) {
        ++independent_sets;
        for (std::size_t drop = 0; drop < pick.size() && pick.size() > 1; ++drop) {
          auto v = u;
          v.erase(pick[drop]);
          REQUIRE(is_independent(a, v));
        }
      }
    }
    if (pick.size() == 4) return;
    for (std::size_t i = from; i < m; ++i) {
      pick.push_back(i);
      walk(i + 1);
      pick.pop_back();
    }
  };
  walk(0);
  CHECK(independent_sets > 0);
}

TEST_CASE("independence is hereditary on random subsets", "[semigroup][property]") {
  std::mt19937 rng(3);
  for (int n = 2; n <= 3; ++n) {
    const auto a = a_plus_semigroup(n);
    const auto i_set = construct_witness(n, WitnessKind::I).to_vector();
    std::uniform_int_distribution<std::size_t> pick(0, i_set.size() - 1);
    for (int trial = 0; trial < 40; ++trial) {
      IndexSet v(a.size());
      const std::size_t k = 1 + pick(rng) % 8;
      while (v.size() < k) v.insert(i_set[pick(rng)]);
      CHECK(is_independent(a, v));
    }
  }
}

TEST_CASE("kernels agree with the generic closure", "[semigroup][kernel]") {
  std::mt19937 rng(5);
  for (int n = 2; n <= 3; ++n) {
    const auto a = a_plus_semigroup(n);
    const KernelDyn dyn(a);
    std::bernoulli_distribution coin(0.05);
    for (int trial = 0; trial < 30; ++trial) {
      IndexSet u(a.size());
      for (std::size_t i = 0; i < a.size(); ++i)
        if (coin(rng)) u.insert(i);
      const auto expected = closure(a, u);
      CHECK(dyn.to_index_set(dyn.closure(dyn.from_index_set(u))) == expected);
      if (a.size() <= Kernel64::kMaxSize) {
        const Kernel64 k(a);
        CHECK(k.to_index_set(k.closure(k.from_index_set(u))) == expected);
      }
    }
  }
  const auto b = brandt_semigroup(4);
  const Kernel64 k(b);
  const KernelDyn dyn(b);
  for (std::size_t y = 0; y < b.size(); ++y) {
    const auto base = closure(b, IndexSet(b.size(), {1}));
    auto with_y = base;
    with_y.insert(y);
    const auto expected = closure(b, with_y);
    CHECK(k.to_index_set(k.extend(k.from_index_set(base), y)) == expected);
    CHECK(dyn.extend(base, y) == expected);
  }
}
