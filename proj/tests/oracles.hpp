#pragma once

// Independent brute-force oracles for the tests. Nothing here calls the
// library's closure or search code: subsets are bitmasks, closures are naive
// fixpoints over the Cayley table.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "bnrank/semigroup.hpp"

namespace oracle {

using Mask = std::uint32_t;

inline Mask naive_closure(const bnrank::FiniteSemigroup& s, Mask u) {
  const std::size_t m = s.size();
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t a = 0; a < m; ++a) {
      if (!(u >> a & 1U)) continue;
      for (std::size_t b = 0; b < m; ++b) {
        if (!(u >> b & 1U)) continue;
        const Mask bit = Mask{1} << s.sum(a, b);
        if (!(u & bit)) {
          u |= bit;
          grew = true;
        }
      }
    }
  }
  return u;
}

inline bool naive_independent(const bnrank::FiniteSemigroup& s, Mask u) {
  for (std::size_t a = 0; a < s.size(); ++a) {
    if ((u >> a & 1U) && (naive_closure(s, u & ~(Mask{1} << a)) >> a & 1U)) return false;
  }
  return true;
}

struct Ranks {
  std::size_t r[6] = {};  // r[1]..r[5]
};

// Every rank by visiting all 2^m subsets. Needs m <= 20.
inline Ranks all_ranks(const bnrank::FiniteSemigroup& s) {
  const std::size_t m = s.size();
  const Mask full = m == 32 ? ~Mask{0} : (Mask{1} << m) - 1;
  std::vector<bool> independent(std::size_t{1} << m), generating(std::size_t{1} << m);
  for (Mask u = 1; u <= full && u != 0; ++u) {
    generating[u] = naive_closure(s, u) == full;
    independent[u] = naive_independent(s, u);
  }
  Ranks out;
  out.r[2] = m;
  std::vector<bool> all_independent(m + 1, true);
  std::size_t largest_nongenerating = 0;
  for (Mask u = 1; u <= full && u != 0; ++u) {
    const auto k = static_cast<std::size_t>(__builtin_popcount(u));
    if (!independent[u]) all_independent[k] = false;
    if (generating[u]) out.r[2] = std::min(out.r[2], k);
    if (generating[u] && independent[u]) out.r[3] = std::max(out.r[3], k);
    if (independent[u]) out.r[4] = std::max(out.r[4], k);
    if (!generating[u]) largest_nongenerating = std::max(largest_nongenerating, k);
  }
  for (std::size_t k = 1; k <= m && all_independent[k]; ++k) out.r[1] = k;
  out.r[5] = largest_nongenerating + 1;
  return out;
}

// Largest independent set by a plain depth-first search: grow U in index
// order and stop when U plus every remaining compatible element cannot beat
// the best so far. Needs m <= 32.
inline std::size_t naive_max_independent(const bnrank::FiniteSemigroup& s) {
  const std::size_t m = s.size();
  std::size_t best = 0;
  std::function<void(Mask, std::size_t, std::size_t)> dfs = [&](Mask u, std::size_t size, std::size_t from) {
    best = std::max(best, size);
    std::vector<std::size_t> ok;
    for (std::size_t y = from; y < m; ++y) {
      if (naive_independent(s, u | (Mask{1} << y))) ok.push_back(y);
    }
    for (std::size_t i = 0; i < ok.size(); ++i) {
      if (size + (ok.size() - i) <= best) return;
      dfs(u | (Mask{1} << ok[i]), size + 1, ok[i] + 1);
    }
  };
  dfs(0, 0, 0);
  return best;
}

// Transformation semigroup generated by `gens` (maps on {0..d-1}) under
// composition "first x then y", built with a plain BFS.
inline bnrank::FiniteSemigroup transformation_semigroup(const std::vector<std::vector<int>>& gens) {
  using T = std::vector<int>;
  auto compose = [](const T& x, const T& y) {
    T out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = y[static_cast<std::size_t>(x[i])];
    return out;
  };
  std::map<T, std::size_t> seen;
  std::vector<T> elems;
  for (const auto& g : gens) {
    if (seen.emplace(g, elems.size()).second) elems.push_back(g);
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      auto t = compose(elems[i], g);
      if (seen.emplace(t, elems.size()).second) elems.push_back(t);
    }
  }
  std::vector<std::string> labels;
  std::vector<bnrank::FiniteSemigroup::Index> table;
  for (const auto& e : elems) {
    std::string l;
    for (int v : e) l += static_cast<char>('0' + v);
    labels.push_back(l);
  }
  for (const auto& x : elems)
    for (const auto& y : elems) table.push_back(static_cast<bnrank::FiniteSemigroup::Index>(seen.at(compose(x, y))));
  return bnrank::FiniteSemigroup(std::move(labels), std::move(table));
}

// Random transformation semigroups on `degree` points with at most
// `max_size` elements.
inline std::vector<bnrank::FiniteSemigroup> random_semigroups(std::size_t count, int degree, std::size_t max_size,
                                                              std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> point(0, degree - 1);
  std::uniform_int_distribution<int> gens(1, 3);
  std::vector<bnrank::FiniteSemigroup> out;
  while (out.size() < count) {
    std::vector<std::vector<int>> g(static_cast<std::size_t>(gens(rng)));
    for (auto& t : g) {
      t.resize(static_cast<std::size_t>(degree));
      for (auto& v : t) v = point(rng);
    }
    auto s = transformation_semigroup(g);
    if (s.size() >= 2 && s.size() <= max_size) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace oracle
