#pragma once

// Cayley tables for B_n and A+(B_n), and structural facts about A+(B_n)
// that the rank computations use as cross-checks or optional pruning.

#include <cstddef>
#include <string>
#include <vector>

#include "bnrank/affine_map.hpp"
#include "bnrank/brandt.hpp"
#include "bnrank/index_set.hpp"
#include "bnrank/semigroup.hpp"

namespace bnrank {

inline FiniteSemigroup brandt_semigroup(int n) {
  require_valid_n(n);
  struct Hash {
    std::size_t operator()(BnElement e) const noexcept { return e.index(1 << 10); }
  };
  return from_elements(
      bn_elements(n), [](BnElement a, BnElement b) { return bn_add_unchecked(a, b); },
      [](BnElement a) { return bn_label(a); }, n, Hash{});
}

inline FiniteSemigroup a_plus_semigroup(int n) {
  require_valid_n(n);
  return from_elements(
      enumerate_a_plus(n), [n](const AffineMap& f, const AffineMap& g) { return add_maps(n, f, g); },
      [](const AffineMap& f) { return map_label(f); }, n, AffineMapHash{});
}

// Elements of A+(B_n) grouped by support size, in canonical index ranges.
struct SupportStrata {
  IndexSet constants;   // support 0 and n^2+1: C_{B_n}, including xi(0)
  IndexSet singletons;  // support 1
  IndexSet nsupport;    // support n
};

inline SupportStrata support_strata(int n) {
  const std::size_t m = a_plus_size_formula(n);
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  SupportStrata s{IndexSet(m), IndexSet(m), IndexSet(m)};
  for (std::size_t i = 0; i < m; ++i) {
    if (i <= nn) {
      s.constants.insert(i);
    } else if (n >= 2 && i <= nn + nn * nn) {
      s.singletons.insert(i);
    } else {
      s.nsupport.insert(i);
    }
  }
  return s;
}

inline std::size_t const_index(int n, int row, int col) {
  return BnElement::pair(row, col).index(n);
}

// The R-class key for f != xi(0) on A+(B_n): support and the first projection
// of each image (second projection for L on constants).
inline std::vector<int> projection_key(int n, const AffineMap& f, int projection) {
  std::vector<int> key;
  for (auto x : to_table(n, f)) {
    if (x.is_zero()) {
      key.push_back(-1);
    } else {
      key.push_back(projection == 1 ? x.row() : x.col());
    }
  }
  return key;
}

}  // namespace bnrank
