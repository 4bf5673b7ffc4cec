#pragma once

// Brute-force reconstruction of A+(B_n) from first principles, independent
// of the closed-form classification in affine_map.hpp. Tractable for n <= 2.

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "bnrank/affine_map.hpp"
#include "bnrank/brandt.hpp"
#include "bnrank/errors.hpp"

namespace bnrank {

// Every h: B_n -> B_n with (a+b)h = ah + bh, as raw tables.
inline std::vector<MapTable> endomorphisms_bruteforce(int n) {
  require_valid_n(n);
  if (n > 2) {
    throw CapabilityError("endomorphism brute force needs (n^2+1)^(n^2+1) candidates; n = "
                          + std::to_string(n) + " is too large");
  }
  const auto elems = bn_elements(n);
  const std::size_t m = elems.size();
  std::vector<std::size_t> digits(m, 0);
  std::vector<MapTable> out;
  MapTable h(m);
  for (;;) {
    for (std::size_t i = 0; i < m; ++i) h[i] = elems[digits[i]];
    bool hom = true;
    for (std::size_t a = 0; a < m && hom; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        auto sum = bn_add_unchecked(elems[a], elems[b]);
        if (h[sum.index(n)] != bn_add_unchecked(h[a], h[b])) {
          hom = false;
          break;
        }
      }
    }
    if (hom) out.push_back(h);

    std::size_t pos = 0;
    while (pos < m && ++digits[pos] == m) digits[pos++] = 0;
    if (pos == m) break;
  }
  return out;
}

// Closure of Aff(B_n) = {g + h : g endomorphism, h constant} under pointwise
// addition. Tables are kept raw throughout; no shape is assumed.
inline std::set<MapTable> affine_closure_oracle(int n) {
  require_valid_n(n);
  if (n > 2) throw CapabilityError("affine closure oracle supports n <= 2");
  const auto elems = bn_elements(n);
  std::set<MapTable> result;
  std::vector<MapTable> members;
  auto add = [&](const MapTable& t) {
    if (result.insert(t).second) members.push_back(t);
  };
  for (const auto& g : endomorphisms_bruteforce(n)) {
    for (auto c : elems) add(add_tables(g, MapTable(elems.size(), c)));
  }
  // Semi-naive fixpoint: each new member is summed with all processed ones.
  for (std::size_t done = 0; done < members.size(); ++done) {
    for (std::size_t j = 0; j <= done; ++j) {
      add(add_tables(members[done], members[j]));
      add(add_tables(members[j], members[done]));
    }
  }
  return result;
}

}  // namespace bnrank
