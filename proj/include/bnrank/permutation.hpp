#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "bnrank/errors.hpp"

namespace bnrank {

// A permutation of {0, ..., n-1}; images[i] is the image of i. Maps act on
// the right, so "i sigma" is sigma(i) here.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    if (!is_bijection(images_)) throw InvalidParameter("not a permutation");
  }

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
  }

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const noexcept { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    }
    return Permutation(std::move(inv));
  }

  // Rank in the lexicographic order of image sequences (Lehmer code).
  std::size_t lex_rank() const noexcept {
    const std::size_t n = images_.size();
    std::size_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t smaller = 0;
      for (std::size_t j = i + 1; j < n; ++j) smaller += images_[j] < images_[i];
      rank = rank * (n - i) + smaller;
    }
    return rank;
  }

  static Permutation from_lex_rank(int n, std::size_t rank) {
    std::vector<std::size_t> digits(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
      std::size_t base = static_cast<std::size_t>(n - i);
      digits[static_cast<std::size_t>(i)] = rank % base;
      rank /= base;
    }
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> out;
    out.reserve(pool.size());
    for (std::size_t d : digits) {
      out.push_back(pool[d]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
    }
    return Permutation(std::move(out));
  }

  auto operator<=>(const Permutation&) const = default;

  static bool is_bijection(const std::vector<int>& v) {
    std::vector<bool> seen(v.size(), false);
    for (int x : v) {
      if (x < 0 || static_cast<std::size_t>(x) >= v.size() || seen[static_cast<std::size_t>(x)]) {
        return false;
      }
      seen[static_cast<std::size_t>(x)] = true;
    }
    return true;
  }

 private:
  std::vector<int> images_;
};

inline std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

// All of S_n in lexicographic order of image sequences.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace bnrank
