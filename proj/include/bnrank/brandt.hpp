#pragma once

// The Brandt semigroup B_n = ([n] x [n]) ∪ {0} with
//   (i,j) + (k,l) = (i,l) if j == k, else 0,
// where 0 is a two-sided zero.
//
// Indices are 0-based in memory. Labels use 1-based indices: "0" for the
// zero and "(i,j)" for pairs.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bnrank/errors.hpp"

namespace bnrank {

class BnElement {
 public:
  constexpr BnElement() noexcept = default;

  static constexpr BnElement zero() noexcept { return BnElement{}; }

  // 0-based row/column.
  static constexpr BnElement pair(int row, int col) noexcept {
    BnElement e;
    e.zero_ = false;
    e.row_ = static_cast<std::int16_t>(row);
    e.col_ = static_cast<std::int16_t>(col);
    return e;
  }

  constexpr bool is_zero() const noexcept { return zero_; }
  constexpr int row() const noexcept { return row_; }
  constexpr int col() const noexcept { return col_; }

  constexpr bool valid_for(int n) const noexcept {
    return zero_ || (row_ >= 0 && row_ < n && col_ >= 0 && col_ < n);
  }

  // Position in the canonical order: zero first, then pairs row-major.
  constexpr std::size_t index(int n) const noexcept {
    return zero_ ? 0 : 1 + static_cast<std::size_t>(row_) * n + col_;
  }

  static constexpr BnElement from_index(int n, std::size_t idx) noexcept {
    if (idx == 0) return zero();
    return pair(static_cast<int>((idx - 1) / n), static_cast<int>((idx - 1) % n));
  }

  constexpr auto operator<=>(const BnElement&) const = default;

 private:
  // zero_ first so that the defaulted ordering puts the zero before pairs.
  bool zero_ = true;
  std::int16_t row_ = 0;
  std::int16_t col_ = 0;
};

inline void require_valid_n(int n) {
  if (n < 1) throw InvalidParameter("n must be >= 1, got " + std::to_string(n));
}

inline void require_valid(int n, BnElement a) {
  if (!a.valid_for(n)) {
    throw InvalidParameter("B_n element out of range for n = " + std::to_string(n));
  }
}

// Canonical ordering: 0, (1,1), (1,2), ..., (n,n).
inline std::vector<BnElement> bn_elements(int n) {
  require_valid_n(n);
  std::vector<BnElement> out;
  out.reserve(static_cast<std::size_t>(n) * n + 1);
  out.push_back(BnElement::zero());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.push_back(BnElement::pair(i, j));
  }
  return out;
}

// Unchecked sum, for inner loops where both operands are known valid.
constexpr BnElement bn_add_unchecked(BnElement a, BnElement b) noexcept {
  if (a.is_zero() || b.is_zero() || a.col() != b.row()) return BnElement::zero();
  return BnElement::pair(a.row(), b.col());
}

inline BnElement bn_add(int n, BnElement a, BnElement b) {
  require_valid_n(n);
  require_valid(n, a);
  require_valid(n, b);
  return bn_add_unchecked(a, b);
}

inline std::string bn_label(BnElement a) {
  if (a.is_zero()) return "0";
  return "(" + std::to_string(a.row() + 1) + "," + std::to_string(a.col() + 1) + ")";
}

// Inverse of bn_label. Throws InvalidParameter on malformed input.
inline BnElement parse_bn_label(std::string_view s) {
  if (s == "0") return BnElement::zero();
  auto fail = [&]() -> BnElement {
    throw InvalidParameter("malformed B_n label '" + std::string(s) + "'");
  };
  if (s.size() < 5 || s.front() != '(' || s.back() != ')') return fail();
  auto comma = s.find(',');
  if (comma == std::string_view::npos) return fail();
  auto number = [&](std::string_view t) {
    if (t.empty() || t.size() > 4) fail();
    int v = 0;
    for (char c : t) {
      if (c < '0' || c > '9') fail();
      v = v * 10 + (c - '0');
    }
    if (v < 1) fail();
    return v;
  };
  int i = number(s.substr(1, comma - 1));
  int j = number(s.substr(comma + 1, s.size() - comma - 2));
  return BnElement::pair(i - 1, j - 1);
}

}  // namespace bnrank
