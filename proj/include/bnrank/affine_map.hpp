#pragma once

// Elements of A+(B_n), the additive semigroup generated by the affine maps
// over B_n inside (M(B_n), +) with pointwise addition. For n >= 2 every
// element has exactly one of four shapes:
//
//   ConstZero            x -> 0 for all x                     support 0
//   Const{c}             x -> c, c != 0                       support n^2+1
//   Singleton{k,l,p,q}   (k,l) -> (p,q), all else -> 0        support 1
//   NSupport{p,q,sigma}  (i,p) -> (i sigma, q), else -> 0     support n
//
// Raw holds an arbitrary map as a lookup table and is used only by the
// brute-force oracles. All indices are 0-based.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bnrank/brandt.hpp"
#include "bnrank/errors.hpp"
#include "bnrank/permutation.hpp"

namespace bnrank {

// Values indexed by the canonical order of bn_elements(n).
using MapTable = std::vector<BnElement>;

struct ConstZero {
  auto operator<=>(const ConstZero&) const = default;
};

struct Const {
  BnElement value;
  auto operator<=>(const Const&) const = default;
};

struct Singleton {
  int k = 0, l = 0, p = 0, q = 0;
  auto operator<=>(const Singleton&) const = default;
};

struct NSupport {
  int p = 0, q = 0;
  Permutation sigma;
  auto operator<=>(const NSupport&) const = default;
};

struct Raw {
  MapTable table;
  auto operator<=>(const Raw&) const = default;
};

using AffineMap = std::variant<ConstZero, Const, Singleton, NSupport, Raw>;

inline bool is_raw(const AffineMap& f) noexcept { return std::holds_alternative<Raw>(f); }

inline void require_valid(int n, const AffineMap& f) {
  require_valid_n(n);
  auto in_range = [n](int i) { return i >= 0 && i < n; };
  bool ok = std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ConstZero>) {
          return true;
        } else if constexpr (std::is_same_v<T, Const>) {
          return !v.value.is_zero() && v.value.valid_for(n);
        } else if constexpr (std::is_same_v<T, Singleton>) {
          return in_range(v.k) && in_range(v.l) && in_range(v.p) && in_range(v.q);
        } else if constexpr (std::is_same_v<T, NSupport>) {
          return in_range(v.p) && in_range(v.q) && v.sigma.degree() == n;
        } else {
          if (v.table.size() != static_cast<std::size_t>(n) * n + 1) return false;
          for (auto x : v.table) {
            if (!x.valid_for(n)) return false;
          }
          return true;
        }
      },
      f);
  if (!ok) throw InvalidParameter("map is not valid for n = " + std::to_string(n));
}

namespace detail {

inline BnElement apply_unchecked(const AffineMap& f, BnElement x, int n) {
  return std::visit(
      [&](const auto& v) -> BnElement {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ConstZero>) {
          return BnElement::zero();
        } else if constexpr (std::is_same_v<T, Const>) {
          return v.value;
        } else if constexpr (std::is_same_v<T, Singleton>) {
          if (!x.is_zero() && x.row() == v.k && x.col() == v.l) return BnElement::pair(v.p, v.q);
          return BnElement::zero();
        } else if constexpr (std::is_same_v<T, NSupport>) {
          if (!x.is_zero() && x.col() == v.p) return BnElement::pair(v.sigma(x.row()), v.q);
          return BnElement::zero();
        } else {
          return v.table[x.index(n)];
        }
      },
      f);
}

// For n = 1 the singleton map (1,1) -> (1,1) and the 1-support map
// (1,1;id) coincide; the latter is the canonical name.
inline AffineMap canonical_singleton(int n, int k, int l, int p, int q) {
  if (n == 1) return NSupport{0, 0, Permutation::identity(1)};
  return Singleton{k, l, p, q};
}

}  // namespace detail

inline BnElement apply(int n, const AffineMap& f, BnElement x) {
  require_valid(n, f);
  require_valid(n, x);
  return detail::apply_unchecked(f, x, n);
}

inline MapTable to_table(int n, const AffineMap& f) {
  require_valid(n, f);
  MapTable out;
  out.reserve(static_cast<std::size_t>(n) * n + 1);
  for (auto x : bn_elements(n)) out.push_back(detail::apply_unchecked(f, x, n));
  return out;
}

inline MapTable add_tables(const MapTable& a, const MapTable& b) {
  MapTable out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = bn_add_unchecked(a[i], b[i]);
  return out;
}

// Pointwise sum. Canonical inputs give a canonical output; any Raw input
// gives a Raw output.
inline AffineMap add_maps(int n, const AffineMap& f, const AffineMap& g) {
  require_valid(n, f);
  require_valid(n, g);
  if (is_raw(f) || is_raw(g)) return Raw{add_tables(to_table(n, f), to_table(n, g))};
  if (std::holds_alternative<ConstZero>(f) || std::holds_alternative<ConstZero>(g)) {
    return ConstZero{};
  }

  const AffineMap zero = ConstZero{};
  if (auto* c = std::get_if<Const>(&f)) {
    const BnElement a = c->value;
    if (auto* d = std::get_if<Const>(&g)) {
      auto s = bn_add_unchecked(a, d->value);
      return s.is_zero() ? zero : AffineMap{Const{s}};
    }
    if (auto* s = std::get_if<Singleton>(&g)) {
      if (a.col() != s->p) return zero;
      return detail::canonical_singleton(n, s->k, s->l, a.row(), s->q);
    }
    const auto& m = std::get<NSupport>(g);
    // Only the argument (i,p) with i sigma = col(a) survives.
    return detail::canonical_singleton(n, m.sigma.inverse()(a.col()), m.p, a.row(), m.q);
  }

  if (auto* s = std::get_if<Singleton>(&f)) {
    if (auto* d = std::get_if<Const>(&g)) {
      if (s->q != d->value.row()) return zero;
      return detail::canonical_singleton(n, s->k, s->l, s->p, d->value.col());
    }
    if (auto* t = std::get_if<Singleton>(&g)) {
      if (s->k != t->k || s->l != t->l || s->q != t->p) return zero;
      return detail::canonical_singleton(n, s->k, s->l, s->p, t->q);
    }
    const auto& m = std::get<NSupport>(g);
    if (s->l != m.p || s->q != m.sigma(s->k)) return zero;
    return detail::canonical_singleton(n, s->k, s->l, s->p, m.q);
  }

  const auto& m = std::get<NSupport>(f);
  if (auto* d = std::get_if<Const>(&g)) {
    if (m.q != d->value.row()) return zero;
    return NSupport{m.p, d->value.col(), m.sigma};
  }
  if (auto* t = std::get_if<Singleton>(&g)) {
    if (t->l != m.p || m.q != t->p) return zero;
    return detail::canonical_singleton(n, t->k, t->l, m.sigma(t->k), t->q);
  }
  const auto& h = std::get<NSupport>(g);
  if (m.p != h.p) return zero;
  // (i sigma, q) + (i tau, q') is nonzero only where i tau = q.
  const int i = h.sigma.inverse()(m.q);
  return detail::canonical_singleton(n, i, m.p, m.sigma(i), h.q);
}

inline std::size_t support_size(int n, const AffineMap& f) {
  require_valid(n, f);
  return std::visit(
      [&](const auto& v) -> std::size_t {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ConstZero>) {
          return 0;
        } else if constexpr (std::is_same_v<T, Const>) {
          return static_cast<std::size_t>(n) * n + 1;
        } else if constexpr (std::is_same_v<T, Singleton>) {
          return 1;
        } else if constexpr (std::is_same_v<T, NSupport>) {
          return static_cast<std::size_t>(n);
        } else {
          std::size_t k = 0;
          for (auto x : v.table) k += !x.is_zero();
          return k;
        }
      },
      f);
}

inline std::size_t table_support_size(const MapTable& t) {
  std::size_t k = 0;
  for (auto x : t) k += !x.is_zero();
  return k;
}

// The automorphism (i,j) -> (i sigma, j sigma), 0 -> 0. Its support is n^2,
// so it is not itself an element of A+(B_n).
inline AffineMap phi_from_perm(int n, const Permutation& sigma) {
  require_valid_n(n);
  if (sigma.degree() != n) throw InvalidParameter("permutation degree differs from n");
  MapTable t;
  for (auto x : bn_elements(n)) {
    t.push_back(x.is_zero() ? x : BnElement::pair(sigma(x.row()), sigma(x.col())));
  }
  return Raw{std::move(t)};
}

// For (p,q;sigma) returns (sigma, (p sigma, q)), so that
// phi_sigma + xi_(p sigma, q) equals the map pointwise.
inline std::optional<std::pair<Permutation, BnElement>> decompose_affine(int n,
                                                                         const AffineMap& f) {
  require_valid(n, f);
  const auto* m = std::get_if<NSupport>(&f);
  if (m == nullptr) return std::nullopt;
  return std::pair{m->sigma, BnElement::pair(m->sigma(m->p), m->q)};
}

// Constants first (zero, then row-major), then singletons ordered by
// (k,l,p,q), then n-support maps ordered by (p,q,lex rank of sigma).
// n = 1 yields {xi(0), xi(1,1), ns(1,1;[1])}.
inline std::vector<AffineMap> enumerate_a_plus(int n) {
  require_valid_n(n);
  std::vector<AffineMap> out;
  out.push_back(ConstZero{});
  for (auto c : bn_elements(n)) {
    if (!c.is_zero()) out.push_back(Const{c});
  }
  if (n == 1) {
    out.push_back(NSupport{0, 0, Permutation::identity(1)});
    return out;
  }
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) out.push_back(Singleton{k, l, p, q});
  const auto perms = all_permutations(n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (const auto& s : perms) out.push_back(NSupport{p, q, s});
  return out;
}

// Position of a canonical element in enumerate_a_plus(n).
inline std::size_t a_plus_index(int n, const AffineMap& f) {
  require_valid(n, f);
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  return std::visit(
      [&](const auto& v) -> std::size_t {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ConstZero>) {
          return 0;
        } else if constexpr (std::is_same_v<T, Const>) {
          return v.value.index(n);
        } else if constexpr (std::is_same_v<T, Singleton>) {
          if (n == 1) throw InvalidParameter("n = 1 has no separate singleton maps");
          return 1 + nn + ((static_cast<std::size_t>(v.k) * n + v.l) * n + v.p) * n + v.q;
        } else if constexpr (std::is_same_v<T, NSupport>) {
          if (n == 1) return 2;
          return 1 + nn + nn * nn + (static_cast<std::size_t>(v.p) * n + v.q) * factorial(n)
                 + v.sigma.lex_rank();
        } else {
          throw InvalidParameter("raw maps have no canonical index");
        }
      },
      f);
}

inline std::size_t a_plus_size_formula(int n) {
  require_valid_n(n);
  if (n == 1) return 3;
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  return (factorial(n) + 1) * nn + nn * nn + 1;
}

// Recognises a raw table as one of the canonical shapes, or nullopt if it is
// not an element of A+(B_n).
inline std::optional<AffineMap> canonicalize(int n, const MapTable& t) {
  require_valid_n(n);
  const auto elems = bn_elements(n);
  if (t.size() != elems.size()) throw InvalidParameter("table size differs from |B_n|");
  std::optional<AffineMap> guess;
  const std::size_t supp = table_support_size(t);
  if (supp == 0) {
    guess = ConstZero{};
  } else if (supp == elems.size()) {
    guess = Const{t[0]};
  } else {
    // Singletons and n-support maps: read the shape off the support.
    std::vector<BnElement> args;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (!t[i].is_zero()) args.push_back(elems[i]);
    }
    const BnElement first = args.front();
    if (supp == static_cast<std::size_t>(n)) {
      std::vector<int> images(static_cast<std::size_t>(n), -1);
      for (auto x : args) {
        if (x.col() == first.col()) images[static_cast<std::size_t>(x.row())] = t[x.index(n)].row();
      }
      if (Permutation::is_bijection(images)) {
        guess = NSupport{first.col(), t[first.index(n)].col(), Permutation(images)};
      }
    } else if (supp == 1) {
      const BnElement v = t[first.index(n)];
      guess = detail::canonical_singleton(n, first.row(), first.col(), v.row(), v.col());
    }
  }
  if (guess && to_table(n, *guess) == t) return guess;
  return std::nullopt;
}

namespace detail {
inline std::string one_based(int i) { return std::to_string(i + 1); }
}  // namespace detail

inline std::string map_label(const AffineMap& f) {
  using detail::one_based;
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ConstZero>) {
          return "xi(0)";
        } else if constexpr (std::is_same_v<T, Const>) {
          return "xi" + bn_label(v.value);
        } else if constexpr (std::is_same_v<T, Singleton>) {
          return "s(" + one_based(v.k) + "," + one_based(v.l) + "->" + one_based(v.p) + ","
                 + one_based(v.q) + ")";
        } else if constexpr (std::is_same_v<T, NSupport>) {
          std::string s = "ns(" + one_based(v.p) + "," + one_based(v.q) + ";[";
          for (int i = 0; i < v.sigma.degree(); ++i) {
            if (i) s += ",";
            s += one_based(v.sigma(i));
          }
          return s + "])";
        } else {
          std::string s = "raw[";
          for (std::size_t i = 0; i < v.table.size(); ++i) {
            if (i) s += ",";
            s += bn_label(v.table[i]);
          }
          return s + "]";
        }
      },
      f);
}

struct AffineMapHash {
  std::size_t operator()(const AffineMap& f) const noexcept {
    std::size_t h = f.index() * 0x9e3779b97f4a7c15ULL;
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Const>) {
            mix(v.value.index(1 << 10));
          } else if constexpr (std::is_same_v<T, Singleton>) {
            mix(static_cast<std::size_t>((((v.k << 8) | v.l) << 8 | v.p) << 8 | v.q));
          } else if constexpr (std::is_same_v<T, NSupport>) {
            mix(static_cast<std::size_t>(v.p << 8 | v.q));
            for (int x : v.sigma.images()) mix(static_cast<std::size_t>(x));
          } else if constexpr (std::is_same_v<T, Raw>) {
            for (auto x : v.table) mix(x.index(1 << 10));
          }
        },
        f);
    return h;
  }
};

}  // namespace bnrank
