#pragma once

// Named subsets of A+(B_n) that realise or bound its ranks, as index sets
// over enumerate_a_plus(n).

#include <cstddef>
#include <string>
#include <vector>

#include "bnrank/a_plus.hpp"
#include "bnrank/affine_map.hpp"
#include "bnrank/brandt.hpp"
#include "bnrank/errors.hpp"
#include "bnrank/index_set.hpp"
#include "bnrank/permutation.hpp"

namespace bnrank {

enum class WitnessKind {
  S,             // xi(i,i+1) for i < n, and xi(n,1): generates the constants
  T,             // phi_sigma + h for sigma in S_n, h in S
  SUnionT,       // minimum generating set
  SprimeUnionT,  // maximum independent generating set, with S' = {xi(1,i)} ∪ {xi(j,1)}, i,j >= 2
  I,             // all n-support maps and the xi(i,i): independent
  P2,            // n = 2 only: Q' for Q = {(1,1),(1,2),(2,2)}, plus xi(1,1), xi(2,2)
  V,             // xi(n,k) for k < n: smallest prime subset
  Qprime,        // singleton maps (k,l) -> alpha for alpha in an independent Q ⊆ B_n
};

inline std::string witness_name(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::S: return "S";
    case WitnessKind::T: return "T";
    case WitnessKind::SUnionT: return "S+T";
    case WitnessKind::SprimeUnionT: return "S'+T";
    case WitnessKind::I: return "I";
    case WitnessKind::P2: return "P";
    case WitnessKind::V: return "V";
    case WitnessKind::Qprime: return "Q'";
  }
  return "?";
}

namespace detail {

inline bool independent_in_bn(int n, const std::vector<BnElement>& q) {
  if (q.empty()) return false;
  const auto b = brandt_semigroup(n);
  IndexSet u(b.size());
  for (auto x : q) u.insert(x.index(n));
  return u.size() == q.size() && is_independent(b, u);
}

inline IndexSet s_set(int n) {
  IndexSet out(a_plus_size_formula(n));
  for (int i = 0; i + 1 < n; ++i) out.insert(const_index(n, i, i + 1));
  out.insert(const_index(n, n - 1, 0));
  return out;
}

// Sums phi_sigma + h are formed pointwise and then recognised, so T does not
// depend on the closed form for such sums.
inline IndexSet t_set(int n) {
  const std::size_t m = a_plus_size_formula(n);
  IndexSet out(m);
  const auto s = s_set(n);
  const auto elems = enumerate_a_plus(n);
  for (const auto& sigma : all_permutations(n)) {
    const auto phi = std::get<Raw>(phi_from_perm(n, sigma)).table;
    for (auto h : s) {
      auto sum = canonicalize(n, add_tables(phi, to_table(n, elems[h])));
      if (!sum) throw TheoremMismatch("phi_sigma + h is not an element of A+(B_n)");
      out.insert(a_plus_index(n, *sum));
    }
  }
  return out;
}

inline IndexSet singleton_lift(int n, const std::vector<BnElement>& q) {
  IndexSet out(a_plus_size_formula(n));
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      for (auto a : q) out.insert(a_plus_index(n, Singleton{k, l, a.row(), a.col()}));
  return out;
}

}  // namespace detail

// `q` is used only by Qprime and must be an independent subset of B_n \ {0}.
inline IndexSet construct_witness(int n, WitnessKind kind, const std::vector<BnElement>& q = {}) {
  require_valid_n(n);
  if (n < 2) throw InvalidParameter("witness sets are defined for n >= 2");
  const std::size_t m = a_plus_size_formula(n);
  switch (kind) {
    case WitnessKind::S:
      return detail::s_set(n);
    case WitnessKind::T:
      return detail::t_set(n);
    case WitnessKind::SUnionT:
      return detail::s_set(n) | detail::t_set(n);
    case WitnessKind::SprimeUnionT: {
      IndexSet out = detail::t_set(n);
      for (int i = 1; i < n; ++i) {
        out.insert(const_index(n, 0, i));
        out.insert(const_index(n, i, 0));
      }
      return out;
    }
    case WitnessKind::I: {
      IndexSet out = support_strata(n).nsupport;
      for (int i = 0; i < n; ++i) out.insert(const_index(n, i, i));
      return out;
    }
    case WitnessKind::P2: {
      if (n != 2) throw InvalidParameter("P is defined for n = 2 only");
      IndexSet out = detail::singleton_lift(
          2, {BnElement::pair(0, 0), BnElement::pair(0, 1), BnElement::pair(1, 1)});
      out.insert(const_index(2, 0, 0));
      out.insert(const_index(2, 1, 1));
      return out;
    }
    case WitnessKind::V: {
      IndexSet out(m);
      for (int k = 0; k + 1 < n; ++k) out.insert(const_index(n, n - 1, k));
      return out;
    }
    case WitnessKind::Qprime: {
      for (auto a : q) {
        require_valid(n, a);
        if (a.is_zero()) throw InvalidParameter("Q must not contain the zero of B_n");
      }
      if (!detail::independent_in_bn(n, q)) throw InvalidParameter("Q is not an independent subset of B_n");
      return detail::singleton_lift(n, q);
    }
  }
  throw InvalidParameter("unknown witness kind");
}

}  // namespace bnrank
