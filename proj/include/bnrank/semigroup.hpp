#pragma once

// Finite semigroups given by a full Cayley table over indices [0, m), and
// the subset predicates the rank computations are built from.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bnrank/errors.hpp"
#include "bnrank/index_set.hpp"

namespace bnrank {

class FiniteSemigroup {
 public:
  using Index = std::uint32_t;

  // Largest table checked exhaustively for associativity; bigger tables are
  // sampled with kAssociativitySamples random triples.
  static constexpr std::size_t kExhaustiveAssociativity = 256;
  static constexpr std::size_t kAssociativitySamples = 1'000'000;

  FiniteSemigroup(std::vector<std::string> labels, std::vector<Index> table,
                  std::optional<int> n = std::nullopt)
      : labels_(std::move(labels)), table_(std::move(table)), n_(n) {
    const std::size_t m = labels_.size();
    if (m == 0) throw ValidationError("a semigroup needs at least one element");
    if (table_.size() != m * m) throw ValidationError("table is not |labels| x |labels|");
    for (auto e : table_) {
      if (e >= m) throw ValidationError("table entry " + std::to_string(e) + " out of range");
    }
    if (auto bad = find_nonassociative()) {
      auto [a, b, c] = *bad;
      throw ValidationError("not associative at (" + labels_[a] + " + " + labels_[b] + ") + "
                            + labels_[c]);
    }
  }

  std::size_t size() const noexcept { return labels_.size(); }
  std::optional<int> n() const noexcept { return n_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<Index>& table() const noexcept { return table_; }

  std::size_t sum(std::size_t a, std::size_t b) const noexcept {
    return table_[a * labels_.size() + b];
  }

  std::optional<std::size_t> index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
  }

  std::vector<std::string> labels_of(const IndexSet& s) const {
    std::vector<std::string> out;
    for (auto i : s) out.push_back(labels_[i]);
    return out;
  }

  bool operator==(const FiniteSemigroup&) const = default;

 private:
  std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> find_nonassociative() const {
    const std::size_t m = size();
    auto bad = [&](std::size_t a, std::size_t b, std::size_t c) {
      return sum(sum(a, b), c) != sum(a, sum(b, c));
    };
    if (m <= kExhaustiveAssociativity) {
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
          for (std::size_t c = 0; c < m; ++c)
            if (bad(a, b, c)) return std::tuple{a, b, c};
      return std::nullopt;
    }
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    for (std::size_t s = 0; s < kAssociativitySamples; ++s) {
      std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
      if (bad(a, b, c)) return std::tuple{a, b, c};
    }
    return std::nullopt;
  }

  std::vector<std::string> labels_;
  std::vector<Index> table_;
  std::optional<int> n_;
};

// Builds the Cayley table of `elements` under `add`. Throws ClosureViolation
// naming the first pair whose sum is not in the list.
template <typename T, typename Add, typename Label, typename Hash = std::hash<T>>
FiniteSemigroup from_elements(const std::vector<T>& elements, Add add, Label label,
                              std::optional<int> n = std::nullopt, Hash hash = Hash{}) {
  if (elements.empty()) throw InvalidParameter("element list is empty");
  std::unordered_map<T, FiniteSemigroup::Index, Hash> index(elements.size() * 2, hash);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!index.emplace(elements[i], static_cast<FiniteSemigroup::Index>(i)).second) {
      throw InvalidParameter("duplicate element " + label(elements[i]));
    }
  }
  const std::size_t m = elements.size();
  std::vector<FiniteSemigroup::Index> table(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      auto it = index.find(add(elements[a], elements[b]));
      if (it == index.end()) {
        throw ClosureViolation(a, b, "sum " + label(elements[a]) + " + " + label(elements[b])
                                         + " is not in the element list");
      }
      table[a * m + b] = it->second;
    }
  }
  std::vector<std::string> labels;
  labels.reserve(m);
  for (const auto& e : elements) labels.push_back(label(e));
  return FiniteSemigroup(std::move(labels), std::move(table), n);
}

namespace detail {

// Semi-naive worklist: `members[0, closed_prefix)` is already closed; every
// later member is summed with all earlier ones (both orders) once.
// Stops early once `stop_at` is reached.
inline bool close_worklist(const FiniteSemigroup& s, IndexSet& set,
                           std::vector<std::size_t>& members, std::size_t closed_prefix,
                           std::optional<std::size_t> stop_at = std::nullopt) {
  for (std::size_t p = closed_prefix; p < members.size(); ++p) {
    const std::size_t a = members[p];
    for (std::size_t q = 0; q <= p; ++q) {
      const std::size_t b = members[q];
      for (std::size_t c : {s.sum(a, b), s.sum(b, a)}) {
        if (!set.contains(c)) {
          set.insert(c);
          members.push_back(c);
          if (stop_at && c == *stop_at) return true;
        }
      }
    }
  }
  return stop_at && set.contains(*stop_at);
}

}  // namespace detail

// <U>: the least superset of U closed under +. <{}> is {}.
inline IndexSet closure(const FiniteSemigroup& s, const IndexSet& u) {
  IndexSet out = u;
  auto members = u.to_vector();
  detail::close_worklist(s, out, members, 0);
  return out;
}

// Whether `target` lies in <U>, stopping as soon as it appears.
inline bool closure_contains(const FiniteSemigroup& s, const IndexSet& u, std::size_t target) {
  if (u.contains(target)) return true;
  IndexSet out = u;
  auto members = u.to_vector();
  return detail::close_worklist(s, out, members, 0, target);
}

inline bool is_generating(const FiniteSemigroup& s, const IndexSet& u) {
  return closure(s, u).size() == s.size();
}

// No a in U lies in <U \ {a}>. Singletons are independent since <{}> = {}.
inline bool is_independent(const FiniteSemigroup& s, const IndexSet& u) {
  if (u.empty()) throw InvalidParameter("independence is defined for nonempty sets");
  for (auto a : u) {
    IndexSet rest = u;
    rest.erase(a);
    if (closure_contains(s, rest, a)) return false;
  }
  return true;
}

enum class Side { Right, Left };

// {a} ∪ a+S (Right) or {a} ∪ S+a (Left).
inline IndexSet principal_ideal(const FiniteSemigroup& s, std::size_t a, Side side) {
  IndexSet out(s.size());
  out.insert(a);
  for (std::size_t x = 0; x < s.size(); ++x) out.insert(side == Side::Right ? s.sum(a, x) : s.sum(x, a));
  return out;
}

struct Partition {
  std::vector<std::vector<std::size_t>> classes;  // each sorted, ordered by first member
  std::vector<std::size_t> class_of;              // element -> position in classes
};

// Green's R (or L) relation: equal principal right (left) ideals.
inline Partition greens_classes(const FiniteSemigroup& s, Side side) {
  const std::size_t m = s.size();
  std::map<std::vector<IndexSet::Word>, std::size_t> seen;
  Partition out;
  out.class_of.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    auto ideal = principal_ideal(s, a, side);
    auto [it, fresh] = seen.emplace(ideal.words(), out.classes.size());
    if (fresh) out.classes.emplace_back();
    out.classes[it->second].push_back(a);
    out.class_of[a] = it->second;
  }
  return out;
}

// Classes of `p` that no element outside the class lies strictly above in the
// R (or L) preorder. Any generating set meets each of them: the leading
// (trailing) summand of a sum equal to x lies R-above (L-above) x.
inline std::vector<std::size_t> maximal_classes(const FiniteSemigroup& s, const Partition& p,
                                                Side side) {
  std::vector<bool> maximal(p.classes.size(), true);
  for (std::size_t b = 0; b < s.size(); ++b) {
    for (std::size_t x = 0; x < s.size(); ++x) {
      const std::size_t c = side == Side::Right ? s.sum(b, x) : s.sum(x, b);
      if (p.class_of[c] != p.class_of[b]) maximal[p.class_of[c]] = false;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    if (maximal[i]) out.push_back(i);
  }
  return out;
}

inline bool is_band(const FiniteSemigroup& s) {
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (s.sum(a, a) != a) return false;
  }
  return true;
}

// Elements a with no b, c (both != a) such that b + c = a. In a one-element
// semigroup the element is vacuously indecomposable.
inline IndexSet indecomposables(const FiniteSemigroup& s) {
  const std::size_t m = s.size();
  IndexSet decomposable(m);
  for (std::size_t b = 0; b < m; ++b) {
    for (std::size_t c = 0; c < m; ++c) {
      const std::size_t a = s.sum(b, c);
      if (a != b && a != c) decomposable.insert(a);
    }
  }
  return IndexSet::full(m) - decomposable;
}

// a + b in U implies a in U or b in U, for all a, b.
inline bool is_prime_subset(const FiniteSemigroup& s, const IndexSet& u) {
  if (u.empty()) throw InvalidParameter("prime subsets are nonempty");
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (u.contains(a)) continue;
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (!u.contains(b) && u.contains(s.sum(a, b))) return false;
    }
  }
  return true;
}

// The subsemigroup on a closed subset, with elements renumbered in index order.
inline FiniteSemigroup subsemigroup(const FiniteSemigroup& s, const IndexSet& u) {
  if (u.empty()) throw InvalidParameter("subsemigroup of the empty set");
  auto members = u.to_vector();
  std::vector<FiniteSemigroup::Index> renumber(s.size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    renumber[members[i]] = static_cast<FiniteSemigroup::Index>(i);
  }
  std::vector<FiniteSemigroup::Index> table;
  table.reserve(members.size() * members.size());
  for (auto a : members) {
    for (auto b : members) {
      const std::size_t c = s.sum(a, b);
      if (!u.contains(c)) throw InvalidParameter("subset is not closed under +");
      table.push_back(renumber[c]);
    }
  }
  std::vector<std::string> labels;
  for (auto a : members) labels.push_back(s.label(a));
  return FiniteSemigroup(std::move(labels), std::move(table), s.n());
}

}  // namespace bnrank
