#pragma once

// Closure kernels used by the searches. Both expose the same set interface so
// the search drivers are written once:
//
//   Kernel64  - semigroups with at most 64 elements. Sets are single words;
//               a + X and X + a are read from per-byte lookup tables.
//   KernelDyn - any size. Sets are IndexSets; closures use the worklist.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "bnrank/errors.hpp"
#include "bnrank/index_set.hpp"
#include "bnrank/semigroup.hpp"

namespace bnrank {

class Kernel64 {
 public:
  using Set = std::uint64_t;
  static constexpr std::size_t kMaxSize = 64;

  explicit Kernel64(const FiniteSemigroup& s) : m_(s.size()), chunks_((s.size() + 7) / 8) {
    if (m_ > kMaxSize) throw InvalidParameter("Kernel64 needs at most 64 elements");
    left_.assign(m_ * chunks_ * 256, 0);
    right_.assign(m_ * chunks_ * 256, 0);
    for (std::size_t a = 0; a < m_; ++a) {
      for (std::size_t c = 0; c < chunks_; ++c) {
        for (std::size_t byte = 0; byte < 256; ++byte) {
          Set l = 0, r = 0;
          for (std::size_t bit = 0; bit < 8; ++bit) {
            const std::size_t b = c * 8 + bit;
            if (!((byte >> bit) & 1U) || b >= m_) continue;
            l |= Set{1} << s.sum(a, b);
            r |= Set{1} << s.sum(b, a);
          }
          left_[slot(a, c, byte)] = l;
          right_[slot(a, c, byte)] = r;
        }
      }
    }
  }

  std::size_t universe() const noexcept { return m_; }
  Set empty() const noexcept { return 0; }
  Set full() const noexcept { return m_ == 64 ? ~Set{0} : (Set{1} << m_) - 1; }

  static void insert(Set& s, std::size_t i) noexcept { s |= Set{1} << i; }
  static void erase(Set& s, std::size_t i) noexcept { s &= ~(Set{1} << i); }
  static bool has(Set s, std::size_t i) noexcept { return (s >> i) & 1U; }
  static std::size_t count(Set s) noexcept { return static_cast<std::size_t>(std::popcount(s)); }
  static bool is_empty(Set s) noexcept { return s == 0; }
  static Set unite(Set a, Set b) noexcept { return a | b; }
  static Set intersect(Set a, Set b) noexcept { return a & b; }
  static Set minus(Set a, Set b) noexcept { return a & ~b; }
  static bool subset(Set a, Set b) noexcept { return (a & ~b) == 0; }

  template <typename Fn>
  static void for_each(Set s, Fn fn) {
    while (s) {
      fn(static_cast<std::size_t>(std::countr_zero(s)));
      s &= s - 1;
    }
  }

  IndexSet to_index_set(Set s) const {
    IndexSet out(m_);
    for_each(s, [&](std::size_t i) { out.insert(i); });
    return out;
  }
  Set from_index_set(const IndexSet& s) const {
    Set out = 0;
    for (auto i : s) insert(out, i);
    return out;
  }

  // {a + x : x in X}
  Set sum_left(std::size_t a, Set x) const noexcept {
    Set out = 0;
    for (std::size_t c = 0; c < chunks_; ++c) out |= left_[slot(a, c, (x >> (8 * c)) & 0xff)];
    return out;
  }
  // {x + a : x in X}
  Set sum_right(std::size_t a, Set x) const noexcept {
    Set out = 0;
    for (std::size_t c = 0; c < chunks_; ++c) out |= right_[slot(a, c, (x >> (8 * c)) & 0xff)];
    return out;
  }

  Set closure(Set u) const noexcept { return grow(u, u, m_); }

  // <C ∪ {y}> for a closed C.
  Set extend(Set closed, std::size_t y) const noexcept {
    return grow(closed | (Set{1} << y), Set{1} << y, m_);
  }

  // Whether target lies in <C ∪ {y}> for a closed C; stops early.
  bool extend_reaches(Set closed, std::size_t y, std::size_t target) const noexcept {
    return has(grow(closed | (Set{1} << y), Set{1} << y, target), target);
  }

 private:
  std::size_t slot(std::size_t a, std::size_t c, std::size_t byte) const noexcept {
    return (a * chunks_ + c) * 256 + byte;
  }

  // Semi-naive fixpoint from x, where only `frontier` has not yet been
  // summed with the rest. Returns early once `stop` (if < m) appears.
  Set grow(Set x, Set frontier, std::size_t stop) const noexcept {
    const Set stop_bit = stop < m_ ? Set{1} << stop : 0;
    while (frontier) {
      if (x & stop_bit) return x;
      Set delta = 0;
      for_each(frontier, [&](std::size_t a) { delta |= sum_left(a, x) | sum_right(a, x); });
      delta &= ~x;
      x |= delta;
      frontier = delta;
    }
    return x;
  }

  std::size_t m_;
  std::size_t chunks_;
  std::vector<Set> left_;
  std::vector<Set> right_;
};

class KernelDyn {
 public:
  using Set = IndexSet;

  explicit KernelDyn(const FiniteSemigroup& s) : s_(&s) {}

  std::size_t universe() const noexcept { return s_->size(); }
  Set empty() const { return IndexSet(s_->size()); }
  Set full() const { return IndexSet::full(s_->size()); }

  static void insert(Set& s, std::size_t i) { s.insert(i); }
  static void erase(Set& s, std::size_t i) { s.erase(i); }
  static bool has(const Set& s, std::size_t i) noexcept { return s.contains(i); }
  static std::size_t count(const Set& s) noexcept { return s.size(); }
  static bool is_empty(const Set& s) noexcept { return s.empty(); }
  static Set unite(const Set& a, const Set& b) { return a | b; }
  static Set intersect(const Set& a, const Set& b) { return a & b; }
  static Set minus(const Set& a, const Set& b) { return a - b; }
  static bool subset(const Set& a, const Set& b) { return a.is_subset_of(b); }

  template <typename Fn>
  static void for_each(const Set& s, Fn fn) {
    for (auto i : s) fn(i);
  }

  IndexSet to_index_set(const Set& s) const { return s; }
  Set from_index_set(const IndexSet& s) const { return s; }

  Set closure(const Set& u) const { return bnrank::closure(*s_, u); }

  Set extend(const Set& closed, std::size_t y) const {
    if (closed.contains(y)) return closed;
    Set out = closed;
    auto members = closed.to_vector();
    const std::size_t prefix = members.size();
    out.insert(y);
    members.push_back(y);
    detail::close_worklist(*s_, out, members, prefix);
    return out;
  }

  bool extend_reaches(const Set& closed, std::size_t y, std::size_t target) const {
    if (closed.contains(target) || y == target) return true;
    if (closed.contains(y)) return false;
    Set out = closed;
    auto members = closed.to_vector();
    const std::size_t prefix = members.size();
    out.insert(y);
    members.push_back(y);
    return detail::close_worklist(*s_, out, members, prefix, target);
  }

 private:
  const FiniteSemigroup* s_;
};

}  // namespace bnrank
