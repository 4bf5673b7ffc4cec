#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

#include "bnrank/errors.hpp"

namespace bnrank {

// Subset of {0, ..., universe-1} stored as a bit vector.
class IndexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kBits = 64;

  IndexSet() = default;
  explicit IndexSet(std::size_t universe)
      : universe_(universe), words_((universe + kBits - 1) / kBits, 0) {}

  IndexSet(std::size_t universe, std::initializer_list<std::size_t> members)
      : IndexSet(universe) {
    for (auto i : members) insert(i);
  }

  template <typename Range>
  static IndexSet from_range(std::size_t universe, const Range& members) {
    IndexSet s(universe);
    for (auto i : members) s.insert(static_cast<std::size_t>(i));
    return s;
  }

  static IndexSet full(std::size_t universe) {
    IndexSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(i);
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  void insert(std::size_t i) {
    check(i);
    words_[i / kBits] |= Word{1} << (i % kBits);
  }
  void erase(std::size_t i) {
    check(i);
    words_[i / kBits] &= ~(Word{1} << (i % kBits));
  }
  bool contains(std::size_t i) const noexcept {
    return i < universe_ && ((words_[i / kBits] >> (i % kBits)) & 1U);
  }

  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }

  // Smallest member >= from, or universe() if none.
  std::size_t next(std::size_t from) const noexcept {
    if (from >= universe_) return universe_;
    std::size_t wi = from / kBits;
    Word w = words_[wi] & (~Word{0} << (from % kBits));
    for (;;) {
      if (w) {
        std::size_t i = wi * kBits + static_cast<std::size_t>(std::countr_zero(w));
        return i < universe_ ? i : universe_;
      }
      if (++wi == words_.size()) return universe_;
      w = words_[wi];
    }
  }

  IndexSet& operator|=(const IndexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  IndexSet& operator&=(const IndexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  IndexSet& operator-=(const IndexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

  bool is_subset_of(const IndexSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

  bool operator==(const IndexSet&) const = default;

  // Lexicographic comparison of the sorted member lists.
  bool lex_less(const IndexSet& o) const {
    std::size_t a = next(0), b = o.next(0);
    while (a < universe_ && b < o.universe_) {
      if (a != b) return a < b;
      a = next(a + 1);
      b = o.next(b + 1);
    }
    return a == universe_ && b < o.universe_;
  }

  const std::vector<Word>& words() const noexcept { return words_; }

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::size_t*;
    using reference = std::size_t;

    const_iterator() = default;
    const_iterator(const IndexSet* s, std::size_t pos) : set_(s), pos_(pos) {}
    std::size_t operator*() const noexcept { return pos_; }
    const_iterator& operator++() {
      pos_ = set_->next(pos_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const const_iterator& o) const noexcept { return pos_ == o.pos_; }

   private:
    const IndexSet* set_ = nullptr;
    std::size_t pos_ = 0;
  };

  const_iterator begin() const { return {this, next(0)}; }
  const_iterator end() const { return {this, universe_}; }

  std::vector<std::size_t> to_vector() const { return {begin(), end()}; }

 private:
  void check(std::size_t i) const {
    if (i >= universe_) throw InvalidParameter("index outside the set's universe");
  }
  void same_universe(const IndexSet& o) const {
    if (o.universe_ != universe_) throw InvalidParameter("index sets over different universes");
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace bnrank
