#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace cegaraba {

struct SentenceTag {};
struct AssumptionTag {};

/// Dense set of indices over a fixed universe [0, universe). The tag keeps
/// sentence-indexed and assumption-indexed sets from being mixed up.
template <class Tag>
class IndexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  IndexSet() = default;
  explicit IndexSet(std::size_t universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

  static IndexSet full(std::size_t universe) {
    IndexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool test(std::size_t i) const {
    assert(i < universe_);
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  bool contains(std::size_t i) const { return i < universe_ && test(i); }
  void insert(std::size_t i) {
    assert(i < universe_);
    words_[i / kWordBits] |= Word{1} << (i % kWordBits);
  }
  void erase(std::size_t i) {
    assert(i < universe_);
    words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
  }
  void assign(std::size_t i, bool v) { v ? insert(i) : erase(i); }
  void clear() { std::fill(words_.begin(), words_.end(), Word{0}); }

  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }
  std::size_t size() const {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  IndexSet& operator|=(const IndexSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  IndexSet& operator&=(const IndexSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  /// Removes every member of `o`.
  IndexSet& operator-=(const IndexSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

  IndexSet complement() const {
    IndexSet c(universe_);
    for (std::size_t k = 0; k < words_.size(); ++k) c.words_[k] = ~words_[k];
    c.trim();
    return c;
  }

  bool intersects(const IndexSet& o) const {
    assert(universe_ == o.universe_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }
  bool is_subset_of(const IndexSet& o) const {
    assert(universe_ == o.universe_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      Word w = words_[k];
      while (w) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(w));
        f(k * kWordBits + bit);
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  const std::vector<Word>& words() const { return words_; }

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  std::size_t hash() const {
    std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
    for (Word w : words_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
    return h;
  }

 private:
  void trim() {
    const std::size_t rem = universe_ % kWordBits;
    if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

using SentenceSet = IndexSet<SentenceTag>;
using AssumptionSet = IndexSet<AssumptionTag>;

template <class Tag>
struct IndexSetHash {
  std::size_t operator()(const IndexSet<Tag>& s) const { return s.hash(); }
};

/// Shortlex order on member lists: smaller sets first, then lexicographic on
/// ascending members. Used for canonical output of extension families.
template <class Tag>
bool shortlex_less(const IndexSet<Tag>& a, const IndexSet<Tag>& b) {
  const auto sa = a.size();
  const auto sb = b.size();
  if (sa != sb) return sa < sb;
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

/// Order in which the candidate engine visits complete assignments: index 0
/// is the most significant position and "out" precedes "in".
template <class Tag>
bool search_order_less(const IndexSet<Tag>& a, const IndexSet<Tag>& b) {
  assert(a.universe() == b.universe());
  for (std::size_t i = 0; i < a.universe(); ++i) {
    const bool x = a.test(i);
    const bool y = b.test(i);
    if (x != y) return !x;
  }
  return false;
}

}  // namespace cegaraba
