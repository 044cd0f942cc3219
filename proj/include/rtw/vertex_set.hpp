#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace rtw {

using Vertex = std::uint32_t;

/// Fixed-universe bitset over vertex ids 0..universe-1.
///
/// All set algebra requires both operands to share a universe; this is
/// asserted by callers rather than checked here since it sits on every
/// hot loop of the certifiers.
class VertexSet {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
      : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }
  static VertexSet from_range(std::size_t universe, Vertex first, Vertex last) {
    VertexSet s(universe);
    for (Vertex v = first; v < last; ++v) s.insert(v);
    return s;
  }
  template <class Range>
  static VertexSet from_list(std::size_t universe, const Range& members) {
    VertexSet s(universe);
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(Vertex v) const {
    return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  void insert(Vertex v) { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
  void erase(Vertex v) { words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }

  std::size_t size() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (Word w : words_)
      if (w) return false;
    return true;
  }

  /// |*this ∩ other| without materializing the intersection.
  std::size_t intersection_size(const VertexSet& other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }
  /// |*this ∩ a ∩ b|.
  std::size_t intersection_size(const VertexSet& a, const VertexSet& b) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & a.words_[i] & b.words_[i]));
    return c;
  }
  bool intersects(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  VertexSet complement() const { return full(universe_) - *this; }

  /// Drop every member below `v` (keeps v itself).
  void erase_below(Vertex v) {
    const std::size_t wi = v / kWordBits;
    for (std::size_t i = 0; i < wi && i < words_.size(); ++i) words_[i] = 0;
    if (wi < words_.size()) words_[wi] &= ~Word{0} << (v % kWordBits);
  }

  /// Smallest member >= from, or universe() when none.
  Vertex next(Vertex from) const {
    std::size_t wi = from / kWordBits;
    if (wi >= words_.size()) return static_cast<Vertex>(universe_);
    Word w = words_[wi] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w) return static_cast<Vertex>(wi * kWordBits + std::countr_zero(w));
      if (++wi >= words_.size()) return static_cast<Vertex>(universe_);
      w = words_[wi];
    }
  }
  Vertex first() const { return next(0); }

  /// Smallest member of *this ∩ other that is >= from, or universe().
  Vertex first_common(const VertexSet& other, Vertex from) const {
    std::size_t wi = from / kWordBits;
    if (wi >= words_.size()) return static_cast<Vertex>(universe_);
    Word w = words_[wi] & other.words_[wi] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w) return static_cast<Vertex>(wi * kWordBits + std::countr_zero(w));
      if (++wi >= words_.size()) return static_cast<Vertex>(universe_);
      w = words_[wi] & other.words_[wi];
    }
  }

  /// *this = a ∩ b, reusing storage.
  void assign_intersection(const VertexSet& a, const VertexSet& b) {
    universe_ = a.universe_;
    words_.resize(a.words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = a.words_[i] & b.words_[i];
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        f(static_cast<Vertex>(wi * kWordBits + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  const std::vector<Word>& words() const { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
  void trim() {
    if (universe_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

/// Disjoint cover of the vertex range by two sides.
struct Bipartition {
  VertexSet left;
  VertexSet right;

  /// Right side is the complement of `left`.
  static Bipartition from_left(const VertexSet& left) { return {left, left.complement()}; }
};

}  // namespace rtw
