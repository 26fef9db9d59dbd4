#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace vpart {

using Vertex = std::uint32_t;

/// Subset of the vertex range 0..universe-1 of one graph, stored as a bitset.
///
/// Binary operations require both operands to share the same universe and
/// throw std::invalid_argument otherwise.
class VertexSet {
  using Word = std::uint64_t;
  static constexpr std::size_t kBits = 64;

 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* set, std::size_t pos) : set_(set), pos_(pos) {}

    Vertex operator*() const { return static_cast<Vertex>(pos_); }
    const_iterator& operator++() {
      pos_ = set_->next_from(pos_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

   private:
    const VertexSet* set_ = nullptr;
    std::size_t pos_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + kBits - 1) / kBits, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }
  template <class Range>
  static VertexSet from_range(std::size_t universe, const Range& members) {
    VertexSet s(universe);
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }
  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(Vertex v) const { return v < universe_ && ((words_[v / kBits] >> (v % kBits)) & 1U); }
  void insert(Vertex v) {
    check_member(v);
    words_[v / kBits] |= Word{1} << (v % kBits);
  }
  void erase(Vertex v) {
    check_member(v);
    words_[v / kBits] &= ~(Word{1} << (v % kBits));
  }
  VertexSet with(Vertex v) const {
    VertexSet s = *this;
    s.insert(v);
    return s;
  }
  VertexSet without(Vertex v) const {
    VertexSet s = *this;
    s.erase(v);
    return s;
  }

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

  /// Smallest member, if any.
  std::optional<Vertex> first() const {
    auto p = next_from(0);
    if (p >= universe_) return std::nullopt;
    return static_cast<Vertex>(p);
  }

  VertexSet& operator|=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet s(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    s.trim();
    return s;
  }

  bool is_subset_of(const VertexSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  std::size_t intersection_size(const VertexSet& o) const {
    check_same(o);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }

  const_iterator begin() const { return {this, next_from(0)}; }
  const_iterator end() const { return {this, universe_}; }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (Vertex v : *this) out.push_back(v);
    return out;
  }

  bool operator==(const VertexSet& o) const { return universe_ == o.universe_ && words_ == o.words_; }

  /// Lexicographic comparison of the ascending member sequences.
  friend bool lex_less(const VertexSet& a, const VertexSet& b) {
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib)
      if (*ia != *ib) return *ia < *ib;
    return ia == a.end() && ib != b.end();
  }

 private:
  std::size_t next_from(std::size_t pos) const {
    if (pos >= universe_) return universe_;
    std::size_t wi = pos / kBits;
    Word w = words_[wi] & (~Word{0} << (pos % kBits));
    while (true) {
      if (w) {
        std::size_t p = wi * kBits + static_cast<std::size_t>(std::countr_zero(w));
        return p < universe_ ? p : universe_;
      }
      if (++wi >= words_.size()) return universe_;
      w = words_[wi];
    }
  }
  void trim() {
    if (universe_ % kBits && !words_.empty()) words_.back() &= (Word{1} << (universe_ % kBits)) - 1;
  }
  void check_member(Vertex v) const {
    if (v >= universe_) throw std::invalid_argument("vertex outside the bound graph's range");
  }
  void check_same(const VertexSet& o) const {
    if (universe_ != o.universe_) throw std::invalid_argument("vertex sets bound to different graphs");
  }

  std::size_t universe_ = 0;
  boost::container::small_vector<Word, 2> words_;
};

}  // namespace vpart
