#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "fortlib/errors.hpp"

namespace fortlib {

// Bit-indexed subset of the vertices 0..n-1 of a fixed universe.
// Comparison operators order sets by their bitmask value (sum of 2^v),
// which is the tie-breaking order used for witnesses and canonical forms.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {
    assert(universe >= 0);
  }

  static VertexSet of(int universe, std::initializer_list<int> members) {
    VertexSet s(universe);
    for (int v : members) s.set(v);
    return s;
  }

  static VertexSet of(int universe, const std::vector<int>& members) {
    VertexSet s(universe);
    for (int v : members) s.set(v);
    return s;
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~uint64_t{0};
    s.trim();
    return s;
  }

  // Low 64 bits taken from `mask`; universe must be <= 64.
  static VertexSet from_mask(int universe, uint64_t mask) {
    assert(universe <= 64);
    VertexSet s(universe);
    if (!s.words_.empty()) s.words_[0] = mask;
    s.trim();
    return s;
  }

  int universe() const { return n_; }

  bool test(int v) const {
    assert(v >= 0 && v < n_);
    return (words_[v >> 6] >> (v & 63)) & 1;
  }

  void set(int v) {
    if (v < 0 || v >= n_) throw invalid_input("vertex index " + std::to_string(v) + " out of range");
    words_[v >> 6] |= uint64_t{1} << (v & 63);
  }

  void reset(int v) {
    assert(v >= 0 && v < n_);
    words_[v >> 6] &= ~(uint64_t{1} << (v & 63));
  }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  bool any() const { return !empty(); }

  // Smallest member, or -1 when empty.
  int first() const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

  // Smallest member strictly greater than v, or -1.
  int next(int v) const {
    int start = v + 1;
    if (start >= n_) return -1;
    size_t wi = static_cast<size_t>(start) >> 6;
    uint64_t w = words_[wi] & (~uint64_t{0} << (start & 63));
    while (true) {
      if (w) return static_cast<int>(wi * 64 + std::countr_zero(w));
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t w = words_[i];
      while (w) {
        fn(static_cast<int>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  VertexSet& operator|=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  VertexSet& operator-=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet s(n_);
    for (size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    s.trim();
    return s;
  }

  bool intersects(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  // |this AND o| without allocating.
  int intersection_count(const VertexSet& o) const {
    assert(n_ == o.n_);
    int c = 0;
    for (size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  bool is_subset_of(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  // Numeric bitmask order.
  bool operator<(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = words_.size(); i-- > 0;)
      if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
    return false;
  }
  bool operator>(const VertexSet& o) const { return o < *this; }
  bool operator<=(const VertexSet& o) const { return !(o < *this); }

  uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

  std::string to_string() const {
    std::string s = "{";
    bool first_member = true;
    for_each([&](int v) {
      if (!first_member) s += ",";
      s += std::to_string(v);
      first_member = false;
    });
    s += "}";
    return s;
  }

 private:
  void trim() {
    int tail = n_ & 63;
    if (tail && !words_.empty()) words_.back() &= (~uint64_t{0}) >> (64 - tail);
  }

  int n_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace fortlib
