#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace kbg {

/// Fixed-universe set of vertex indices 0..universe-1.
/// Universes of at most 256 vertices live inline (copies are allocation-free,
/// which the enumeration hot path depends on); larger universes spill to a
/// heap block, so all set operations stay word-parallel either way.
class VertexSet {
 public:
  static constexpr int kInlineWords = 4;

  VertexSet() = default;
  explicit VertexSet(int universe) : universe_(universe) {
    if (word_count() > kInlineWords) multi_.assign(static_cast<size_t>(word_count()), 0);
  }

  int universe() const { return universe_; }

  bool test(int v) const {
    assert(v >= 0 && v < universe_);
    return (data()[v >> 6] >> (v & 63)) & 1u;
  }
  void set(int v) {
    assert(v >= 0 && v < universe_);
    data()[v >> 6] |= uint64_t{1} << (v & 63);
  }
  void reset(int v) {
    assert(v >= 0 && v < universe_);
    data()[v >> 6] &= ~(uint64_t{1} << (v & 63));
  }
  void clear() {
    uint64_t* w = data();
    for (int i = 0; i < word_count(); ++i) w[i] = 0;
  }
  void fill() {
    uint64_t* w = data();
    for (int i = 0; i < word_count(); ++i) w[i] = ~uint64_t{0};
    trim();
  }

  bool empty() const {
    const uint64_t* w = data();
    for (int i = 0; i < word_count(); ++i)
      if (w[i]) return false;
    return true;
  }
  int count() const {
    int c = 0;
    const uint64_t* w = data();
    for (int i = 0; i < word_count(); ++i) c += std::popcount(w[i]);
    return c;
  }

  bool intersects(const VertexSet& o) const {
    assert(universe_ == o.universe_);
    const uint64_t* a = data();
    const uint64_t* b = o.data();
    for (int i = 0; i < word_count(); ++i)
      if (a[i] & b[i]) return true;
    return false;
  }
  int intersection_count(const VertexSet& o) const {
    assert(universe_ == o.universe_);
    const uint64_t* a = data();
    const uint64_t* b = o.data();
    int c = 0;
    for (int i = 0; i < word_count(); ++i) c += std::popcount(a[i] & b[i]);
    return c;
  }
  bool is_subset_of(const VertexSet& o) const {
    assert(universe_ == o.universe_);
    const uint64_t* a = data();
    const uint64_t* b = o.data();
    for (int i = 0; i < word_count(); ++i)
      if (a[i] & ~b[i]) return false;
    return true;
  }

  VertexSet& operator&=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    uint64_t* a = data();
    const uint64_t* b = o.data();
    for (int i = 0; i < word_count(); ++i) a[i] &= b[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    uint64_t* a = data();
    const uint64_t* b = o.data();
    for (int i = 0; i < word_count(); ++i) a[i] |= b[i];
    return *this;
  }
  /// *this &= ~o
  VertexSet& subtract(const VertexSet& o) {
    assert(universe_ == o.universe_);
    uint64_t* a = data();
    const uint64_t* b = o.data();
    for (int i = 0; i < word_count(); ++i) a[i] &= ~b[i];
    return *this;
  }

  /// Drop every member >= v.
  void keep_below(int v) {
    assert(v >= 0 && v <= universe_);
    uint64_t* w = data();
    for (int i = v >> 6; i < word_count(); ++i) {
      if (i == (v >> 6) && (v & 63))
        w[i] &= (~uint64_t{0}) >> (64 - (v & 63));
      else
        w[i] = 0;
    }
  }
  /// Drop every member <= v.
  void keep_above(int v) {
    assert(v >= 0 && v < universe_);
    uint64_t* w = data();
    for (int i = 0; i < v >> 6; ++i) w[i] = 0;
    uint64_t low_mask = (v & 63) == 63 ? ~uint64_t{0} : ((uint64_t{1} << ((v & 63) + 1)) - 1);
    w[v >> 6] &= ~low_mask;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

  /// Lowest member, or -1 when empty.
  int first() const {
    const uint64_t* w = data();
    for (int i = 0; i < word_count(); ++i)
      if (w[i]) return (i << 6) + std::countr_zero(w[i]);
    return -1;
  }
  /// Lowest member strictly greater than v, or -1.
  int next(int v) const {
    int i = (v + 1) >> 6;
    if (i >= word_count()) return -1;
    const uint64_t* w = data();
    uint64_t cur = w[i] & (~uint64_t{0} << ((v + 1) & 63));
    while (true) {
      if (cur) return (i << 6) + std::countr_zero(cur);
      if (++i >= word_count()) return -1;
      cur = w[i];
    }
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

  uint64_t hash() const {
    uint64_t h = 1469598103934665603ull;
    const uint64_t* w = data();
    for (int i = 0; i < word_count(); ++i) {
      h ^= w[i];
      h *= 1099511628211ull;
    }
    return h;
  }

  bool operator==(const VertexSet& o) const {
    if (universe_ != o.universe_) return false;
    const uint64_t* a = data();
    const uint64_t* b = o.data();
    for (int i = 0; i < word_count(); ++i)
      if (a[i] != b[i]) return false;
    return true;
  }

  /// Order on equal-universe sets: by size, then lexicographic on the sorted
  /// member sequence (the set owning the lowest element of the symmetric
  /// difference comes first).
  static bool size_lex_less(const VertexSet& a, const VertexSet& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return lex_less(a, b);
  }
  static bool lex_less(const VertexSet& a, const VertexSet& b) {
    assert(a.universe_ == b.universe_);
    const uint64_t* wa = a.data();
    const uint64_t* wb = b.data();
    for (int i = 0; i < a.word_count(); ++i) {
      uint64_t diff = wa[i] ^ wb[i];
      if (!diff) continue;
      uint64_t low = diff & (~diff + 1);
      if (wa[i] & low) return true;  // a owns the first differing element
      return a.is_subset_of(b);      // b owns it: a smaller only as proper prefix
    }
    return false;
  }

 private:
  int word_count() const { return (universe_ + 63) >> 6; }
  uint64_t* data() { return multi_.empty() ? inline_.data() : multi_.data(); }
  const uint64_t* data() const { return multi_.empty() ? inline_.data() : multi_.data(); }
  void trim() {
    if (universe_ & 63) data()[word_count() - 1] &= (~uint64_t{0}) >> (64 - (universe_ & 63));
  }

  int universe_ = 0;
  std::array<uint64_t, kInlineWords> inline_{};
  std::vector<uint64_t> multi_;  // all words, used only when universe > 256
};

}  // namespace kbg
