#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "coverdeal/error.hpp"

namespace coverdeal {

/// Largest vertex label (and polynomial variable index) supported.
inline constexpr int kMaxVertices = 128;

/// Fixed-width set of 1-based vertex labels in 1..kMaxVertices.
///
/// Also used as the support of a squarefree monomial, so union and
/// intersection double as lcm and gcd.
class VertexSet {
public:
  constexpr VertexSet() = default;

  VertexSet(std::initializer_list<int> labels) {
    for (int v : labels) insert(v);
  }

  static VertexSet from_vector(const std::vector<int>& labels) {
    VertexSet s;
    for (int v : labels) s.insert(v);
    return s;
  }

  /// {1..n}
  static VertexSet range(int n) {
    VertexSet s;
    for (int v = 1; v <= n; ++v) s.insert(v);
    return s;
  }

  void insert(int v) {
    check(v);
    words_[word(v)] |= bit(v);
  }

  void erase(int v) {
    check(v);
    words_[word(v)] &= ~bit(v);
  }

  [[nodiscard]] bool contains(int v) const {
    if (v < 1 || v > kMaxVertices) return false;
    return (words_[word(v)] & bit(v)) != 0;
  }

  [[nodiscard]] int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  [[nodiscard]] bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Smallest label, or 0 when empty.
  [[nodiscard]] int first() const { return next_after(0); }

  /// Smallest label strictly greater than v, or 0 when none.
  [[nodiscard]] int next_after(int v) const {
    int idx = v; // 0-based bit index of label v+1
    if (idx >= kMaxVertices) return 0;
    std::size_t w = static_cast<std::size_t>(idx) / 64;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (idx % 64));
    while (true) {
      if (cur != 0)
        return static_cast<int>(w * 64) + std::countr_zero(cur) + 1;
      if (++w >= kWords) return 0;
      cur = words_[w];
    }
  }

  /// Largest label, or 0 when empty.
  [[nodiscard]] int last() const {
    for (std::size_t w = kWords; w-- > 0;)
      if (words_[w] != 0)
        return static_cast<int>(w * 64) + 63 - std::countl_zero(words_[w]) + 1;
    return 0;
  }

  [[nodiscard]] std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int v = first(); v != 0; v = next_after(v)) out.push_back(v);
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int v = first(); v != 0; v = next_after(v)) f(v);
  }

  [[nodiscard]] bool subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }

  [[nodiscard]] bool intersects(const VertexSet& other) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Lexicographic comparison of the ascending label lists.
  [[nodiscard]] static std::strong_ordering lex_compare(const VertexSet& a,
                                                        const VertexSet& b) {
    int x = a.first();
    int y = b.first();
    while (x != 0 && y != 0) {
      if (x != y) return x <=> y;
      x = a.next_after(x);
      y = b.next_after(y);
    }
    if (x == 0 && y == 0) return std::strong_ordering::equal;
    return x == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  /// Order by (cardinality, lex) used for covers and monomial generators.
  [[nodiscard]] static bool size_lex_less(const VertexSet& a, const VertexSet& b) {
    int sa = a.size();
    int sb = b.size();
    if (sa != sb) return sa < sb;
    return lex_compare(a, b) < 0;
  }

  [[nodiscard]] std::size_t hash() const {
    return std::hash<std::uint64_t>{}(words_[0] * 0x9E3779B97F4A7C15ULL ^ words_[1]);
  }

  [[nodiscard]] std::string to_string() const {
    std::string s = "{";
    bool first_item = true;
    for_each([&](int v) {
      if (!first_item) s += ",";
      s += std::to_string(v);
      first_item = false;
    });
    return s + "}";
  }

private:
  static constexpr std::size_t kWords = kMaxVertices / 64;

  static void check(int v) {
    if (v < 1 || v > kMaxVertices)
      throw ValidationError("vertex label " + std::to_string(v) +
                            " outside 1.." + std::to_string(kMaxVertices));
  }
  static std::size_t word(int v) { return static_cast<std::size_t>(v - 1) / 64; }
  static std::uint64_t bit(int v) { return std::uint64_t{1} << ((v - 1) % 64); }

  std::array<std::uint64_t, kWords> words_{};
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

/// Removes every set that is a proper superset of another (and duplicates),
/// then sorts by (size, lex).
inline std::vector<VertexSet> minimalize(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), VertexSet::size_lex_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  kept.reserve(sets.size());
  for (const auto& s : sets) {
    bool dominated = false;
    for (const auto& k : kept) {
      if (k.subset_of(s)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(s);
  }
  return kept;
}

} // namespace coverdeal
