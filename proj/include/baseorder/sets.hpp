#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace baseorder {

struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An index set over a ground set of at most 64 elements, packed into one word.
struct eset {
  std::uint64_t bits = 0;

  constexpr eset() = default;
  constexpr explicit eset(std::uint64_t b) : bits(b) {}

  static constexpr eset empty() { return eset{}; }
  static constexpr eset full(int n) {
    return eset{n >= 64 ? ~0ull : ((1ull << n) - 1)};
  }
  static constexpr eset single(int i) { return eset{1ull << i}; }

  constexpr int size() const { return std::popcount(bits); }
  constexpr bool is_empty() const { return bits == 0; }
  constexpr bool contains(int i) const { return (bits >> i) & 1; }
  constexpr bool subset_of(eset o) const { return (bits & ~o.bits) == 0; }
  constexpr bool intersects(eset o) const { return (bits & o.bits) != 0; }

  constexpr eset with(int i) const { return eset{bits | (1ull << i)}; }
  constexpr eset without(int i) const { return eset{bits & ~(1ull << i)}; }

  int lowest() const { return std::countr_zero(bits); }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr eset operator|(eset a, eset b) { return eset{a.bits | b.bits}; }
  friend constexpr eset operator&(eset a, eset b) { return eset{a.bits & b.bits}; }
  friend constexpr eset operator-(eset a, eset b) { return eset{a.bits & ~b.bits}; }
  friend constexpr eset operator^(eset a, eset b) { return eset{a.bits ^ b.bits}; }
  friend constexpr bool operator==(eset a, eset b) { return a.bits == b.bits; }
  friend constexpr bool operator!=(eset a, eset b) { return a.bits != b.bits; }
};

// Order by sorted member lists ({0,3} before {1,2}, prefixes first).
inline bool lex_less(eset a, eset b) {
  std::uint64_t x = a.bits, y = b.bits;
  while (x && y) {
    int ix = std::countr_zero(x), iy = std::countr_zero(y);
    if (ix != iy) return ix < iy;
    x &= x - 1;
    y &= y - 1;
  }
  return !x && y;
}

// (size, lex) order used to normalize flat lists.
inline bool size_lex_less(eset a, eset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

// Visits every subset of s in ascending numeric order of the packed word.
template <class F>
inline void for_each_subset(eset s, F&& f) {
  std::uint64_t sub = 0;
  while (true) {
    f(eset{sub});
    if (sub == s.bits) break;
    sub = (sub - s.bits) & s.bits;
  }
}

// Visits the k-subsets of {0..n-1} in member-list lexicographic order.
template <class F>
inline void for_each_combination(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    eset s;
    for (int i : idx) s = s.with(i);
    f(s);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Deletes position x from an index set, shifting higher indices down.
inline eset squeeze_index(eset s, int x) {
  std::uint64_t low = s.bits & ((1ull << x) - 1);
  std::uint64_t high = (s.bits >> 1) & ~((1ull << x) - 1);
  return eset{low | high};
}

// Inverse of squeeze_index: reopens a gap at position x (bit x left clear).
inline eset unsqueeze_index(eset s, int x) {
  std::uint64_t low = s.bits & ((1ull << x) - 1);
  std::uint64_t high = (s.bits & ~((1ull << x) - 1)) << 1;
  return eset{low | high};
}

}  // namespace baseorder
