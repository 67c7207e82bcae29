#pragma once

#include <algorithm>
#include <array>
#include <unordered_map>
#include <vector>

#include "baseorder/ops.hpp"

namespace baseorder {

namespace detail {

// Element-cell census: how many elements realize each membership pattern over
// the flat list, with flat indices remapped by perm (perm[i] = target index).
inline std::unordered_map<std::uint64_t, int> cell_census(const matroid& m,
                                                          const std::vector<int>& perm) {
  const auto& flats = m.presentation().flats;
  std::unordered_map<std::uint64_t, int> census;
  for (int e = 0; e < m.ground_size(); ++e) {
    std::uint64_t pat = 0;
    for (std::size_t i = 0; i < flats.size(); ++i)
      if (flats[i].set.contains(e)) pat |= 1ull << perm[i];
    ++census[pat];
  }
  return census;
}

}  // namespace detail

// Isomorphism of cyclic-flat presentations: search a rank- and
// size-preserving bijection of the flat families compatible with all pairwise
// intersection sizes, then compare element-cell counts. Sufficient because a
// matroid is determined by its ranked cyclic flats.
inline bool is_isomorphic(const matroid& a, const matroid& b) {
  if (a.ground_size() != b.ground_size()) return false;
  const auto& fa = a.presentation().flats;
  const auto& fb = b.presentation().flats;
  int z = static_cast<int>(fa.size());
  if (z != static_cast<int>(fb.size())) return false;
  if (z > 32) throw budget_error("isomorphism test limited to 32 cyclic flats");

  auto sig = [](const std::vector<ranked_flat>& fl) {
    std::vector<std::pair<int, int>> s;
    for (const auto& f : fl) s.emplace_back(f.set.size(), f.rank);
    std::sort(s.begin(), s.end());
    return s;
  };
  if (sig(fa) != sig(fb)) return false;

  std::vector<int> perm(z, -1);
  std::vector<bool> used(z, false);

  std::function<bool(int)> assign = [&](int i) -> bool {
    if (i == z) {
      std::vector<int> identity(z);
      for (int k = 0; k < z; ++k) identity[k] = k;
      return detail::cell_census(a, perm) == detail::cell_census(b, identity);
    }
    for (int j = 0; j < z; ++j) {
      if (used[j]) continue;
      if (fa[i].set.size() != fb[j].set.size() || fa[i].rank != fb[j].rank) continue;
      bool compatible = true;
      for (int k = 0; k < i && compatible; ++k)
        if ((fa[i].set & fa[k].set).size() != (fb[j].set & fb[perm[k]].set).size())
          compatible = false;
      if (!compatible) continue;
      perm[i] = j;
      used[j] = true;
      if (assign(i + 1)) return true;
      used[j] = false;
      perm[i] = -1;
    }
    return false;
  };
  return assign(0);
}

namespace detail {

// Full rank table of a matroid on up to 20 elements.
inline std::vector<std::int8_t> rank_table(const matroid& m) {
  int n = m.ground_size();
  if (n > 20) throw budget_error("rank table limited to 20 elements");
  std::vector<std::int8_t> t(std::size_t{1} << n);
  const auto& flats = m.presentation().flats;
  for (std::size_t s = 0; s < t.size(); ++s) {
    int best = std::popcount(s);
    for (const auto& f : flats)
      best = std::min(best, f.rank + std::popcount(s & ~f.set.bits));
    t[s] = static_cast<std::int8_t>(best);
  }
  return t;
}

// Permutation-invariant signature: counts of subsets by (size, rank).
template <class Table>
inline std::array<int, 16 * 16> table_signature(const Table& rank_of, int n) {
  std::array<int, 16 * 16> sig{};
  for (std::size_t s = 0; s < (std::size_t{1} << n); ++s)
    ++sig[std::popcount(s) * 16 + rank_of(s)];
  return sig;
}

}  // namespace detail

// Exhaustive minor search: does m have a minor isomorphic to pattern?
// Minors are enumerated as (kept set, independent contract set) pairs against
// a precomputed rank table; candidates are screened by a subset-rank census
// before the permutation search.
inline bool has_minor_isomorphic(const matroid& m, const matroid& pattern) {
  int n = m.ground_size();
  int p = pattern.ground_size();
  if (p > 8) throw budget_error("minor patterns limited to 8 elements");
  if (n > 20) throw budget_error("minor search limited to 20-element hosts");
  if (p > n) return false;

  auto host = detail::rank_table(m);
  auto pat = detail::rank_table(pattern);
  int pr = pattern.rank();
  auto pat_fn = [&](std::size_t s) { return static_cast<int>(pat[s]); };
  auto pat_sig = detail::table_signature(pat_fn, p);

  std::vector<std::int8_t> minor_rank(std::size_t{1} << p);
  std::vector<int> keep_elems(p);

  // backtracking isomorphism between two explicit rank tables
  std::vector<int> image(p, -1);
  std::vector<bool> used(p, false);
  std::function<bool(int)> match = [&](int i) -> bool {
    if (i == p) return true;
    for (int j = 0; j < p; ++j) {
      if (used[j]) continue;
      bool ok = true;
      // verify every subset of the prefix that contains i
      for (std::uint64_t s = 0; s < (1ull << i) && ok; ++s) {
        std::uint64_t sub = s | (1ull << i);
        std::uint64_t img = 1ull << j;
        for (std::uint64_t r = s; r; r &= r - 1) img |= 1ull << image[std::countr_zero(r)];
        if (minor_rank[sub] != pat[img]) ok = false;
      }
      if (!ok) continue;
      image[i] = j;
      used[j] = true;
      if (match(i + 1)) return true;
      used[j] = false;
      image[i] = -1;
    }
    return false;
  };

  bool found = false;
  for_each_combination(n, p, [&](eset keep) {
    if (found) return;
    keep_elems = keep.members();
    eset rest = m.universe() - keep;
    for_each_subset(rest, [&](eset con) {
      if (found) return;
      if (host[con.bits] != con.size()) return;  // contract sets taken independent
      int rc = host[con.bits];
      if (host[(keep | con).bits] - rc != pr) return;
      for (std::uint64_t s = 0; s < (1ull << p); ++s) {
        std::uint64_t full = con.bits;
        for (std::uint64_t r = s; r; r &= r - 1)
          full |= 1ull << keep_elems[std::countr_zero(r)];
        minor_rank[s] = static_cast<std::int8_t>(host[full] - rc);
      }
      auto minor_fn = [&](std::size_t s) { return static_cast<int>(minor_rank[s]); };
      if (detail::table_signature(minor_fn, p) != pat_sig) return;
      std::fill(image.begin(), image.end(), -1);
      std::fill(used.begin(), used.end(), false);
      if (match(0)) found = true;
    });
  });
  return found;
}

// Stable 64-bit id of the normalized presentation (FNV-1a over ground size
// and the sorted flats).
inline std::string canonical_hash(const matroid& m) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(m.ground_size()));
  for (const auto& f : m.presentation().flats) {
    mix(f.set.bits);
    mix(static_cast<std::uint64_t>(f.rank));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace baseorder
