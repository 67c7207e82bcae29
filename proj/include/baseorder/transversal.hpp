#pragma once

#include <optional>
#include <vector>

#include "baseorder/ops.hpp"

namespace baseorder {

namespace detail {

// Alternating Mason-Ingleton sum over the nonempty subsets of the antichain:
// sum (-1)^{|F'|+1} r(U F'). Unions are built incrementally.
inline long long mason_sum(const matroid& m, const std::vector<eset>& chain) {
  int k = static_cast<int>(chain.size());
  long long total = 0;
  std::vector<eset> un(std::size_t{1} << k);
  for (std::uint64_t s = 1; s < un.size(); ++s) {
    int b = std::countr_zero(s);
    un[s] = un[s & (s - 1)] | chain[b];
    total += (std::popcount(s) & 1) ? m.rank(un[s]) : -m.rank(un[s]);
  }
  return total;
}

}  // namespace detail

// Mason-Ingleton test: transversal iff the antichain inequality holds over all
// nonempty antichains of Z(M). Antichains of size one and two hold in every
// matroid, so the search starts at size three. Returns a violating antichain,
// or nullopt when the matroid is transversal.
inline std::optional<std::vector<eset>> mason_ingleton_violation(const matroid& m) {
  const auto& flats = m.presentation().flats;
  int z = static_cast<int>(flats.size());
  if (z > 40) throw budget_error("transversality check limited to 40 cyclic flats");

  // pairwise comparability
  std::vector<std::uint64_t> incomp(z, 0);
  for (int i = 0; i < z; ++i)
    for (int j = 0; j < z; ++j)
      if (i != j && !flats[i].set.subset_of(flats[j].set) &&
          !flats[j].set.subset_of(flats[i].set))
        incomp[i] |= 1ull << j;

  std::vector<int> stack;
  std::vector<eset> chain;
  std::optional<std::vector<eset>> found;

  auto violated = [&]() {
    eset cap = chain[0];
    for (const auto& s : chain) cap = cap & s;
    return static_cast<long long>(m.rank(cap)) > detail::mason_sum(m, chain);
  };

  std::function<void(int, std::uint64_t)> dfs = [&](int next, std::uint64_t allowed) {
    if (found) return;
    if (chain.size() >= 3 && violated()) {
      found = chain;
      return;
    }
    for (int i = next; i < z; ++i) {
      if (!((allowed >> i) & 1)) continue;
      chain.push_back(flats[i].set);
      dfs(i + 1, allowed & incomp[i]);
      chain.pop_back();
      if (found) return;
    }
  };
  dfs(0, ~0ull >> (64 - (z ? z : 1)));
  return found;
}

inline bool is_transversal(const matroid& m) { return !mason_ingleton_violation(m); }

inline bool is_cotransversal(const matroid& m) { return is_transversal(dual(m)); }

inline bool is_sparse_paving(const matroid& m) {
  return m.is_paving() && dual(m).is_paving();
}

}  // namespace baseorder
