#pragma once

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "baseorder/matroid.hpp"

namespace baseorder {

inline matroid dual(const matroid& m) {
  int r = m.rank();
  eset e = m.universe();
  cyclic_flat_presentation p{m.ground(), {}};
  for (const auto& f : m.presentation().flats) {
    eset comp = e - f.set;
    p.flats.push_back({comp, comp.size() + f.rank - r});
  }
  return matroid::from_presentation(std::move(p));
}

namespace detail {

inline std::string fresh_label(const std::vector<std::string>& used, std::string base) {
  auto taken = [&](const std::string& s) {
    return std::find(used.begin(), used.end(), s) != used.end();
  };
  if (!taken(base)) return base;
  for (int i = 1;; ++i) {
    std::string cand = base + "'" + (i > 1 ? std::to_string(i) : "");
    if (!taken(cand)) return cand;
  }
}

// One-element minor. rank_fn gives the minor's rank on squeezed indices;
// candidates per the cyclic-flat minor lemma are {F - x : F presented},
// filtered against the rank oracle. A full-subset sweep cross-checks the
// seeded family whenever the minor has at most 14 elements.
inline matroid one_element_minor(const matroid& m, int x,
                                 const std::function<int(eset)>& rank_fn) {
  int n = m.ground_size() - 1;
  ground_set g;
  g.size = n;
  for (int i = 0; i < m.ground_size(); ++i)
    if (i != x) g.labels.push_back(m.ground().label(i));

  std::vector<std::uint64_t> cands;
  for (const auto& f : m.presentation().flats)
    cands.push_back(squeeze_index(f.set.without(x), x).bits);
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

  auto is_cyclic_flat = [&](eset s) {
    int r = rank_fn(s);
    for (int e = 0; e < n; ++e) {
      if (s.contains(e)) {
        if (rank_fn(s.without(e)) != r) return false;
      } else {
        if (rank_fn(s.with(e)) == r) return false;
      }
    }
    return true;
  };

  cyclic_flat_presentation p{g, {}};
  for (auto c : cands)
    if (is_cyclic_flat(eset{c})) p.flats.push_back({eset{c}, rank_fn(eset{c})});

  if (n <= 14) {
    std::size_t count = 0;
    for (std::size_t s = 0; s < (std::size_t{1} << n); ++s)
      if (is_cyclic_flat(eset{s})) ++count;
    if (count != p.flats.size())
      throw std::logic_error("seeded minor presentation missed a cyclic flat");
  }
  return matroid::from_presentation(std::move(p));
}

inline matroid delete_one(const matroid& m, int x) {
  auto rank_fn = [&m, x](eset s) { return m.rank(unsqueeze_index(s, x)); };
  return one_element_minor(m, x, rank_fn);
}

inline matroid contract_one(const matroid& m, int x) {
  int rx = m.rank(eset::single(x));
  auto rank_fn = [&m, x, rx](eset s) {
    return m.rank(unsqueeze_index(s, x).with(x)) - rx;
  };
  return one_element_minor(m, x, rank_fn);
}

}  // namespace detail

inline matroid deletion(const matroid& m, eset s) {
  if (!s.subset_of(m.universe())) throw std::domain_error("deletion set outside the ground set");
  matroid cur = m;
  auto elems = s.members();
  for (auto it = elems.rbegin(); it != elems.rend(); ++it) cur = detail::delete_one(cur, *it);
  return cur;
}

inline matroid contraction(const matroid& m, eset s) {
  if (!s.subset_of(m.universe()))
    throw std::domain_error("contraction set outside the ground set");
  matroid cur = m;
  auto elems = s.members();
  for (auto it = elems.rbegin(); it != elems.rend(); ++it) cur = detail::contract_one(cur, *it);
  return cur;
}

// m / contract \ remove, with disjoint index sets taken in the original ground.
inline matroid minor(const matroid& m, eset contract, eset remove) {
  if (contract.intersects(remove)) throw std::domain_error("minor sets must be disjoint");
  matroid cur = contraction(m, contract);
  // removal indices shift once the contracted elements are gone
  eset shifted = remove;
  auto gone = contract.members();
  for (auto it = gone.rbegin(); it != gone.rend(); ++it) shifted = squeeze_index(shifted, *it);
  return deletion(cur, shifted);
}

inline matroid direct_sum(const matroid& a, const matroid& b) {
  int na = a.ground_size(), nb = b.ground_size();
  if (na + nb > 64) throw std::domain_error("direct sum exceeds 64 elements");
  ground_set g;
  g.size = na + nb;
  g.labels = a.ground().labels;
  for (const auto& l : b.ground().labels)
    g.labels.push_back(detail::fresh_label(g.labels, l));
  cyclic_flat_presentation p{g, {}};
  for (const auto& fa : a.presentation().flats)
    for (const auto& fb : b.presentation().flats)
      p.flats.push_back({fa.set | eset{fb.set.bits << na}, fa.rank + fb.rank});
  return matroid::from_presentation(std::move(p));
}

// Principal extension M +_Y e: a new element added freely to cl(Y). The new
// element takes the next free index.
inline matroid principal_extension(const matroid& m, eset y, std::string label = "") {
  if (!y.subset_of(m.universe()))
    throw std::domain_error("extension target outside the ground set");
  int n = m.ground_size();
  ground_set g = m.ground();
  g.size = n + 1;
  g.labels.push_back(detail::fresh_label(g.labels, label.empty() ? "x" : label));
  auto rank_fn = [&m, y, n](eset s) {
    eset old = s.without(n);
    if (!s.contains(n)) return m.rank(old);
    return std::min(m.rank(old) + 1, m.rank(old | y));
  };
  return matroid_from_rank_fn(g, rank_fn);
}

inline matroid free_extension(const matroid& m, std::string label = "") {
  return principal_extension(m, m.universe(), std::move(label));
}

inline matroid truncation(const matroid& m) {
  if (m.rank() < 1) throw std::domain_error("cannot truncate a rank-0 matroid");
  matroid ext = free_extension(m);
  return contraction(ext, eset::single(m.ground_size()));
}

// Simultaneous principal extensions: e_i added freely to F_i, order-free.
inline matroid simultaneous_extensions(
    const matroid& m, const std::vector<std::pair<std::string, eset>>& additions) {
  int n = m.ground_size();
  int t = static_cast<int>(additions.size());
  std::unordered_set<std::string> fresh_names;
  for (const auto& [label, target] : additions)
    if (!label.empty() && !fresh_names.insert(label).second)
      throw std::domain_error("duplicate new elements in simultaneous extension");
  ground_set g = m.ground();
  g.size = n + t;
  for (const auto& [label, target] : additions) {
    if (!target.subset_of(m.universe()))
      throw std::domain_error("extension target outside the ground set");
    g.labels.push_back(detail::fresh_label(g.labels, label.empty() ? "x" : label));
  }

  // union of targets F_I for every I, indexed by the I-mask
  std::vector<eset> target_union(std::size_t{1} << t);
  for (std::uint64_t i = 1; i < target_union.size(); ++i) {
    int b = std::countr_zero(i);
    target_union[i] = target_union[i & (i - 1)] | additions[b].second;
  }
  auto rank_fn = [&m, n, t, &target_union](eset s) {
    eset x = s & eset::full(n);
    std::uint64_t j = s.bits >> n;
    int best = 1 << 30;
    std::uint64_t i = 0;
    while (true) {
      int v = m.rank(x | target_union[i]) + std::popcount(j & ~i);
      best = std::min(best, v);
      if (i == j) break;
      i = (i - j) & j;
    }
    return best;
  };
  return matroid_from_rank_fn(g, rank_fn);
}

struct bipartite_graph {
  ground_set left;                // new elements T
  ground_set right;               // must match the matroid's ground
  std::vector<eset> adjacency;    // per left vertex, neighbors in right
};

// Matroid induced on g.left: X independent iff it matches into an
// independent set of m.
inline matroid induce_bipartite(const matroid& m, const bipartite_graph& g) {
  if (g.right.size != m.ground_size())
    throw std::domain_error("bipartite right side must be the matroid's ground set");
  for (const auto& l : g.left.labels)
    if (m.ground().index_of(l))
      throw std::domain_error("bipartite left side overlaps the ground set");
  int t = g.left.size;
  if (static_cast<int>(g.adjacency.size()) != t)
    throw std::domain_error("adjacency list size mismatch");
  for (auto a : g.adjacency)
    if (!a.subset_of(m.universe())) throw std::domain_error("neighborhood outside ground set");

  std::vector<eset> nbhd(std::size_t{1} << t);
  for (std::uint64_t i = 1; i < nbhd.size(); ++i) {
    int b = std::countr_zero(i);
    nbhd[i] = nbhd[i & (i - 1)] | g.adjacency[b];
  }
  auto rank_fn = [&m, &nbhd](eset x) {
    int best = 1 << 30;
    std::uint64_t y = 0;
    while (true) {
      int v = m.rank(nbhd[y]) + std::popcount(x.bits & ~y);
      best = std::min(best, v);
      if (y == x.bits) break;
      y = (y - x.bits) & x.bits;
    }
    return best;
  };
  return matroid_from_rank_fn(g.left, rank_fn);
}

// Parallel connection across the shared point p, computed as
// ((M ⊕ N') +_{p,p_N} e) / e \ p_N. Works when p is a loop or coloop too.
inline matroid parallel_connection(const matroid& m, const matroid& n, int pm, int pn) {
  if (pm < 0 || pm >= m.ground_size() || pn < 0 || pn >= n.ground_size())
    throw std::domain_error("shared point outside a ground set");
  matroid sum = direct_sum(m, n);
  int p_index = pm;
  int pn_index = m.ground_size() + pn;
  matroid ext = principal_extension(sum, eset::single(p_index).with(pn_index), "pc");
  int e_index = sum.ground_size();
  matroid con = contraction(ext, eset::single(e_index));
  return deletion(con, eset::single(pn_index));
}

// Declares a set that is both a circuit and a hyperplane to be a basis.
inline matroid relax_circuit_hyperplane(const matroid& m, eset x) {
  if (!m.is_circuit_hyperplane(x))
    throw std::domain_error("set is not a circuit-hyperplane");
  auto rank_fn = [&m, x](eset s) { return s == x ? x.size() : m.rank(s); };
  return matroid_from_rank_fn(m.ground(), rank_fn);
}

// True iff n is freer than m, i.e. r_m(X) <= r_n(X) pointwise; decided by the
// weak-order test on cyclic flats.
inline bool freer_than(const matroid& n, const matroid& m) {
  if (n.ground_size() != m.ground_size())
    throw std::domain_error("weak-order comparison needs a common ground set");
  for (const auto& f : n.presentation().flats) {
    bool witnessed = false;
    for (const auto& a : m.presentation().flats) {
      if (a.rank + (f.set - a.set).size() <= f.rank) {
        witnessed = true;
        break;
      }
    }
    if (!witnessed) return false;
  }
  return true;
}

}  // namespace baseorder
