#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "baseorder/catalog.hpp"
#include "baseorder/families.hpp"
#include "baseorder/isomorphism.hpp"
#include "baseorder/transversal.hpp"

namespace testutil {

using namespace baseorder;

// Small reference critical graphs, with the supports on the lowest indices
// (a_i = i-1, b_j = r+j-1). delta7 is the smallest graph with an obstruction.
inline critical_graph delta3() { return {3, 2, 2, {0b01, 0b10}}; }
inline critical_graph delta5() { return {5, 3, 3, {0b101, 0b010, 0b011}}; }
inline critical_graph delta7() { return {7, 4, 4, {0b0001, 0b0010, 0b0111, 0b1011}}; }

inline matroid mk4() { return build_m_delta(delta3()); }

// Cycle matroid of K4 built independently from the graphic rank function
// (4 vertices, edges in fixed order 01,02,03,12,13,23).
inline matroid graphic_k4() {
  static const int ends[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  auto rank_fn = [&](eset s) {
    int parent[4] = {0, 1, 2, 3};
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    int r = 0;
    for (int e : s.members()) {
      int u = find(ends[e][0]), v = find(ends[e][1]);
      if (u != v) {
        parent[u] = v;
        ++r;
      }
    }
    return r;
  };
  return matroid_from_rank_fn(ground_set::unlabeled(6), rank_fn);
}

// Number of spanning trees of K4 by direct edge-subset enumeration.
inline int k4_spanning_tree_count() {
  static const int ends[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  int count = 0;
  for_each_combination(6, 3, [&](eset s) {
    int parent[4] = {0, 1, 2, 3};
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    int merged = 0;
    for (int e : s.members()) {
      int u = find(ends[e][0]), v = find(ends[e][1]);
      if (u != v) {
        parent[u] = v;
        ++merged;
      }
    }
    if (merged == 3) ++count;
  });
  return count;
}

// Relabels elements by perm (element i of m becomes perm[i]).
inline matroid permute_matroid(const matroid& m, const std::vector<int>& perm) {
  cyclic_flat_presentation p{ground_set::unlabeled(m.ground_size()), {}};
  for (int i = 0; i < m.ground_size(); ++i)
    p.ground.labels[perm[i]] = m.ground().label(i) + "#";
  for (const auto& f : m.presentation().flats) {
    eset s;
    for (int e : f.set.members()) s = s.with(perm[e]);
    p.flats.push_back({s, f.rank});
  }
  return matroid::from_presentation(std::move(p));
}

// Independent oracle: search all |B1|! bijections for a k-exchange-ordering,
// straight from the definition.
inline bool brute_force_has_k_ordering(const matroid& m, eset a, eset b, int k) {
  auto as = a.members();
  auto bs = b.members();
  int r = static_cast<int>(as.size());
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::uint32_t sub = 1; ok && sub < (1u << r); ++sub) {
      if (std::popcount(sub) > k) continue;
      eset left = a, right = b;
      for (std::uint32_t s = sub; s; s &= s - 1) {
        int i = std::countr_zero(s);
        left = left.without(as[i]).with(bs[perm[i]]);
        right = right.without(bs[perm[i]]).with(as[i]);
      }
      if (left.size() != r || right.size() != r || !m.is_basis(left) || !m.is_basis(right))
        ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

struct named_matroid {
  std::string name;
  matroid m;
};

// Small matroids with rank <= 5 and at most ten elements; the shared test
// bed for oracle-equivalence and invariant sweeps.
inline const std::vector<named_matroid>& small_catalog() {
  static const std::vector<named_matroid> cat = [] {
    std::vector<named_matroid> v;
    auto add = [&](std::string name, matroid m) { v.push_back({std::move(name), std::move(m)}); };
    add("U_{1,1}", uniform_matroid(1, 1));
    add("U_{1,2}", uniform_matroid(1, 2));
    add("U_{1,3}", uniform_matroid(1, 3));
    add("U_{2,3}", uniform_matroid(2, 3));
    add("U_{2,4}", uniform_matroid(2, 4));
    add("U_{2,5}", uniform_matroid(2, 5));
    add("U_{3,4}", uniform_matroid(3, 4));
    add("U_{3,5}", uniform_matroid(3, 5));
    add("U_{3,6}", uniform_matroid(3, 6));
    add("U_{4,4}", uniform_matroid(4, 4));
    add("loops+U_{2,3}", direct_sum(uniform_matroid(0, 2), uniform_matroid(2, 3)));
    add("U_{1,2}+U_{1,2}", direct_sum(uniform_matroid(1, 2), uniform_matroid(1, 2)));
    add("U_{1,2}+U_{2,3}", direct_sum(uniform_matroid(1, 2), uniform_matroid(2, 3)));
    add("U_{2,3}+U_{2,3}", direct_sum(uniform_matroid(2, 3), uniform_matroid(2, 3)));
    add("M(K4)", mk4());
    {
      auto m = mk4();
      auto tri = m.presentation().flats[1].set;
      auto r1 = relax_circuit_hyperplane(m, tri);
      add("M(K4) relaxed once", r1);
      auto tri2 = r1.presentation().flats[1].set;
      add("M(K4) relaxed twice", relax_circuit_hyperplane(r1, tri2));
      add("truncated M(K4)", truncation(m));
      add("free ext of M(K4)", free_extension(m));
    }
    for (const auto& g : enumerate_critical_graphs(4))
      add("M(Delta) r=4", build_m_delta(g));
    {
      int i = 0;
      for (const auto& g : enumerate_critical_graphs(5)) {
        add("M(Delta) r=5 #" + std::to_string(i++), build_m_delta(g));
      }
    }
    add("dual M(Delta5)", dual(build_m_delta(delta5())));
    add("M_alpha r=3", build_m_alpha({1, 1, 1, 1, 1, 1}));
    for (const auto& t : alpha_tuples_of_rank(4))
      add("M_alpha r=4", build_m_alpha(t));
    add("M_beta k=2", build_m_beta({2, 1, 1, 1, 1}));
    return v;
  }();
  return cat;
}

}  // namespace testutil
