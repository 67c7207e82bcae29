#pragma once

#include <algorithm>
#include <optional>
#include <unordered_set>
#include <vector>

#include "baseorder/exchange.hpp"

namespace baseorder {

// Source/sink-free orientation of K_{s,t} with s+t = r+1 and s,t >= 2, padded
// with isolated vertices to two sides of size r. Row i / column j refer to the
// support vertices x_{i+1} in A and y_{j+1} in B; entry true means x -> y.
struct critical_graph {
  int r = 0, s = 0, t = 0;
  std::vector<std::uint16_t> rows;  // s rows of t bits

  bool edge_xy(int i, int j) const { return (rows[i] >> j) & 1; }

  critical_graph reversed() const {
    critical_graph g = *this;
    for (auto& row : g.rows) row = static_cast<std::uint16_t>(~row & ((1u << t) - 1));
    return g;
  }

  // element indices of the associated ground set: a_i = i, b_j = r + j
  eset a_side() const { return eset::full(r); }
  eset b_side() const { return eset{((1ull << r) - 1) << r}; }
  eset x_support() const { return eset::full(s); }
  eset y_support() const { return eset{((1ull << t) - 1) << r}; }

  void check() const {
    if (r < 3) throw std::domain_error("critical graphs need rank at least 3");
    if (s < 2 || t < 2 || s + t != r + 1)
      throw std::domain_error("support sizes must satisfy s,t >= 2 and s+t = r+1");
    if (static_cast<int>(rows.size()) != s) throw std::domain_error("row count mismatch");
    for (int i = 0; i < s; ++i) {
      if (rows[i] >> t) throw std::domain_error("orientation bits outside K_{s,t}");
      if (rows[i] == 0 || rows[i] == ((1u << t) - 1))
        throw std::domain_error("a support vertex is a source or sink");
    }
    for (int j = 0; j < t; ++j) {
      int col = 0;
      for (int i = 0; i < s; ++i) col |= edge_xy(i, j) << i;
      if (col == 0 || col == ((1 << s) - 1))
        throw std::domain_error("a support vertex is a source or sink");
    }
  }
};

namespace detail {

// Canonical key under row and column permutations: minimum over row orders of
// the sorted column-value tuple, packed low column first.
inline std::uint64_t canonical_rc(int s, int t, const std::vector<std::uint16_t>& rows) {
  std::vector<int> order(s);
  for (int i = 0; i < s; ++i) order[i] = i;
  std::uint64_t best = ~0ull;
  std::vector<std::uint32_t> cols(t);
  do {
    for (int j = 0; j < t; ++j) {
      std::uint32_t c = 0;
      for (int i = 0; i < s; ++i) c |= ((rows[order[i]] >> j) & 1u) << i;
      cols[j] = c;
    }
    std::sort(cols.begin(), cols.end());
    std::uint64_t key = 0;
    for (int j = t - 1; j >= 0; --j) key = (key << s) | cols[j];
    best = std::min(best, key);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

inline std::vector<std::uint16_t> transpose_complement(int s, int t,
                                                       const std::vector<std::uint16_t>& rows) {
  std::vector<std::uint16_t> out(t, 0);
  for (int j = 0; j < t; ++j)
    for (int i = 0; i < s; ++i)
      if (!((rows[i] >> j) & 1)) out[j] |= static_cast<std::uint16_t>(1u << i);
  return out;
}

}  // namespace detail

// Isomorphism-invariant key; when s = t the side swap (which transposes and
// reverses the orientation matrix) is part of the symmetry group.
inline std::uint64_t canonical_key(const critical_graph& g) {
  std::uint64_t key = detail::canonical_rc(g.s, g.t, g.rows);
  if (g.s == g.t)
    key = std::min(key, detail::canonical_rc(g.t, g.s,
                                             detail::transpose_complement(g.s, g.t, g.rows)));
  return key;
}

// All critical graphs of rank r, one canonical representative per isomorphism
// class, grouped by (s,t) with s <= t and ordered by canonical key.
inline std::vector<critical_graph> enumerate_critical_graphs(int r) {
  if (r < 3 || r > 9) throw budget_error("critical-graph enumeration supports 3 <= r <= 9");
  std::vector<critical_graph> out;
  for (int s = 2; 2 * s <= r + 1; ++s) {
    int t = r + 1 - s;
    // rows with both orientations present, in nondecreasing order; every
    // isomorphism class contains a row-sorted matrix
    std::vector<std::uint16_t> valid_rows;
    for (std::uint32_t v = 1; v + 1 < (1u << t); ++v)
      valid_rows.push_back(static_cast<std::uint16_t>(v));

    std::unordered_set<std::uint64_t> seen;
    std::vector<std::pair<std::uint64_t, critical_graph>> found;
    std::vector<std::uint16_t> rows(s);

    std::function<void(int, std::size_t)> rec = [&](int i, std::size_t from) {
      if (i == s) {
        for (int j = 0; j < t; ++j) {
          int col = 0;
          for (int q = 0; q < s; ++q) col |= ((rows[q] >> j) & 1) << q;
          if (col == 0 || col == (1 << s) - 1) return;
        }
        critical_graph g{r, s, t, rows};
        auto key = canonical_key(g);
        if (seen.insert(key).second) found.emplace_back(key, std::move(g));
        return;
      }
      for (std::size_t v = from; v < valid_rows.size(); ++v) {
        rows[i] = valid_rows[v];
        rec(i + 1, v);
      }
    };
    rec(0, 0);
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& kg : found) {
      // store the canonical representative itself, re-derived from the key
      critical_graph canon{r, s, t, {}};
      std::uint64_t k = kg.first;
      std::vector<std::uint16_t> cols(t);
      for (int j = 0; j < t; ++j) {
        cols[j] = static_cast<std::uint16_t>(k & ((1u << s) - 1));
        k >>= s;
      }
      canon.rows.assign(s, 0);
      for (int j = 0; j < t; ++j)
        for (int i = 0; i < s; ++i)
          if ((cols[j] >> i) & 1) canon.rows[i] |= static_cast<std::uint16_t>(1u << j);
      canon.check();
      out.push_back(std::move(canon));
    }
  }
  return out;
}

// Pair of proper sub-supports whose cross edges all run the same way; its
// presence is exactly what breaks axiom (Z3) for the Z_Delta family.
struct obstruction {
  eset k_side;  // subset of the X support, as row positions
  eset l_side;  // subset of the Y support, as column positions
};

struct obstruction_analysis {
  std::vector<obstruction> all;
  std::optional<obstruction> minimum, maximum;
};

inline obstruction_analysis find_obstructions(const critical_graph& g) {
  obstruction_analysis res;
  std::vector<std::uint32_t> cols(g.t, 0);
  for (int j = 0; j < g.t; ++j)
    for (int i = 0; i < g.s; ++i) cols[j] |= static_cast<std::uint32_t>(g.edge_xy(i, j)) << i;

  // K, L, X-K, Y-L all need at least two elements
  for (std::uint32_t kmask = 0; kmask < (1u << g.s); ++kmask) {
    int ks = std::popcount(kmask);
    if (ks < 2 || g.s - ks < 2) continue;
    for (std::uint32_t lmask = 0; lmask < (1u << g.t); ++lmask) {
      int ls = std::popcount(lmask);
      if (ls < 2 || g.t - ls < 2) continue;
      bool ok = true;
      // (k,y) in E for k in K, y in Y-L: rows of K cover Y-L
      for (std::uint32_t km = kmask; km && ok; km &= km - 1)
        if ((~g.rows[std::countr_zero(km)] & ~lmask & ((1u << g.t) - 1)) != 0) ok = false;
      // (l,x) in E for l in L, x in X-K: columns of L avoid X-K
      for (std::uint32_t lm = lmask; lm && ok; lm &= lm - 1)
        if ((cols[std::countr_zero(lm)] & ~kmask & ((1u << g.s) - 1)) != 0) ok = false;
      if (ok) res.all.push_back({eset{kmask}, eset{lmask}});
    }
  }
  if (!res.all.empty()) {
    eset kmin = res.all[0].k_side, lmin = res.all[0].l_side;
    eset kmax = kmin, lmax = lmin;
    for (const auto& o : res.all) {
      kmin = kmin & o.k_side;
      lmin = lmin & o.l_side;
      kmax = kmax | o.k_side;
      lmax = lmax | o.l_side;
    }
    res.minimum = obstruction{kmin, lmin};
    res.maximum = obstruction{kmax, lmax};
  }
  return res;
}

// The two transversal set families attached to a critical graph, their merge
// Z_Delta, and the P/Q repair sets when obstructions exist.
struct z_delta_presentation {
  cyclic_flat_presentation z_a, z_b, merged;
  std::optional<eset> p_set, q_set;  // present iff the graph has an obstruction
  int p_rank = 0, q_rank = 0;
};

namespace detail {

inline ground_set delta_ground(const critical_graph& g) {
  ground_set gs;
  gs.size = 2 * g.r;
  for (int i = 1; i <= g.r; ++i) gs.labels.push_back("a" + std::to_string(i));
  for (int i = 1; i <= g.r; ++i) gs.labels.push_back("b" + std::to_string(i));
  return gs;
}

// C(b,A) for a support column j: {b_j} ∪ {a : (b_j,a) not an edge}; isolated
// b's would give {b} ∪ A, which only ever produces the top flat.
inline eset c_of_y(const critical_graph& g, int j) {
  eset c = eset::single(g.r + j);
  for (int i = 0; i < g.s; ++i)
    if (g.edge_xy(i, j)) c = c.with(i);  // (b,a) absent exactly when (a,b) present
  return c | (g.a_side() - g.x_support());
}

inline eset c_of_x(const critical_graph& g, int i) {
  eset c = eset::single(i);
  for (int j = 0; j < g.t; ++j)
    if (!g.edge_xy(i, j)) c = c.with(g.r + j);
  return c | (g.b_side() - g.y_support());
}

}  // namespace detail

// Builds Z_A = {D(B') : B' ⊆ B} with rank |D ∩ A|, the symmetric Z_B, their
// merge, and P/Q from the minimum and maximum obstructions.
inline z_delta_presentation build_z_delta(const critical_graph& g) {
  g.check();
  z_delta_presentation out;
  ground_set gs = detail::delta_ground(g);
  eset all = eset::full(2 * g.r);
  eset a_side = g.a_side(), b_side = g.b_side();

  std::vector<eset> cy(g.t), cx(g.s);
  for (int j = 0; j < g.t; ++j) cy[j] = detail::c_of_y(g, j);
  for (int i = 0; i < g.s; ++i) cx[i] = detail::c_of_x(g, i);

  // D(B') iterated to a fixed point; subsets of Y suffice because any
  // isolated b immediately forces the top flat.
  auto close_a = [&](eset cu) {
    while (true) {
      eset grown = cu;
      for (int j = 0; j < g.t; ++j)
        if ((cy[j].without(g.r + j)).subset_of(cu)) grown = grown | cy[j];
      if (a_side.subset_of(cu)) grown = grown | b_side;  // isolated b: C(b,A)-b = A
      if (grown == cu) return cu;
      cu = grown;
    }
  };
  auto close_b = [&](eset cu) {
    while (true) {
      eset grown = cu;
      for (int i = 0; i < g.s; ++i)
        if ((cx[i].without(i)).subset_of(cu)) grown = grown | cx[i];
      if (b_side.subset_of(cu)) grown = grown | a_side;
      if (grown == cu) return cu;
      cu = grown;
    }
  };

  std::vector<ranked_flat> za, zb;
  auto push_unique = [](std::vector<ranked_flat>& v, ranked_flat f) {
    for (const auto& e : v)
      if (e.set == f.set) return;
    v.push_back(f);
  };
  push_unique(za, {eset{}, 0});
  push_unique(za, {all, g.r});
  for (std::uint32_t bp = 1; bp < (1u << g.t); ++bp) {
    eset cu;
    for (std::uint32_t s = bp; s; s &= s - 1) cu = cu | cy[std::countr_zero(s)];
    eset d = close_a(cu);
    push_unique(za, {d, (d & a_side).size()});
  }
  push_unique(zb, {eset{}, 0});
  push_unique(zb, {all, g.r});
  for (std::uint32_t ap = 1; ap < (1u << g.s); ++ap) {
    eset cu;
    for (std::uint32_t s = ap; s; s &= s - 1) cu = cu | cx[std::countr_zero(s)];
    eset d = close_b(cu);
    push_unique(zb, {d, (d & b_side).size()});
  }

  out.z_a = {gs, za};
  out.z_a.normalize();
  out.z_b = {gs, zb};
  out.z_b.normalize();

  out.merged = {gs, za};
  for (const auto& f : zb)
    if (f.set != eset{} && f.set != all) out.merged.flats.push_back(f);
  out.merged.normalize();

  auto obs = find_obstructions(g);
  if (obs.minimum) {
    auto shift_l = [&](eset l) { return eset{l.bits << g.r}; };
    eset p = obs.minimum->k_side | shift_l(obs.minimum->l_side);
    eset q = obs.maximum->k_side | shift_l(obs.maximum->l_side) | (a_side - g.x_support()) |
             (b_side - g.y_support());
    out.p_set = p;
    out.q_set = q;
    out.p_rank = p.size() - 1;
    out.q_rank = g.r - 1;
  }
  return out;
}

// The matroid M(Delta): the merged family when there is no obstruction, and
// Z_Delta ∪ {P, Q} otherwise. Construction bugs surface as logic errors; the
// result is re-checked to have A and B as bases and Delta as its
// basis-exchange digraph.
inline matroid build_m_delta(const critical_graph& g) {
  auto z = build_z_delta(g);
  cyclic_flat_presentation p = z.merged;
  if (z.p_set) {
    p.flats.push_back({*z.p_set, z.p_rank});
    p.flats.push_back({*z.q_set, z.q_rank});
    p.normalize();
  }
  matroid m = [&] {
    try {
      return matroid::from_presentation(std::move(p));
    } catch (const std::domain_error& e) {
      throw std::logic_error(std::string("M(Delta) presentation failed validation: ") +
                             e.what());
    }
  }();

  eset a = g.a_side(), b = g.b_side();
  if (!m.is_basis(a) || !m.is_basis(b))
    throw std::logic_error("M(Delta): the two sides are not both bases");
  auto dg = build_exchange_digraph(m, a, b);
  for (int i = 0; i < g.r; ++i)
    for (int j = 0; j < g.r; ++j) {
      bool want_ab = i < g.s && j < g.t && g.edge_xy(i, j);
      bool want_ba = i < g.s && j < g.t && !g.edge_xy(i, j);
      if (dg.edge_ab(i, j) != want_ab || dg.edge_ba(j, i) != want_ba)
        throw std::logic_error("M(Delta): exchange digraph does not reproduce Delta");
    }
  return m;
}

// Evidence record for the excluded-minor conjectures on one critical graph.
struct conjecture_report {
  critical_graph graph;
  bool has_obstruction = false;
  bool not_base_orderable = false;
  bool excluded_minor_bo = false;
  bool excluded_minor_sbo = false;
  bool consistent_with_finding = false;
};

inline conjecture_report analyze_critical_graph(const critical_graph& g) {
  conjecture_report rep;
  rep.graph = g;
  rep.has_obstruction = find_obstructions(g).minimum.has_value();
  matroid m = build_m_delta(g);
  auto bo = certify_excluded_minor(m, "base-orderable",
                                   [](const matroid& x) { return is_base_orderable(x); });
  rep.not_base_orderable = bo.fails_class;
  rep.excluded_minor_bo = bo.is_excluded_minor;
  auto sbo = certify_excluded_minor(m, "strongly-base-orderable", [](const matroid& x) {
    return is_strongly_base_orderable(x);
  });
  rep.excluded_minor_sbo = sbo.is_excluded_minor;
  rep.consistent_with_finding =
      rep.not_base_orderable && rep.excluded_minor_bo &&
      (rep.has_obstruction ? !rep.excluded_minor_sbo : rep.excluded_minor_sbo);
  return rep;
}

}  // namespace baseorder
