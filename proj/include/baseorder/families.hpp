#pragma once

#include <string>
#include <vector>

#include "baseorder/critical.hpp"
#include "baseorder/transversal.hpp"

namespace baseorder {

// Block sizes for the six disjoint parts of the rank-r family with
// |A∪B∪C| = |D∪E∪F| = r and |A∪B∪D∪E| = r+1.
struct alpha_tuple {
  int a = 1, b = 1, c = 1, d = 1, e = 1, f = 1;

  int rank() const { return a + b + c; }

  void check() const {
    if (a < 1 || b < 1 || c < 1 || d < 1 || e < 1 || f < 1)
      throw std::domain_error("alpha tuple parts must be nonempty");
    if (d + e + f != rank())
      throw std::domain_error("alpha tuple needs |D|+|E|+|F| = |A|+|B|+|C|");
    if (a + b + d + e != rank() + 1)
      throw std::domain_error("alpha tuple needs |A|+|B|+|D|+|E| = r+1");
  }
};

// Block sizes for the rank-2k family with k = |C| = |F| = |A∪B| = |D∪E|.
struct beta_tuple {
  int k = 2;
  int a = 1, b = 1, d = 1, e = 1;

  void check() const {
    if (k < 2) throw std::domain_error("beta tuple needs k >= 2");
    if (a < 1 || b < 1 || d < 1 || e < 1)
      throw std::domain_error("beta tuple parts must be nonempty");
    if (a + b != k || d + e != k)
      throw std::domain_error("beta tuple needs |A|+|B| = |D|+|E| = k");
  }
};

namespace detail {

struct block_layout {
  eset a, b, c, d, e, f;
  ground_set ground;
};

inline block_layout make_blocks(int na, int nb, int nc, int nd, int ne, int nf) {
  block_layout bl;
  int off = 0;
  auto take = [&](int count, char name) {
    eset s;
    for (int i = 0; i < count; ++i) {
      s = s.with(off);
      bl.ground.labels.push_back(std::string(1, name) + std::to_string(i + 1));
      ++off;
    }
    return s;
  };
  bl.a = take(na, 'a');
  bl.b = take(nb, 'b');
  bl.c = take(nc, 'c');
  bl.d = take(nd, 'd');
  bl.e = take(ne, 'e');
  bl.f = take(nf, 'f');
  bl.ground.size = off;
  return bl;
}

}  // namespace detail

// The four-cyclic-flat excluded minor for gammoids and BO; ground order is
// A, B, C, D, E, F with labels a1.., b1.., and so on.
inline matroid build_m_alpha(const alpha_tuple& t) {
  t.check();
  auto bl = detail::make_blocks(t.a, t.b, t.c, t.d, t.e, t.f);
  int r = t.rank();
  cyclic_flat_presentation p{bl.ground, {}};
  p.flats.push_back({eset{}, 0});
  p.flats.push_back({bl.c | bl.b | bl.e, t.c + t.b});
  p.flats.push_back({bl.c | bl.a | bl.d, t.c + t.a});
  p.flats.push_back({bl.f | bl.e | bl.a, t.f + t.e});
  p.flats.push_back({bl.f | bl.d | bl.b, t.f + t.d});
  p.flats.push_back({eset::full(bl.ground.size), r});
  return matroid::from_presentation(std::move(p));
}

// The block structure of the alpha exchange digraph on bases A∪B∪C and
// D∪E∪F: edges A->D, E->A, D->B, B->E, nothing else.
inline bool alpha_digraph_matches(const matroid& m, const alpha_tuple& t) {
  auto bl = detail::make_blocks(t.a, t.b, t.c, t.d, t.e, t.f);
  eset top = bl.a | bl.b | bl.c;
  eset bottom = bl.d | bl.e | bl.f;
  auto dg = build_exchange_digraph(m, top, bottom);
  auto block_of = [&](int elem) {
    if (bl.a.contains(elem)) return 'A';
    if (bl.b.contains(elem)) return 'B';
    if (bl.c.contains(elem)) return 'C';
    if (bl.d.contains(elem)) return 'D';
    if (bl.e.contains(elem)) return 'E';
    return 'F';
  };
  int r = dg.rank();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      char u = block_of(dg.a_elems[i]), v = block_of(dg.b_elems[j]);
      bool want_ab = (u == 'A' && v == 'D') || (u == 'B' && v == 'E');
      bool want_ba = (u == 'A' && v == 'E') || (u == 'B' && v == 'D');
      if (dg.edge_ab(i, j) != want_ab || dg.edge_ba(j, i) != want_ba) return false;
    }
  return true;
}

// The rank-2k base-orderable excluded minor for SBO and k-BO: the alpha flats
// with C and F completed, plus the circuit-hyperplane A∪B∪D∪E.
inline matroid build_m_beta(const beta_tuple& t) {
  t.check();
  auto bl = detail::make_blocks(t.a, t.b, t.k, t.d, t.e, t.k);
  int k = t.k;
  cyclic_flat_presentation p{bl.ground, {}};
  p.flats.push_back({eset{}, 0});
  p.flats.push_back({bl.a | bl.b | bl.d | bl.e, 2 * k - 1});
  p.flats.push_back({bl.c | bl.b | bl.e, k + t.b});
  p.flats.push_back({bl.c | bl.a | bl.d, k + t.a});
  p.flats.push_back({bl.f | bl.e | bl.a, k + t.e});
  p.flats.push_back({bl.f | bl.d | bl.b, k + t.d});
  p.flats.push_back({eset::full(bl.ground.size), 2 * k});
  return matroid::from_presentation(std::move(p));
}

// M'_{beta'} of the duality remark, realized on the same ground layout as
// build_m_beta(t): the circuit-hyperplane becomes C∪F and D/E swap roles.
// The dual of M_beta equals this matroid elementwise.
inline matroid build_m_beta_dual_variant(const beta_tuple& t) {
  t.check();
  auto bl = detail::make_blocks(t.a, t.b, t.k, t.d, t.e, t.k);
  int k = t.k;
  cyclic_flat_presentation p{bl.ground, {}};
  p.flats.push_back({eset{}, 0});
  p.flats.push_back({bl.c | bl.f, 2 * k - 1});
  p.flats.push_back({bl.c | bl.b | bl.d, k + t.b});
  p.flats.push_back({bl.c | bl.a | bl.e, k + t.a});
  p.flats.push_back({bl.f | bl.d | bl.a, k + t.d});
  p.flats.push_back({bl.f | bl.e | bl.b, k + t.e});
  p.flats.push_back({eset::full(bl.ground.size), 2 * k});
  return matroid::from_presentation(std::move(p));
}

// The five assertions of the beta theorem, plus the dual identity.
struct beta_report {
  beta_tuple tuple;
  bool not_k_bo = false;            // (1) with SBO failing alongside
  bool not_sbo = false;
  bool contractions_transversal = false;  // (2)
  bool excluded_minor_sbo = false;        // (3)
  bool excluded_minor_kbo = false;
  bool k_minus_one_bo = false;            // (4)
  int nonorderable_disjoint_pairs = -1;   // (5)
  int expected_disjoint_pairs = -1;
  bool census_matches = false;
  bool dual_identity = false;             // M_beta* = M'_beta on swapped D/E
  bool full_run = true;                   // false when k exceeded the budget
};

inline beta_report verify_beta_theorem(const beta_tuple& t) {
  t.check();
  matroid m = build_m_beta(t);
  beta_report rep;
  rep.tuple = t;
  int k = t.k;

  // (1) the known failing pair suffices as a witness
  eset top, bottom;
  {
    auto bl = detail::make_blocks(t.a, t.b, t.k, t.d, t.e, t.k);
    top = bl.a | bl.b | bl.c;
    bottom = bl.d | bl.e | bl.f;
  }
  rep.not_k_bo = !find_k_exchange_ordering(m, top, bottom, k).has_value();
  rep.not_sbo = rep.not_k_bo;  // rank 2k, so SBO reduces to k-orderability

  // (2)
  rep.contractions_transversal = true;
  for (int x = 0; x < m.ground_size(); ++x)
    if (!is_transversal(contraction(m, eset::single(x)))) {
      rep.contractions_transversal = false;
      break;
    }

  // (5) disjoint basis pairs with no k-exchange-ordering
  int bad_pairs = 0;
  for (const auto& b1 : m.bases()) {
    eset comp = m.universe() - b1;
    if (!lex_less(b1, comp)) continue;  // each unordered pair once
    if (!m.is_basis(comp)) continue;
    if (!find_k_exchange_ordering(m, b1, comp, k)) ++bad_pairs;
  }
  rep.nonorderable_disjoint_pairs = bad_pairs;
  bool balanced = (t.a == t.b && t.b == t.d && t.d == t.e && 2 * t.a == k);
  rep.expected_disjoint_pairs = balanced ? 2 : 1;
  rep.census_matches = bad_pairs == rep.expected_disjoint_pairs;

  // dual identity: M_beta* equals the C∪F variant on beta' = (A,B,C,E,D,F)
  rep.dual_identity = dual(m) == build_m_beta_dual_variant(t);

  if (k > 3) {
    rep.full_run = false;
    return rep;
  }

  // (3) every single-element minor strongly base-orderable
  rep.excluded_minor_sbo = rep.not_sbo;
  for (int x = 0; x < m.ground_size() && rep.excluded_minor_sbo; ++x) {
    if (!is_strongly_base_orderable(deletion(m, eset::single(x))) ||
        !is_strongly_base_orderable(contraction(m, eset::single(x))))
      rep.excluded_minor_sbo = false;
  }
  rep.excluded_minor_kbo = rep.excluded_minor_sbo && rep.not_k_bo;

  // (4)
  rep.k_minus_one_bo = is_k_base_orderable(m, k - 1);
  return rep;
}

// Number of isomorphism classes of M_beta for a given k: the count of
// 4-cycles (p,q,r,s) of positive integers with p+r = q+s = k, up to rotation
// and reflection; h^2 for k = 2h+1 and (h-1)^2 + h for k = 2h.
inline int count_beta_classes_formula(int k) {
  if (k < 2) throw std::domain_error("beta classes need k >= 2");
  int h = k / 2;
  return (k % 2 == 1) ? h * h : (h - 1) * (h - 1) + h;
}

// Explicit census of the 4-cycles (p,q,r,s), p+r = q+s = k, up to cyclic
// shifts (block sizes read around the exchange digraph; reading direction is
// part of the data, so reflections are not quotiented).
inline int count_beta_classes_enumerated(int k) {
  if (k < 2) throw std::domain_error("beta classes need k >= 2");
  std::vector<std::vector<int>> seen;
  int count = 0;
  for (int p = 1; p < k; ++p)
    for (int q = 1; q < k; ++q)
      for (int r2 = 1; r2 < k; ++r2)
        for (int s2 = 1; s2 < k; ++s2) {
          if (p + r2 != k || q + s2 != k) continue;
          std::vector<int> canon{p, q, r2, s2};
          std::vector<int> cur = canon;
          for (int rot = 0; rot < 3; ++rot) {
            std::rotate(cur.begin(), cur.begin() + 1, cur.end());
            canon = std::min(canon, cur);
          }
          if (std::find(seen.begin(), seen.end(), canon) == seen.end()) {
            seen.push_back(canon);
            ++count;
          }
        }
  return count;
}

struct alpha_count {
  int exact;           // 4-part partitions of r+1
  double crude_bound;  // C(r,3)/24
};

inline alpha_count alpha_count_lower_bound(int r) {
  if (r < 3) throw std::domain_error("alpha families need r >= 3");
  int exact = 0;
  for (int p1 = 1; 4 * p1 <= r + 1; ++p1)
    for (int p2 = p1; p1 + 3 * p2 <= r + 1; ++p2)
      for (int p3 = p2; p1 + p2 + 2 * p3 <= r + 1; ++p3) {
        int p4 = r + 1 - p1 - p2 - p3;
        if (p4 >= p3) ++exact;
      }
  return {exact, static_cast<double>(binomial(r, 3)) / 24.0};
}

// All alpha tuples of a given rank: compositions (|A|,|B|,|D|,|E|) of r+1
// with C and F forced by the size identities.
inline std::vector<alpha_tuple> alpha_tuples_of_rank(int r) {
  std::vector<alpha_tuple> out;
  for (int a = 1; a < r; ++a)
    for (int b = 1; a + b < r + 1; ++b)
      for (int d = 1; a + b + d < r + 1; ++d) {
        int e = r + 1 - a - b - d;
        if (e < 1) continue;
        alpha_tuple t{a, b, r - a - b, d, e, r - d - e};
        if (t.c < 1 || t.f < 1) continue;
        t.check();
        out.push_back(t);
      }
  return out;
}

inline std::vector<beta_tuple> beta_tuples_of_k(int k) {
  std::vector<beta_tuple> out;
  for (int a = 1; a < k; ++a)
    for (int d = 1; d < k; ++d) out.push_back({k, a, k - a, d, k - d});
  return out;
}

}  // namespace baseorder
