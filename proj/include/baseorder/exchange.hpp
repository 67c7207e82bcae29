#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "baseorder/ops.hpp"

namespace baseorder {

// Basis-exchange digraph of bases A and B: (a,b) is an edge iff (B-b)+a is
// not a basis, (b,a) iff (A-a)+b is not a basis. Vertices are positions into
// the sorted element lists, so shared elements act as disjoint copies.
struct exchange_digraph {
  eset basis_a, basis_b;
  std::vector<int> a_elems, b_elems;
  std::vector<std::uint32_t> edges_ab;  // per a-position, b-positions hit
  std::vector<std::uint32_t> edges_ba;  // per b-position, a-positions hit

  bool edge_ab(int i, int j) const { return (edges_ab[i] >> j) & 1; }
  bool edge_ba(int j, int i) const { return (edges_ba[j] >> i) & 1; }
  int rank() const { return static_cast<int>(a_elems.size()); }
};

// The unique circuit inside basis+e, for e outside the basis.
inline eset fundamental_circuit(const matroid& m, int e, eset basis) {
  if (basis.contains(e)) throw std::domain_error("element already in the basis");
  eset c = eset::single(e);
  for (int b : basis.members())
    if (m.is_basis(basis.without(b).with(e))) c = c.with(b);
  return c;
}

inline exchange_digraph build_exchange_digraph(const matroid& m, eset a, eset b) {
  if (!m.is_basis(a) || !m.is_basis(b)) throw std::domain_error("exchange digraph needs bases");
  if (m.rank() > 32) throw budget_error("exchange digraphs limited to rank 32");
  exchange_digraph d;
  d.basis_a = a;
  d.basis_b = b;
  d.a_elems = a.members();
  d.b_elems = b.members();
  int r = d.rank();
  d.edges_ab.assign(r, 0);
  d.edges_ba.assign(r, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      eset swap_b = b.without(d.b_elems[j]).with(d.a_elems[i]);
      eset swap_a = a.without(d.a_elems[i]).with(d.b_elems[j]);
      if (!m.is_basis(swap_b)) d.edges_ab[i] |= 1u << j;
      if (!m.is_basis(swap_a)) d.edges_ba[j] |= 1u << i;
    }
  return d;
}

// Bijection between two bases, stored as (element of A, element of B) pairs
// in ascending A order; strength is the k it was verified at.
struct exchange_ordering {
  std::vector<std::pair<int, int>> map;
  int strength = 1;

  int image_of(int x) const {
    for (auto [a, b] : map)
      if (a == x) return b;
    return -1;
  }
};

// Hall witness: x_side in A, y_side in B, |x|+|y| = r+1, each side >= 2,
// every cross pair carrying a directed edge of the exchange digraph.
struct blocking_subgraph {
  eset x_side, y_side;
};

struct ordering_search_result {
  bool found = false;
  exchange_ordering ordering;   // meaningful iff found
  blocking_subgraph blocking;   // meaningful iff !found
};

namespace detail {

struct pair_frame {
  std::vector<int> xs, ys;            // a-b and b-a element lists, ascending
  std::vector<std::uint32_t> compat;  // per xs position, admissible ys positions
};

inline pair_frame make_pair_frame(const matroid& m, eset a, eset b) {
  pair_frame f;
  f.xs = (a - b).members();
  f.ys = (b - a).members();
  int d = static_cast<int>(f.xs.size());
  f.compat.assign(d, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      std::uint64_t to_b = (b.bits & ~(1ull << f.ys[j])) | (1ull << f.xs[i]);
      std::uint64_t to_a = (a.bits & ~(1ull << f.xs[i])) | (1ull << f.ys[j]);
      if (m.basis_fast(to_b) && m.basis_fast(to_a)) f.compat[i] |= 1u << j;
    }
  return f;
}

// Kuhn augmenting-path matching over the compat graph; deterministic order.
struct matching {
  std::vector<int> match_x, match_y;
  int size = 0;

  explicit matching(const pair_frame& f) {
    int d = static_cast<int>(f.xs.size());
    match_x.assign(d, -1);
    match_y.assign(d, -1);
    std::vector<bool> seen(d);
    std::function<bool(int)> augment = [&](int i) {
      for (std::uint32_t c = f.compat[i]; c; c &= c - 1) {
        int j = std::countr_zero(c);
        if (seen[j]) continue;
        seen[j] = true;
        if (match_y[j] < 0 || augment(match_y[j])) {
          match_x[i] = j;
          match_y[j] = i;
          return true;
        }
      }
      return false;
    };
    for (int i = 0; i < d; ++i) {
      std::fill(seen.begin(), seen.end(), false);
      if (augment(i)) ++size;
    }
  }
};

}  // namespace detail

// Matching-based search for a 1-exchange-ordering between bases a and b.
// Returns an ordering from a perfect matching of the compatibility graph, or
// a blocking subgraph from a minimal Hall violator.
inline ordering_search_result has_exchange_ordering(const matroid& m, eset a, eset b) {
  if (!m.is_basis(a) || !m.is_basis(b)) throw std::domain_error("exchange-ordering needs bases");
  auto f = detail::make_pair_frame(m, a, b);
  int d = static_cast<int>(f.xs.size());
  detail::matching match(f);
  ordering_search_result res;
  if (match.size == d) {
    res.found = true;
    res.ordering.strength = 1;
    for (int e : (a & b).members()) res.ordering.map.emplace_back(e, e);
    for (int i = 0; i < d; ++i)
      res.ordering.map.emplace_back(f.xs[i], f.ys[match.match_x[i]]);
    std::sort(res.ordering.map.begin(), res.ordering.map.end());
    return res;
  }
  // minimal Hall violator grown from the lowest unmatched vertex
  int start = 0;
  while (match.match_x[start] >= 0) ++start;
  std::uint32_t xset = 1u << start, yset = 0;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::uint32_t xs = xset; xs; xs &= xs - 1) {
      std::uint32_t add = f.compat[std::countr_zero(xs)] & ~yset;
      if (add) {
        yset |= add;
        grew = true;
      }
    }
    for (std::uint32_t ys = yset; ys; ys &= ys - 1) {
      int i = match.match_y[std::countr_zero(ys)];
      if (i >= 0 && !((xset >> i) & 1)) {
        xset |= 1u << i;
        grew = true;
      }
    }
  }
  eset xs_elems, not_covered = b;
  for (std::uint32_t s = xset; s; s &= s - 1) xs_elems = xs_elems.with(f.xs[std::countr_zero(s)]);
  for (std::uint32_t s = yset; s; s &= s - 1)
    not_covered = not_covered.without(f.ys[std::countr_zero(s)]);
  res.found = false;
  res.blocking = {xs_elems, not_covered};
  return res;
}

// Re-check an ordering at strength k directly against the definition.
inline bool verify_exchange_ordering(const matroid& m, eset a, eset b,
                                     const exchange_ordering& ord, int k) {
  if (ord.map.size() != static_cast<std::size_t>(a.size())) return false;
  eset seen_a, seen_b;
  for (auto [x, y] : ord.map) {
    if (!a.contains(x) || !b.contains(y)) return false;
    seen_a = seen_a.with(x);
    seen_b = seen_b.with(y);
    if (b.contains(x) && y != x) return false;  // must fix a∩b pointwise
  }
  if (seen_a != a || seen_b != b) return false;

  std::vector<std::pair<int, int>> moved;
  for (auto [x, y] : ord.map)
    if (x != y) moved.emplace_back(x, y);
  int d = static_cast<int>(moved.size());
  for (std::uint32_t sub = 1; sub < (1u << d); ++sub) {
    if (std::popcount(sub) > k) continue;
    std::uint64_t am = a.bits, bm = b.bits;
    for (std::uint32_t s = sub; s; s &= s - 1) {
      auto [x, y] = moved[std::countr_zero(s)];
      am = (am & ~(1ull << x)) | (1ull << y);
      bm = (bm & ~(1ull << y)) | (1ull << x);
    }
    if (!m.basis_fast(am) || !m.basis_fast(bm)) return false;
  }
  return true;
}

// Re-check a blocking subgraph against its invariants.
inline bool verify_blocking(const matroid& m, eset a, eset b, const blocking_subgraph& w) {
  if (!w.x_side.subset_of(a) || !w.y_side.subset_of(b)) return false;
  int r = m.rank();
  if (w.x_side.size() + w.y_side.size() != r + 1) return false;
  if (w.x_side.size() < 2 || w.y_side.size() < 2) return false;
  for (int x : w.x_side.members())
    for (int y : w.y_side.members()) {
      bool ab = !m.is_basis(b.without(y).with(x));
      bool ba = !m.is_basis(a.without(x).with(y));
      if (!ab && !ba) return false;  // a compatible cross pair breaks the witness
    }
  return true;
}

// Backtracking search for a k-exchange-ordering. Elements of a-b take images
// in ascending order, with every newly completed subset of size <= k verified
// on both sides; a∩b is fixed pointwise.
inline std::optional<exchange_ordering> find_k_exchange_ordering(const matroid& m, eset a,
                                                                 eset b, int k) {
  if (!m.is_basis(a) || !m.is_basis(b)) throw std::domain_error("exchange-ordering needs bases");
  if (k < 1 || k > std::max(1, m.rank()))
    throw std::domain_error("ordering strength out of range");
  auto f = detail::make_pair_frame(m, a, b);
  int d = static_cast<int>(f.xs.size());

  std::vector<int> choice(d, -1);
  std::uint32_t used = 0;
  std::vector<std::uint64_t> xbit(d), ybit(d);
  for (int i = 0; i < d; ++i) xbit[i] = 1ull << f.xs[i];
  for (int j = 0; j < d; ++j) ybit[j] = 1ull << f.ys[j];

  std::function<bool(int)> place = [&](int i) -> bool {
    if (i == d) return true;
    for (std::uint32_t c = f.compat[i] & ~used; c; c &= c - 1) {
      int j = std::countr_zero(c);
      choice[i] = j;
      bool ok = true;
      // subsets of {0..i} containing i, of size <= k (singletons are compat)
      for (std::uint32_t sub = 0; ok && sub < (1u << i); ++sub) {
        if (sub == 0 || std::popcount(sub) + 1 > k) continue;
        std::uint64_t am = a.bits, bm = b.bits;
        for (std::uint32_t s = sub | (1u << i); s; s &= s - 1) {
          int t = std::countr_zero(s);
          am = (am & ~xbit[t]) | ybit[choice[t]];
          bm = (bm & ~ybit[choice[t]]) | xbit[t];
        }
        if (!m.basis_fast(am) || !m.basis_fast(bm)) ok = false;
      }
      if (ok) {
        used |= 1u << j;
        if (place(i + 1)) return true;
        used &= ~(1u << j);
      }
    }
    choice[i] = -1;
    return false;
  };
  if (!place(0)) return std::nullopt;

  exchange_ordering ord;
  ord.strength = k;
  for (int e : (a & b).members()) ord.map.emplace_back(e, e);
  for (int i = 0; i < d; ++i) ord.map.emplace_back(f.xs[i], f.ys[choice[i]]);
  std::sort(ord.map.begin(), ord.map.end());
  return ord;
}

struct classifier_result {
  bool verdict = true;
  eset fail_a, fail_b;                         // first failing pair when false
  std::optional<blocking_subgraph> blocking;   // for the matching-based check

  explicit operator bool() const { return verdict; }
};

// BO: every basis pair has an exchange-ordering; pairs scanned in
// lexicographic order, unordered pairs once.
inline classifier_result check_base_orderable(const matroid& m) {
  const auto& bs = m.bases();
  classifier_result res;
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t j = i + 1; j < bs.size(); ++j) {
      if ((bs[i] ^ bs[j]).size() <= 2) continue;  // one symmetric swap, always orderable
      auto r = has_exchange_ordering(m, bs[i], bs[j]);
      if (!r.found) {
        res.verdict = false;
        res.fail_a = bs[i];
        res.fail_b = bs[j];
        res.blocking = r.blocking;
        return res;
      }
    }
  return res;
}

inline classifier_result check_k_base_orderable(const matroid& m, int k) {
  if (k < 1) throw std::domain_error("k must be positive");
  if (m.rank() == 0) return {};
  int kk = std::min(k, m.rank());
  const auto& bs = m.bases();
  classifier_result res;
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t j = i + 1; j < bs.size(); ++j) {
      if ((bs[i] ^ bs[j]).size() <= 2) continue;
      if (!find_k_exchange_ordering(m, bs[i], bs[j], kk)) {
        res.verdict = false;
        res.fail_a = bs[i];
        res.fail_b = bs[j];
        return res;
      }
    }
  return res;
}

// SBO via the half-rank shortcut: ceil(r/2)-orderability suffices.
inline classifier_result check_strongly_base_orderable(const matroid& m) {
  int r = m.rank();
  if (r == 0) return {};
  return check_k_base_orderable(m, (r + 1) / 2);
}

inline bool is_base_orderable(const matroid& m) { return check_base_orderable(m).verdict; }
inline bool is_k_base_orderable(const matroid& m, int k) {
  return check_k_base_orderable(m, k).verdict;
}
inline bool is_strongly_base_orderable(const matroid& m) {
  return check_strongly_base_orderable(m).verdict;
}

namespace detail {

// One-sided (k,l) search for the ordered pair (a, b). With l >= 1 the
// co-small subsets force a∩b to be fixed, so the search runs on a-b; with
// l = 0 all bijections are admissible.
inline bool exists_kl_ordering(const matroid& m, eset a, eset b, int k, int l) {
  int r = m.rank();
  if (l >= 1) {
    pair_frame f;
    f.xs = (a - b).members();
    f.ys = (b - a).members();
    int d = static_cast<int>(f.xs.size());
    std::vector<std::uint64_t> xbit(d), ybit(d);
    for (int i = 0; i < d; ++i) xbit[i] = 1ull << f.xs[i];
    for (int j = 0; j < d; ++j) ybit[j] = 1ull << f.ys[j];
    // one-sided admissibility; with k = 0 singletons are unconstrained
    std::vector<std::uint32_t> adm(d, 0);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (k == 0 || m.basis_fast((a.bits & ~xbit[i]) | ybit[j])) adm[i] |= 1u << j;

    std::vector<int> choice(d, -1);
    std::uint32_t used = 0;
    auto subset_ok = [&](std::uint32_t sub) {
      std::uint64_t am = a.bits;
      for (std::uint32_t s = sub; s; s &= s - 1) {
        int t = std::countr_zero(s);
        am = (am & ~xbit[t]) | ybit[choice[t]];
      }
      return m.basis_fast(am);
    };
    std::function<bool(int)> place = [&](int i) -> bool {
      if (i == d) {
        for (std::uint32_t sub = 0; sub < (1u << d); ++sub) {
          int c = std::popcount(sub);
          if ((c <= k || c >= d - l) && !subset_ok(sub)) return false;
        }
        return true;
      }
      for (std::uint32_t c = adm[i] & ~used; c; c &= c - 1) {
        int j = std::countr_zero(c);
        choice[i] = j;
        bool ok = true;
        for (std::uint32_t sub = 0; ok && sub < (1u << i); ++sub) {
          if (std::popcount(sub) + 1 > k) continue;
          if (!subset_ok(sub | (1u << i))) ok = false;
        }
        if (ok) {
          used |= 1u << j;
          if (place(i + 1)) return true;
          used &= ~(1u << j);
        }
      }
      choice[i] = -1;
      return false;
    };
    return place(0);
  }

  // l == 0: nothing pins shared elements, search all bijections a -> b
  auto as = a.members();
  auto bs = b.members();
  std::vector<std::uint64_t> abit(r), bbit(r);
  for (int i = 0; i < r; ++i) abit[i] = 1ull << as[i];
  for (int j = 0; j < r; ++j) bbit[j] = 1ull << bs[j];
  std::vector<int> choice(r, -1);
  std::uint32_t used = 0;
  auto subset_ok = [&](std::uint32_t sub) {
    std::uint64_t am = a.bits;
    for (std::uint32_t s = sub; s; s &= s - 1) {
      int t = std::countr_zero(s);
      am = am & ~abit[t];
    }
    for (std::uint32_t s = sub; s; s &= s - 1) {
      int t = std::countr_zero(s);
      am = am | bbit[choice[t]];
    }
    return m.basis_fast(am);
  };
  std::function<bool(int)> place = [&](int i) -> bool {
    if (i == r) return true;
    for (int j = 0; j < r; ++j) {
      if ((used >> j) & 1) continue;
      choice[i] = j;
      bool ok = true;
      for (std::uint32_t sub = 0; ok && sub < (1u << i); ++sub) {
        if (std::popcount(sub) + 1 > k) continue;
        if (!subset_ok(sub | (1u << i))) ok = false;
      }
      if (ok) {
        used |= 1u << j;
        if (place(i + 1)) return true;
        used &= ~(1u << j);
      }
    }
    choice[i] = -1;
    return false;
  };
  return place(0);
}

}  // namespace detail

// (k,l)-base-orderability: a bijection valid for |X| <= k or |X| >= r-l with
// only the (B1-X)+sigma(X) side required.
inline classifier_result check_kl_base_orderable(const matroid& m, int k, int l) {
  int r = m.rank();
  if (k < 0 || l < 0 || k > r || l > r || k + l == 0)
    throw std::domain_error("(k,l) parameters out of range");
  if (r == 0) return {};
  const auto& bs = m.bases();
  classifier_result res;
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t j = i + 1; j < bs.size(); ++j) {
      bool ok = detail::exists_kl_ordering(m, bs[i], bs[j], k, l);
      if (ok && k != l) ok = detail::exists_kl_ordering(m, bs[i], bs[j], l, k);
      if (!ok) {
        res.verdict = false;
        res.fail_a = bs[i];
        res.fail_b = bs[j];
        return res;
      }
    }
  return res;
}

inline bool is_kl_base_orderable(const matroid& m, int k, int l) {
  return check_kl_base_orderable(m, k, l).verdict;
}

// Minor of m on the disjoint union of a witness pair of bases with no
// k-exchange-ordering: m / (A∩B) \ (E - (A∪B)).
struct nonorderable_reduction {
  matroid reduced;
  eset basis_a, basis_b;  // in the minor's indices
};

inline nonorderable_reduction reduce_nonorderable_pair(const matroid& m, int k) {
  auto res = check_k_base_orderable(m, k);
  if (res.verdict) throw std::domain_error("matroid is k-base-orderable, nothing to reduce");
  eset shared = res.fail_a & res.fail_b;
  eset outside = m.universe() - (res.fail_a | res.fail_b);
  matroid red = minor(m, shared, outside);
  // map surviving elements to minor indices
  eset keep = m.universe() - shared - outside;
  eset na, nb;
  int pos = 0;
  for (int e : keep.members()) {
    if ((res.fail_a - shared).contains(e)) na = na.with(pos);
    if ((res.fail_b - shared).contains(e)) nb = nb.with(pos);
    ++pos;
  }
  return {std::move(red), na, nb};
}

struct minor_verdict {
  int element;
  bool passes;
};

// Evidence that m is an excluded minor for a minor-closed class: m fails the
// class test while every single-element deletion and contraction passes.
struct excluded_minor_certificate {
  std::string property;
  bool fails_class = false;
  std::vector<minor_verdict> deletions, contractions;
  bool all_deletions_pass = true;
  bool all_contractions_pass = true;
  bool is_excluded_minor = false;
  bool one_sided_sufficient = false;  // |E| = 2r and one side passes uniformly
};

inline excluded_minor_certificate certify_excluded_minor(
    const matroid& m, std::string property, const std::function<bool(const matroid&)>& in_class) {
  excluded_minor_certificate cert;
  cert.property = std::move(property);
  cert.fails_class = !in_class(m);
  for (int e = 0; e < m.ground_size(); ++e) {
    bool d = in_class(deletion(m, eset::single(e)));
    bool c = in_class(contraction(m, eset::single(e)));
    cert.deletions.push_back({e, d});
    cert.contractions.push_back({e, c});
    cert.all_deletions_pass &= d;
    cert.all_contractions_pass &= c;
  }
  cert.is_excluded_minor =
      cert.fails_class && cert.all_deletions_pass && cert.all_contractions_pass;
  cert.one_sided_sufficient = cert.fails_class && m.ground_size() == 2 * m.rank() &&
                              (cert.all_deletions_pass || cert.all_contractions_pass);
  return cert;
}

// Source/sink escape hatch: when the blocking subgraph of a disjoint spanning
// basis pair has a source or sink, a one-step-smaller non-base-orderable
// minor exists, so m is not an excluded minor for BO. Returns that minor with
// the inherited basis pair, or nullopt when no source or sink exists.
inline std::optional<nonorderable_reduction> source_sink_reduction(
    const matroid& m, eset a, eset b, const blocking_subgraph& w) {
  if (!(a & b).is_empty() || (a | b) != m.universe())
    throw std::domain_error("reduction expects disjoint spanning bases");
  if (!m.is_basis(a) || !m.is_basis(b)) throw std::domain_error("reduction expects bases");

  auto all_edges_from_x = [&](int x) {
    for (int y : w.y_side.members())
      if (m.is_basis(b.without(y).with(x))) return false;  // (x,y) missing
    return true;
  };
  auto all_edges_to_x = [&](int x) {
    for (int y : w.y_side.members())
      if (m.is_basis(a.without(x).with(y))) return false;  // (y,x) missing
    return true;
  };
  auto all_edges_from_y = [&](int y) {
    for (int x : w.x_side.members())
      if (m.is_basis(a.without(x).with(y))) return false;
    return true;
  };
  auto all_edges_to_y = [&](int y) {
    for (int x : w.x_side.members())
      if (m.is_basis(b.without(y).with(x))) return false;
    return true;
  };

  auto take_minor = [&](const matroid& host, eset ha, eset hb, int con,
                        int del) -> nonorderable_reduction {
    matroid red = minor(host, eset::single(con), eset::single(del));
    eset keep = host.universe().without(con).without(del);
    eset na, nb;
    int pos = 0;
    for (int e : keep.members()) {
      if (ha.contains(e) && e != con) na = na.with(pos);
      if (hb.contains(e) && e != del) nb = nb.with(pos);
      ++pos;
    }
    return {std::move(red), na, nb};
  };

  // source on the A side: contract it, delete a fundamental-circuit partner
  for (int x : w.x_side.members())
    if (all_edges_from_x(x)) {
      eset partners = fundamental_circuit(m, x, b).without(x);
      return take_minor(m, a, b, x, partners.lowest());
    }
  // sink on the A side: the dual turns it into a source
  for (int x : w.x_side.members())
    if (all_edges_to_x(x)) {
      matroid md = dual(m);
      eset partners = fundamental_circuit(md, x, b).without(x);
      auto red = take_minor(md, a, b, x, partners.lowest());
      return nonorderable_reduction{dual(red.reduced), red.basis_a, red.basis_b};
    }
  // source on the B side
  for (int y : w.y_side.members())
    if (all_edges_from_y(y)) {
      eset partners = fundamental_circuit(m, y, a).without(y);
      return take_minor(m, b, a, y, partners.lowest());
    }
  // sink on the B side
  for (int y : w.y_side.members())
    if (all_edges_to_y(y)) {
      matroid md = dual(m);
      eset partners = fundamental_circuit(md, y, a).without(y);
      auto red = take_minor(md, b, a, y, partners.lowest());
      return nonorderable_reduction{dual(red.reduced), red.basis_a, red.basis_b};
    }
  return std::nullopt;
}

}  // namespace baseorder
