#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "baseorder/presentation.hpp"

namespace baseorder {

// Matroid given by a validated cyclic-flat presentation. All queries go
// through the rank formula min{r(A) + |X-A| : A presented}. Values are
// immutable; the only mutable state is the derived-data cache, which is safe
// for concurrent readers.
class matroid {
 public:
  matroid() : matroid(from_presentation({ground_set::unlabeled(0), {{eset{}, 0}}})) {}

  static matroid from_presentation(cyclic_flat_presentation p) {
    auto rep = validate_presentation(p);
    if (!rep.ok())
      throw std::domain_error(std::string("invalid presentation: axiom ") +
                              axiom_name(rep.code) + ": " + rep.message);
    p.normalize();
    return matroid(std::move(p));
  }

  const cyclic_flat_presentation& presentation() const { return pres_; }
  const ground_set& ground() const { return pres_.ground; }
  int ground_size() const { return pres_.ground.size; }
  eset universe() const { return pres_.ground.universe(); }

  // Rank by the cyclic-flat formula; memoized per subset.
  int rank(eset x) const {
    if (!x.subset_of(universe())) throw std::domain_error("rank query outside the ground set");
    {
      std::lock_guard<std::mutex> lock(cache_->mu);
      auto it = cache_->memo.find(x.bits);
      if (it != cache_->memo.end()) return it->second;
    }
    int r = rank_uncached(x);
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->memo.emplace(x.bits, r);
    return r;
  }

  int rank() const {
    if (cache_->full_rank < 0) cache_->full_rank = rank(universe());
    return cache_->full_rank;
  }

  bool is_independent(eset x) const { return rank(x) == x.size(); }
  bool is_spanning(eset x) const { return rank(x) == rank(); }
  bool is_basis(eset x) const { return x.size() == rank() && rank(x) == x.size(); }

  // O(1) basis membership against the prebuilt bitmap; mask must be a subset
  // of the ground set. Intended for exchange-search inner loops.
  bool basis_fast(std::uint64_t mask) const {
    ensure_bases();
    return (cache_->basis_bitmap[mask >> 6] >> (mask & 63)) & 1;
  }

  // All bases, in member-list lexicographic order.
  const std::vector<eset>& bases() const {
    ensure_bases();
    return cache_->bases;
  }

  eset closure(eset x) const {
    int r = rank(x);
    eset cl = x;
    eset rest = universe() - x;
    for (int e : rest.members())
      if (rank(x.with(e)) == r) cl = cl.with(e);
    return cl;
  }

  eset loops() const { return closure(eset{}); }
  eset coloops() const {
    eset out;
    int r = rank();
    for (int e = 0; e < ground_size(); ++e)
      if (rank(universe().without(e)) == r - 1) out = out.with(e);
    return out;
  }

  bool is_flat(eset x) const { return closure(x) == x; }
  bool is_hyperplane(eset x) const { return is_flat(x) && rank(x) == rank() - 1; }

  bool is_circuit(eset x) const {
    if (x.is_empty() || rank(x) != x.size() - 1) return false;
    for (int e : x.members())
      if (!is_independent(x.without(e))) return false;
    return true;
  }

  // Every circuit of size <= maxsize, smallest first, lex within a size.
  std::vector<eset> circuits_up_to(int maxsize) const {
    std::vector<eset> out;
    int n = ground_size();
    for (int k = 1; k <= std::min(maxsize, n); ++k) {
      for_each_combination(n, k, [&](eset s) {
        if (rank(s) != k - 1) return;
        for (int e : s.members())
          if (!is_independent(s.without(e))) return;
        out.push_back(s);
      });
    }
    return out;
  }

  bool is_paving() const {
    int r = rank();
    if (r <= 1) return true;
    bool ok = true;
    for_each_combination(ground_size(), r - 1, [&](eset s) {
      if (ok && !is_independent(s)) ok = false;
    });
    return ok;
  }

  bool is_circuit_hyperplane(eset x) const { return is_circuit(x) && is_hyperplane(x); }

  // Equality is extensional: same ground size and identical normalized
  // presentations (labels are provenance, not identity).
  friend bool operator==(const matroid& a, const matroid& b) {
    return a.pres_.ground.size == b.pres_.ground.size && a.pres_.flats == b.pres_.flats;
  }
  friend bool operator!=(const matroid& a, const matroid& b) { return !(a == b); }

 private:
  explicit matroid(cyclic_flat_presentation p)
      : pres_(std::move(p)), cache_(std::make_shared<cache_t>()) {
    flat_masks_.reserve(pres_.flats.size());
    flat_ranks_.reserve(pres_.flats.size());
    for (const auto& f : pres_.flats) {
      flat_masks_.push_back(f.set.bits);
      flat_ranks_.push_back(f.rank);
    }
  }

  int rank_uncached(eset x) const {
    int best = x.size();  // the least element has rank 0
    for (std::size_t i = 0; i < flat_masks_.size(); ++i) {
      int v = flat_ranks_[i] + std::popcount(x.bits & ~flat_masks_[i]);
      if (v < best) best = v;
    }
    return best;
  }

  void ensure_bases() const {
    std::call_once(cache_->bases_once, [this] {
      int n = ground_size();
      if (n > 28) throw budget_error("basis enumeration limited to 28 elements");
      int r = rank(universe());
      cache_->full_rank = r;
      cache_->basis_bitmap.assign((std::size_t{1} << n) / 64 + 1, 0);
      for_each_combination(n, r, [&](eset s) {
        if (rank_uncached(s) == r) {
          cache_->bases.push_back(s);
          cache_->basis_bitmap[s.bits >> 6] |= 1ull << (s.bits & 63);
        }
      });
    });
  }

  struct cache_t {
    std::mutex mu;
    std::unordered_map<std::uint64_t, int> memo;
    std::once_flag bases_once;
    std::vector<eset> bases;
    std::vector<std::uint64_t> basis_bitmap;
    int full_rank = -1;
  };

  cyclic_flat_presentation pres_;
  std::vector<std::uint64_t> flat_masks_;
  std::vector<int> flat_ranks_;
  std::shared_ptr<cache_t> cache_;
};

inline matroid uniform_matroid(int r, int n) {
  if (r < 0 || r > n) throw std::domain_error("uniform matroid needs 0 <= r <= n");
  cyclic_flat_presentation p{ground_set::unlabeled(n), {}};
  if (r == 0) {
    p.flats.push_back({eset::full(n), 0});
  } else {
    p.flats.push_back({eset{}, 0});
    if (r < n) p.flats.push_back({eset::full(n), r});
  }
  return matroid::from_presentation(std::move(p));
}

inline matroid free_matroid(int n) { return uniform_matroid(n, n); }

// Recovers the cyclic-flat presentation of the matroid whose rank function is
// `rank_fn`, by sweeping all subsets. The oracle must be matroidal.
inline matroid matroid_from_rank_fn(const ground_set& g,
                                    const std::function<int(eset)>& rank_fn) {
  g.check();
  int n = g.size;
  if (n > 20) throw budget_error("rank-oracle sweep limited to 20 elements");
  std::size_t total = std::size_t{1} << n;
  std::vector<std::int8_t> table(total);
  for (std::size_t s = 0; s < total; ++s) table[s] = static_cast<std::int8_t>(rank_fn(eset{s}));

  cyclic_flat_presentation p{g, {}};
  for (std::size_t s = 0; s < total; ++s) {
    int r = table[s];
    bool cyclic_flat = true;
    for (int e = 0; e < n && cyclic_flat; ++e) {
      if ((s >> e) & 1) {
        if (table[s & ~(std::size_t{1} << e)] != r) cyclic_flat = false;  // coloop in M|S
      } else {
        if (table[s | (std::size_t{1} << e)] == r) cyclic_flat = false;  // not closed
      }
    }
    if (cyclic_flat) p.flats.push_back({eset{s}, r});
  }
  auto rep = validate_presentation(p);
  if (!rep.ok())
    throw std::logic_error(std::string("rank oracle is not matroidal: axiom ") +
                           axiom_name(rep.code));
  matroid m = matroid::from_presentation(std::move(p));
  // The sweep is only correct if the oracle really was the rank function of
  // the recovered presentation.
  for (std::size_t s = 0; s < total; s += 97)
    if (m.rank(eset{s}) != table[s]) throw std::logic_error("rank oracle mismatch after sweep");
  return m;
}

}  // namespace baseorder
