#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "baseorder/sets.hpp"

namespace baseorder {

// A labeled ground set E = {0, ..., size-1}.
struct ground_set {
  int size = 0;
  std::vector<std::string> labels;  // one per element, pairwise distinct

  static ground_set unlabeled(int n) {
    ground_set g;
    g.size = n;
    g.labels.reserve(n);
    for (int i = 0; i < n; ++i) g.labels.push_back("e" + std::to_string(i + 1));
    return g;
  }

  static ground_set with_labels(std::vector<std::string> ls) {
    ground_set g;
    g.size = static_cast<int>(ls.size());
    g.labels = std::move(ls);
    return g;
  }

  eset universe() const { return eset::full(size); }

  const std::string& label(int i) const { return labels[i]; }

  std::optional<int> index_of(const std::string& l) const {
    for (int i = 0; i < size; ++i)
      if (labels[i] == l) return i;
    return std::nullopt;
  }

  void check() const {
    if (size < 0 || size > 64) throw std::domain_error("ground set size must be in [0, 64]");
    if (static_cast<int>(labels.size()) != size)
      throw std::domain_error("ground set needs one label per element");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels)
      if (!seen.insert(l).second) throw std::domain_error("duplicate ground set label: " + l);
  }
};

struct ranked_flat {
  eset set;
  int rank = 0;

  friend bool operator==(const ranked_flat& a, const ranked_flat& b) {
    return a.set == b.set && a.rank == b.rank;
  }
};

// A ranked set family intended to be the lattice of cyclic flats of a matroid.
struct cyclic_flat_presentation {
  ground_set ground;
  std::vector<ranked_flat> flats;

  // Canonical flat order: by size, then by member-list lex. Defines equality.
  void normalize() {
    std::sort(flats.begin(), flats.end(), [](const ranked_flat& a, const ranked_flat& b) {
      return size_lex_less(a.set, b.set);
    });
  }

  friend bool operator==(const cyclic_flat_presentation& a, const cyclic_flat_presentation& b) {
    return a.ground.size == b.ground.size && a.flats == b.flats;
  }
};

enum class axiom { ok, malformed, z0, z1, z2, z3 };

inline const char* axiom_name(axiom a) {
  switch (a) {
    case axiom::ok: return "ok";
    case axiom::malformed: return "malformed";
    case axiom::z0: return "Z0";
    case axiom::z1: return "Z1";
    case axiom::z2: return "Z2";
    case axiom::z3: return "Z3";
  }
  return "?";
}

struct validation_report {
  axiom code = axiom::ok;
  std::string message;
  eset witness_x{}, witness_y{};

  bool ok() const { return code == axiom::ok; }
};

// Greatest member of the family contained in x∩y, if one dominates all others.
inline std::optional<eset> family_meet(const std::vector<ranked_flat>& flats, eset x, eset y) {
  eset cap = x & y;
  bool found = false;
  eset best;
  for (const auto& f : flats) {
    if (!f.set.subset_of(cap)) continue;
    if (!found || best.subset_of(f.set)) {
      best = f.set;
      found = true;
    }
  }
  if (!found) return std::nullopt;
  for (const auto& f : flats)
    if (f.set.subset_of(cap) && !f.set.subset_of(best)) return std::nullopt;
  return best;
}

// Least member of the family containing x∪y, if one is below all others.
inline std::optional<eset> family_join(const std::vector<ranked_flat>& flats, eset x, eset y) {
  eset cup = x | y;
  bool found = false;
  eset best;
  for (const auto& f : flats) {
    if (!cup.subset_of(f.set)) continue;
    if (!found || f.set.subset_of(best)) {
      best = f.set;
      found = true;
    }
  }
  if (!found) return std::nullopt;
  for (const auto& f : flats)
    if (cup.subset_of(f.set) && !best.subset_of(f.set)) return std::nullopt;
  return best;
}

// Checks (Z0)-(Z3); malformed input (duplicates, rank out of range, sets
// outside the ground) is reported before the axiom sweep.
inline validation_report validate_presentation(const cyclic_flat_presentation& p) {
  validation_report rep;
  p.ground.check();
  eset universe = p.ground.universe();

  if (p.flats.empty()) {
    rep.code = axiom::malformed;
    rep.message = "presentation has no sets";
    return rep;
  }
  std::unordered_set<std::uint64_t> seen;
  for (const auto& f : p.flats) {
    if (!f.set.subset_of(universe)) {
      rep.code = axiom::malformed;
      rep.message = "set not contained in the ground set";
      rep.witness_x = f.set;
      return rep;
    }
    if (!seen.insert(f.set.bits).second) {
      rep.code = axiom::malformed;
      rep.message = "duplicate set";
      rep.witness_x = f.set;
      return rep;
    }
    if (f.rank < 0 || f.rank > f.set.size()) {
      rep.code = axiom::malformed;
      rep.message = "rank outside [0, |set|]";
      rep.witness_x = f.set;
      return rep;
    }
  }

  auto rank_of = [&](eset s) {
    for (const auto& f : p.flats)
      if (f.set == s) return f.rank;
    return -1;
  };

  const auto& fl = p.flats;
  int z = static_cast<int>(fl.size());

  // (Z0): every pair has a meet and a join within the family.
  for (int i = 0; i < z; ++i)
    for (int j = i + 1; j < z; ++j) {
      if (!family_join(fl, fl[i].set, fl[j].set) || !family_meet(fl, fl[i].set, fl[j].set)) {
        rep.code = axiom::z0;
        rep.message = "no unique meet/join within the family";
        rep.witness_x = fl[i].set;
        rep.witness_y = fl[j].set;
        return rep;
      }
    }

  // (Z1): the least element exists (guaranteed once Z0 holds) and has rank 0.
  eset least = fl[0].set;
  for (const auto& f : fl)
    if (f.set.subset_of(least)) least = f.set;
  for (const auto& f : fl) {
    if (!least.subset_of(f.set)) {
      rep.code = axiom::z0;
      rep.message = "family has no least element";
      rep.witness_x = least;
      rep.witness_y = f.set;
      return rep;
    }
  }
  if (rank_of(least) != 0) {
    rep.code = axiom::z1;
    rep.message = "least element has nonzero rank";
    rep.witness_x = least;
    return rep;
  }

  // (Z2): 0 < r(Y) - r(X) < |Y - X| for X strictly inside Y.
  for (int i = 0; i < z; ++i)
    for (int j = 0; j < z; ++j) {
      if (i == j) continue;
      eset x = fl[i].set, y = fl[j].set;
      if (!(x.subset_of(y) && x != y)) continue;
      int d = fl[j].rank - fl[i].rank;
      if (d <= 0 || d >= (y - x).size()) {
        rep.code = axiom::z2;
        rep.message = "rank/size gap violated";
        rep.witness_x = x;
        rep.witness_y = y;
        return rep;
      }
    }

  // (Z3): submodularity with slack for incomparable pairs.
  for (int i = 0; i < z; ++i)
    for (int j = i + 1; j < z; ++j) {
      eset x = fl[i].set, y = fl[j].set;
      if (x.subset_of(y) || y.subset_of(x)) continue;
      eset join = *family_join(fl, x, y);
      eset meet = *family_meet(fl, x, y);
      int lhs = fl[i].rank + fl[j].rank;
      int rhs = rank_of(join) + rank_of(meet) + ((x & y) - meet).size();
      if (lhs < rhs) {
        rep.code = axiom::z3;
        rep.message = "submodular-with-slack inequality violated";
        rep.witness_x = x;
        rep.witness_y = y;
        return rep;
      }
    }

  return rep;
}

}  // namespace baseorder
