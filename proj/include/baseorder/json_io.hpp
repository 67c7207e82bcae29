#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

#include "baseorder/critical.hpp"
#include "baseorder/exchange.hpp"

namespace baseorder {

using json = nlohmann::ordered_json;

// Interchange format:
//   { "ground": [labels...],
//     "cyclic_flats": [ { "set": [labels...], "rank": int } ... ] }
// Flats are sorted by (size, lexicographic member list) over the sorted
// label lists, so serialization is deterministic.
inline json matroid_to_json(const matroid& m) {
  json j;
  j["ground"] = m.ground().labels;
  std::vector<std::pair<std::vector<std::string>, int>> flats;
  for (const auto& f : m.presentation().flats) {
    std::vector<std::string> names;
    for (int e : f.set.members()) names.push_back(m.ground().label(e));
    std::sort(names.begin(), names.end());
    flats.emplace_back(std::move(names), f.rank);
  }
  std::sort(flats.begin(), flats.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  j["cyclic_flats"] = json::array();
  for (const auto& [names, rank] : flats)
    j["cyclic_flats"].push_back(json{{"set", names}, {"rank", rank}});
  return j;
}

inline matroid matroid_from_json(const json& j) {
  if (!j.contains("ground") || !j.contains("cyclic_flats"))
    throw std::domain_error("matroid JSON needs 'ground' and 'cyclic_flats'");
  ground_set g = ground_set::with_labels(j["ground"].get<std::vector<std::string>>());
  g.check();
  cyclic_flat_presentation p{g, {}};
  for (const auto& fj : j["cyclic_flats"]) {
    eset s;
    for (const auto& name : fj["set"].get<std::vector<std::string>>()) {
      auto idx = g.index_of(name);
      if (!idx) throw std::domain_error("flat uses unknown label: " + name);
      s = s.with(*idx);
    }
    p.flats.push_back({s, fj["rank"].get<int>()});
  }
  return matroid::from_presentation(std::move(p));
}

inline json critical_graph_to_json(const critical_graph& g) {
  json j;
  j["r"] = g.r;
  j["s"] = g.s;
  j["t"] = g.t;
  json rows = json::array();
  for (int i = 0; i < g.s; ++i) {
    json row = json::array();
    for (int jj = 0; jj < g.t; ++jj) row.push_back(g.edge_xy(i, jj));
    rows.push_back(std::move(row));
  }
  j["orientation"] = std::move(rows);
  return j;
}

inline critical_graph critical_graph_from_json(const json& j) {
  critical_graph g;
  g.r = j.at("r").get<int>();
  g.s = j.at("s").get<int>();
  g.t = j.at("t").get<int>();
  for (const auto& row : j.at("orientation")) {
    std::uint16_t bits = 0;
    int col = 0;
    for (const auto& cell : row) {
      if (cell.get<bool>()) bits |= static_cast<std::uint16_t>(1u << col);
      ++col;
    }
    if (col != g.t) throw std::domain_error("orientation row length mismatch");
    g.rows.push_back(bits);
  }
  g.check();
  return g;
}

inline json labels_of(const matroid& m, eset s) {
  json out = json::array();
  for (int e : s.members()) out.push_back(m.ground().label(e));
  return out;
}

inline json ordering_to_json(const matroid& m, const exchange_ordering& ord) {
  json j;
  j["strength"] = ord.strength;
  json pairs = json::array();
  for (auto [a, b] : ord.map)
    pairs.push_back(json::array({m.ground().label(a), m.ground().label(b)}));
  j["map"] = std::move(pairs);
  return j;
}

inline json blocking_to_json(const matroid& m, const blocking_subgraph& w) {
  return json{{"x_side", labels_of(m, w.x_side)}, {"y_side", labels_of(m, w.y_side)}};
}

inline json certificate_to_json(const matroid& m, const excluded_minor_certificate& c) {
  json j;
  j["property"] = c.property;
  j["fails_class"] = c.fails_class;
  j["is_excluded_minor"] = c.is_excluded_minor;
  j["one_sided_sufficient"] = c.one_sided_sufficient;
  json dels = json::array(), cons = json::array();
  for (const auto& v : c.deletions)
    dels.push_back(json{{"element", m.ground().label(v.element)}, {"passes", v.passes}});
  for (const auto& v : c.contractions)
    cons.push_back(json{{"element", m.ground().label(v.element)}, {"passes", v.passes}});
  j["deletions"] = std::move(dels);
  j["contractions"] = std::move(cons);
  return j;
}

}  // namespace baseorder
