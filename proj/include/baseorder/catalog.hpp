#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "baseorder/families.hpp"
#include "baseorder/isomorphism.hpp"
#include "baseorder/json_io.hpp"
#include "baseorder/parallel.hpp"
#include "baseorder/table1.hpp"

namespace baseorder {

// One persisted matroid: stable id, presentation, construction recipe, and
// cached property verdicts.
struct catalog_record {
  std::string id;  // canonical hash of the normalized presentation
  matroid m;
  json provenance;
  std::map<std::string, bool> verdicts;
};

inline json record_to_json(const catalog_record& rec) {
  json j;
  j["id"] = rec.id;
  j["provenance"] = rec.provenance;
  j["matroid"] = matroid_to_json(rec.m);
  j["verdicts"] = rec.verdicts;
  return j;
}

inline catalog_record record_from_json(const json& j) {
  catalog_record rec;
  rec.id = j.at("id").get<std::string>();
  rec.provenance = j.at("provenance");
  rec.m = matroid_from_json(j.at("matroid"));
  for (auto it = j.at("verdicts").begin(); it != j.at("verdicts").end(); ++it)
    rec.verdicts[it.key()] = it.value().get<bool>();
  if (canonical_hash(rec.m) != rec.id) throw std::domain_error("catalog id fails re-hash");
  return rec;
}

inline void compute_verdicts(catalog_record& rec) {
  rec.verdicts["bo"] = is_base_orderable(rec.m);
  rec.verdicts["sbo"] = is_strongly_base_orderable(rec.m);
  rec.verdicts["transversal"] = is_transversal(rec.m);
  rec.verdicts["paving"] = rec.m.is_paving();
  rec.verdicts["sparse-paving"] = is_sparse_paving(rec.m);
}

// The default build: every M(Delta) with r <= 6, every M_alpha with r <= 5,
// and every M_beta with k <= 3, with verdicts computed. Distinct recipes can
// produce the same presentation (the all-singleton alpha tuple is literally
// M(Delta_3)); such records share one id and their provenances merge.
inline std::vector<catalog_record> standard_catalog(unsigned jobs) {
  std::vector<catalog_record> recs;
  for (int r = 3; r <= 6; ++r) {
    for (const auto& g : enumerate_critical_graphs(r)) {
      catalog_record rec{"", build_m_delta(g), json(), {}};
      rec.provenance = json{{"family", "mdelta"}, {"graph", critical_graph_to_json(g)}};
      recs.push_back(std::move(rec));
    }
  }
  for (int r = 3; r <= 5; ++r) {
    for (const auto& t : alpha_tuples_of_rank(r)) {
      catalog_record rec{"", build_m_alpha(t), json(), {}};
      rec.provenance =
          json{{"family", "malpha"}, {"sizes", json::array({t.a, t.b, t.c, t.d, t.e, t.f})}};
      recs.push_back(std::move(rec));
    }
  }
  for (int k = 2; k <= 3; ++k) {
    for (const auto& t : beta_tuples_of_k(k)) {
      catalog_record rec{"", build_m_beta(t), json(), {}};
      rec.provenance =
          json{{"family", "mbeta"}, {"k", t.k}, {"sizes", json::array({t.a, t.b, t.d, t.e})}};
      recs.push_back(std::move(rec));
    }
  }
  std::vector<catalog_record> merged;
  for (auto& rec : recs) {
    rec.id = canonical_hash(rec.m);
    catalog_record* hit = nullptr;
    for (auto& seen : merged)
      if (seen.id == rec.id) hit = &seen;
    if (hit) {
      hit->provenance.push_back(rec.provenance);
    } else {
      json recipe = rec.provenance;
      rec.provenance = json::array();
      rec.provenance.push_back(std::move(recipe));
      merged.push_back(std::move(rec));
    }
  }
  parallel_for(merged.size(), jobs, [&](std::size_t i) { compute_verdicts(merged[i]); });
  return merged;
}

// Directory layout: one <id>.json per record plus index.json listing ids in
// a fixed order, so two runs can be compared with standard diff tools.
inline void write_catalog(const std::filesystem::path& dir,
                          const std::vector<catalog_record>& recs) {
  std::filesystem::create_directories(dir);
  json index = json::array();
  for (const auto& rec : recs) {
    std::ofstream out(dir / (rec.id + ".json"));
    if (!out) throw std::runtime_error("cannot write catalog record " + rec.id);
    out << record_to_json(rec).dump(2) << "\n";
    index.push_back(json{{"id", rec.id}, {"provenance", rec.provenance}});
  }
  std::ofstream out(dir / "index.json");
  if (!out) throw std::runtime_error("cannot write catalog index");
  out << index.dump(2) << "\n";
}

inline std::vector<catalog_record> read_catalog(const std::filesystem::path& dir) {
  std::ifstream in(dir / "index.json");
  if (!in) throw std::runtime_error("catalog index not found in " + dir.string());
  json index = json::parse(in);
  std::vector<catalog_record> recs;
  for (const auto& entry : index) {
    std::ifstream rec_in(dir / (entry.at("id").get<std::string>() + ".json"));
    if (!rec_in) throw std::runtime_error("missing catalog record");
    recs.push_back(record_from_json(json::parse(rec_in)));
  }
  return recs;
}

inline std::vector<catalog_record> query_catalog(const std::vector<catalog_record>& recs,
                                                 const std::string& property, bool verdict) {
  std::vector<catalog_record> out;
  for (const auto& rec : recs) {
    auto it = rec.verdicts.find(property);
    if (it != rec.verdicts.end() && it->second == verdict) out.push_back(rec);
  }
  return out;
}

// Record-by-record comparison; each difference is one line of the report.
inline std::vector<std::string> diff_catalogs(const std::vector<catalog_record>& a,
                                              const std::vector<catalog_record>& b) {
  std::vector<std::string> out;
  std::map<std::string, const catalog_record*> am, bm;
  for (const auto& r : a) am[r.id] = &r;
  for (const auto& r : b) bm[r.id] = &r;
  for (const auto& [id, rec] : am) {
    auto it = bm.find(id);
    if (it == bm.end()) {
      out.push_back("only in first: " + id);
      continue;
    }
    if (rec->verdicts != it->second->verdicts) out.push_back("verdicts differ: " + id);
    if (!(rec->m == it->second->m)) out.push_back("presentation differs: " + id);
  }
  for (const auto& [id, rec] : bm)
    if (!am.count(id)) out.push_back("only in second: " + id);
  return out;
}

}  // namespace baseorder
