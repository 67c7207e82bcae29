// Command-line front end: Table 1 reproduction, property checks with
// certificates, family construction, critical-graph enumeration, and the
// persistent catalog. JSON goes to stdout (or --output); summaries to stderr.
// Exit codes: 0 = verdict true / counts match, 1 = verdict false / mismatch,
// 2 = usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "baseorder/catalog.hpp"
#include "baseorder/families.hpp"
#include "baseorder/json_io.hpp"
#include "baseorder/parallel.hpp"
#include "baseorder/table1.hpp"
#include "baseorder/transversal.hpp"

namespace {

using baseorder::json;

void emit(const json& j, const std::string& output) {
  if (output.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(output);
  if (!out) throw std::runtime_error("cannot write " + output);
  out << j.dump(2) << "\n";
}

// Accepts the bare interchange format or a construct-style wrapper with a
// "matroid" field.
baseorder::matroid load_matroid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::domain_error("cannot read " + path);
  json j = json::parse(in);
  if (j.contains("matroid")) j = j["matroid"];
  return baseorder::matroid_from_json(j);
}

int run_check(const std::string& file, const std::string& property, const std::string& output) {
  using namespace baseorder;
  matroid m = load_matroid(file);
  json cert;
  cert["property"] = property;
  bool verdict = false;

  if (property == "bo") {
    auto res = check_base_orderable(m);
    verdict = res.verdict;
    if (!verdict) {
      cert["witness"] = json{{"basis_a", labels_of(m, res.fail_a)},
                             {"basis_b", labels_of(m, res.fail_b)},
                             {"blocking", blocking_to_json(m, *res.blocking)}};
    }
  } else if (property.rfind("kbo=", 0) == 0) {
    int k = std::stoi(property.substr(4));
    cert["k"] = k;
    auto res = check_k_base_orderable(m, k);
    verdict = res.verdict;
    if (!verdict)
      cert["witness"] = json{{"basis_a", labels_of(m, res.fail_a)},
                             {"basis_b", labels_of(m, res.fail_b)}};
  } else if (property == "sbo") {
    auto res = check_strongly_base_orderable(m);
    verdict = res.verdict;
    if (!verdict)
      cert["witness"] = json{{"basis_a", labels_of(m, res.fail_a)},
                             {"basis_b", labels_of(m, res.fail_b)}};
  } else if (property.rfind("kl=", 0) == 0) {
    auto body = property.substr(3);
    auto comma = body.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("kl needs two parameters K,L");
    int k = std::stoi(body.substr(0, comma));
    int l = std::stoi(body.substr(comma + 1));
    cert["k"] = k;
    cert["l"] = l;
    auto res = check_kl_base_orderable(m, k, l);
    verdict = res.verdict;
    if (!verdict)
      cert["witness"] = json{{"basis_a", labels_of(m, res.fail_a)},
                             {"basis_b", labels_of(m, res.fail_b)}};
  } else if (property == "transversal") {
    auto violation = mason_ingleton_violation(m);
    verdict = !violation.has_value();
    if (violation) {
      json anti = json::array();
      for (auto s : *violation) anti.push_back(labels_of(m, s));
      cert["witness"] = json{{"antichain", anti}};
    }
  } else if (property == "paving") {
    verdict = m.is_paving();
    if (!verdict) {
      auto circuits = m.circuits_up_to(m.rank() - 1);
      cert["witness"] = json{{"small_circuit", labels_of(m, circuits.front())}};
    }
  } else if (property == "sparse-paving") {
    verdict = baseorder::is_sparse_paving(m);
  } else {
    throw CLI::ValidationError("unknown property: " + property);
  }

  cert["verdict"] = verdict;
  emit(cert, output);
  std::cerr << property << ": " << (verdict ? "true" : "false") << "\n";
  return verdict ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace baseorder;
  CLI::App app{"matroid base-orderability toolkit"};
  app.require_subcommand(1);
  unsigned jobs = default_jobs();
  app.add_option("--jobs", jobs, "worker threads (default: cores)");

  // table1
  auto* t1 = app.add_subcommand("table1", "reproduce the critical-graph census for one rank");
  int t1_rank = 3;
  bool t1_verify = false, t1_long = false;
  std::string t1_output;
  t1->add_option("--rank", t1_rank, "rank, 3..9")->required();
  t1->add_flag("--verify", t1_verify, "certify each M(Delta) as an excluded minor");
  t1->add_flag("--long", t1_long, "allow verification beyond rank 7");
  t1->add_option("--output", t1_output, "write the JSON report to a file");

  // check
  auto* ch = app.add_subcommand("check", "run a property check with a certificate");
  std::string ch_file, ch_property, ch_output;
  ch->add_option("file", ch_file, "matroid JSON file")->required();
  ch->add_option("--property", ch_property,
                 "bo | kbo=K | sbo | kl=K,L | transversal | paving | sparse-paving")
      ->required();
  ch->add_option("--output", ch_output, "write the certificate to a file");

  // construct
  auto* co = app.add_subcommand("construct", "emit a family matroid as JSON");
  std::string co_family, co_input, co_sizes, co_output;
  int co_rank = 0, co_elements = 0, co_k = 0;
  co->add_option("family", co_family, "mdelta | malpha | mbeta | uniform | mk4")->required();
  co->add_option("--input", co_input, "critical graph JSON (mdelta)");
  co->add_option("--sizes", co_sizes, "comma-separated block sizes");
  co->add_option("--k", co_k, "beta parameter k");
  co->add_option("--rank", co_rank, "uniform rank");
  co->add_option("--elements", co_elements, "uniform ground size");
  co->add_option("--output", co_output, "write the matroid to a file");

  // enumerate-critical
  auto* en = app.add_subcommand("enumerate-critical",
                                "list canonical critical graphs, one JSON record per line");
  int en_rank = 3;
  std::string en_output;
  en->add_option("--rank", en_rank, "rank, 3..9")->required();
  en->add_option("--output", en_output, "write the records to a file");

  // catalog
  auto* ca = app.add_subcommand("catalog", "build, query, or diff a matroid catalog");
  std::string ca_action, ca_store, ca_other, ca_property;
  bool ca_verdict = false;
  ca->add_option("action", ca_action, "build | query | diff")->required();
  ca->add_option("--store", ca_store, "catalog directory")->required();
  ca->add_option("--other", ca_other, "second catalog (diff)");
  ca->add_option("--property", ca_property, "verdict key (query)");
  ca->add_option("--verdict", ca_verdict, "verdict value (query)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*t1) {
      if (t1_rank < 3 || t1_rank > 9) throw budget_error("rank must be in 3..9");
      if (t1_verify && t1_rank > 7 && !t1_long)
        throw budget_error("verification above rank 7 needs --long");
      auto rep = run_table1(t1_rank, t1_verify, jobs);
      emit(table1_to_json(rep), t1_output);
      std::cerr << "rank " << t1_rank << ": counts " << (rep.counts_match ? "match" : "MISMATCH");
      if (rep.verified)
        std::cerr << ", verification " << (rep.all_consistent ? "consistent" : "INCONSISTENT");
      std::cerr << "\n";
      bool ok = rep.counts_match && (!rep.verified || rep.all_consistent);
      return ok ? 0 : 1;
    }

    if (*ch) return run_check(ch_file, ch_property, ch_output);

    if (*co) {
      auto parse_sizes = [&](std::size_t want) {
        std::vector<int> out;
        std::string cur;
        for (char c : co_sizes + ",") {
          if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
          } else {
            cur.push_back(c);
          }
        }
        if (out.size() != want)
          throw std::domain_error("expected " + std::to_string(want) + " sizes");
        return out;
      };
      matroid m;
      json provenance;
      if (co_family == "mdelta") {
        std::ifstream in(co_input);
        if (!in) throw std::domain_error("mdelta needs --input <graph.json>");
        auto g = critical_graph_from_json(json::parse(in));
        m = build_m_delta(g);
        provenance = json{{"family", "mdelta"}, {"graph", critical_graph_to_json(g)}};
      } else if (co_family == "malpha") {
        auto v = parse_sizes(6);
        alpha_tuple t{v[0], v[1], v[2], v[3], v[4], v[5]};
        m = build_m_alpha(t);
        provenance = json{{"family", "malpha"}, {"sizes", v}};
      } else if (co_family == "mbeta") {
        auto v = parse_sizes(4);
        beta_tuple t{co_k, v[0], v[1], v[2], v[3]};
        m = build_m_beta(t);
        provenance = json{{"family", "mbeta"}, {"k", co_k}, {"sizes", v}};
      } else if (co_family == "uniform") {
        m = uniform_matroid(co_rank, co_elements);
        provenance = json{{"family", "uniform"}, {"rank", co_rank}, {"elements", co_elements}};
      } else if (co_family == "mk4") {
        m = build_m_delta(enumerate_critical_graphs(3).front());
        provenance = json{{"family", "mk4"}};
      } else {
        throw std::domain_error("unknown family: " + co_family);
      }
      json out;
      out["provenance"] = provenance;
      out["matroid"] = matroid_to_json(m);
      emit(out, co_output);
      std::cerr << "constructed " << co_family << " on " << m.ground_size() << " elements, rank "
                << m.rank() << "\n";
      return 0;
    }

    if (*en) {
      auto graphs = enumerate_critical_graphs(en_rank);
      std::string lines;
      for (const auto& g : graphs) lines += critical_graph_to_json(g).dump() + "\n";
      if (en_output.empty()) {
        std::cout << lines;
      } else {
        std::ofstream out(en_output);
        if (!out) throw std::runtime_error("cannot write " + en_output);
        out << lines;
      }
      std::cerr << graphs.size() << " critical graphs at rank " << en_rank << "\n";
      return 0;
    }

    if (*ca) {
      if (ca_action == "build") {
        auto recs = standard_catalog(jobs);
        write_catalog(ca_store, recs);
        std::cerr << "wrote " << recs.size() << " records to " << ca_store << "\n";
        return 0;
      }
      if (ca_action == "query") {
        auto recs = read_catalog(ca_store);
        auto hits = query_catalog(recs, ca_property, ca_verdict);
        json out = json::array();
        for (const auto& rec : hits)
          out.push_back(json{{"id", rec.id}, {"provenance", rec.provenance}});
        emit(out, "");
        std::cerr << hits.size() << " of " << recs.size() << " records match\n";
        return 0;
      }
      if (ca_action == "diff") {
        if (ca_other.empty()) throw std::domain_error("diff needs --other");
        auto lines = diff_catalogs(read_catalog(ca_store), read_catalog(ca_other));
        json out = lines;
        emit(out, "");
        std::cerr << lines.size() << " differences\n";
        return lines.empty() ? 0 : 1;
      }
      throw std::domain_error("unknown catalog action: " + ca_action);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
