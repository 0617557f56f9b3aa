#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "vts/dimacs.hpp"
#include "vts/document.hpp"
#include "vts/dot.hpp"
#include "vts/driver.hpp"
#include "vts/encoder.hpp"
#include "vts/model.hpp"
#include "vts/verifier.hpp"

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string variant = "A";
  int nodes = 3;
  int molecules = 0;  // 0: 2*nodes, or 2*nodes+1 for nodes==2
  int max_parallel = 2;
  int drop = 0;
  bool no_query = false;
  std::string semantics = "undirected";
  double timeout = 0.0;
  std::uint64_t seed = 0;
  std::string out, dot, dimacs, format = "text";
};

void add_model_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--variant", o.variant, "activity rule variant")
      ->check(CLI::IsMember({"A", "B", "C", "D", "E", "F"}));
  cmd->add_option("--nodes", o.nodes, "number of compartments")
      ->check(CLI::Range(2, 16));
  cmd->add_option("--molecules", o.molecules,
                  "number of molecule species (default 2*nodes, or "
                  "2*nodes+1 for 2 nodes)")
      ->check(CLI::Range(2, 64));
  cmd->add_option("--max-parallel", o.max_parallel,
                  "parallel edge slots per ordered node pair")
      ->check(CLI::Range(1, 8));
  cmd->add_option("--drop-semantics", o.semantics,
                  "reachability on the dropped graph: paper (follow edge "
                  "directions) or undirected")
      ->check(CLI::IsMember({"paper", "undirected"}));
  cmd->add_option("--timeout", o.timeout,
                  "solver time limit per call in seconds (0 = none)");
  cmd->add_option("--seed", o.seed, "solver randomization seed");
  cmd->add_option("--format", o.format, "report format")
      ->check(CLI::IsMember({"text", "machine"}));
}

vts::SearchConfig make_config(const Options& o) {
  vts::SearchConfig cfg;
  cfg.variant = vts::variant_from_letter(o.variant[0]);
  cfg.num_nodes = o.nodes;
  cfg.num_molecules =
      o.molecules > 0 ? o.molecules : vts::default_molecules(o.nodes);
  cfg.max_parallel = o.max_parallel;
  cfg.connectivity_query = o.drop > 0;
  cfg.delta = o.drop;
  cfg.drop_semantics = o.semantics == "paper"
                           ? vts::DropSemantics::Directed
                           : vts::DropSemantics::Undirected;
  cfg.solver_time_limit = o.timeout;
  cfg.seed = o.seed;
  return cfg;
}

ordered_json stats_json(const vts::SolveStats& s) {
  return ordered_json{{"conflicts", s.conflicts},
                      {"decisions", s.decisions},
                      {"propagations", s.propagations},
                      {"restarts", s.restarts},
                      {"wall_seconds", s.wall_seconds}};
}

int status_exit(vts::SolveStatus st) {
  switch (st) {
    case vts::SolveStatus::Sat: return 10;
    case vts::SolveStatus::Unsat: return 20;
    case vts::SolveStatus::Unknown: return 30;
  }
  return 30;
}

void write_witness_files(const Options& o, const vts::Witness& w) {
  if (!o.out.empty()) {
    vts::WitnessInfo info;
    info.dropped = w.dropped;
    if (w.disconnected_pair) {
      info.disconnected_pair = *w.disconnected_pair;
      vts::write_file(o.out, vts::emit_document(w.vts, info));
    } else {
      vts::write_file(o.out, vts::emit_document(w.vts, std::nullopt));
    }
  }
  if (!o.dot.empty())
    vts::write_file(o.dot, vts::export_dot(w.vts, w.dropped));
}

int cmd_search(const Options& o) {
  const vts::SearchConfig cfg = make_config(o);
  if (!o.dimacs.empty()) {
    const vts::Encoding enc = vts::encode_problem(cfg);
    vts::write_file(o.dimacs, vts::export_dimacs(enc.cnf, enc.vm, enc.audit));
  }
  const vts::SearchOutcome res = vts::run_search(cfg);
  if (res.witness) write_witness_files(o, *res.witness);
  if (o.format == "machine") {
    ordered_json j{{"status", vts::to_string(res.status)},
                   {"num_vars", res.num_vars},
                   {"num_clauses", res.num_clauses},
                   {"stats", stats_json(res.stats)}};
    if (res.witness) {
      vts::WitnessInfo info;
      info.dropped = res.witness->dropped;
      if (res.witness->disconnected_pair)
        info.disconnected_pair = *res.witness->disconnected_pair;
      j["witness"] = ordered_json::parse(vts::emit_document(
          res.witness->vts,
          res.witness->disconnected_pair
              ? std::optional<vts::WitnessInfo>(info)
              : std::nullopt));
      j["verification"] = {{"pass", res.verification.pass}};
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "status: " << vts::to_string(res.status) << "\n"
              << "variables: " << res.num_vars
              << "  clauses: " << res.num_clauses << "\n"
              << "conflicts: " << res.stats.conflicts
              << "  decisions: " << res.stats.decisions
              << "  time: " << res.stats.wall_seconds << "s\n";
    if (res.witness) {
      const vts::Witness& w = *res.witness;
      std::cout << "witness: " << w.vts.num_nodes << " nodes, "
                << w.vts.edges.size() << " edges";
      if (!w.dropped.empty()) {
        std::cout << "; dropped " << w.dropped.size() << " edges";
        if (w.disconnected_pair)
          std::cout << "; disconnected pair (" << w.disconnected_pair->first
                    << "," << w.disconnected_pair->second << ")";
      }
      std::cout << "\nverification: "
                << (res.verification.pass ? "pass" : "fail") << "\n";
    }
  }
  return status_exit(res.status);
}

int cmd_min_connectivity(const Options& o) {
  vts::SearchConfig cfg = make_config(o);
  cfg.connectivity_query = false;
  cfg.delta = 0;
  const vts::SweepResult sr = vts::run_min_connectivity(cfg, o.drop);
  if (sr.witness) write_witness_files(o, *sr.witness);
  if (o.format == "machine") {
    ordered_json steps = ordered_json::array();
    for (const auto& st : sr.steps)
      steps.push_back({{"drop", st.delta},
                       {"status", vts::to_string(st.status)},
                       {"stats", stats_json(st.stats)}});
    ordered_json j{{"result", vts::to_string(sr.status)},
                   {"base_status", vts::to_string(sr.base_status)},
                   {"steps", steps}};
    if (sr.status == vts::SweepStatus::MinConnectivity)
      j["min_connectivity"] = sr.delta;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "base: " << vts::to_string(sr.base_status) << "\n";
    for (const auto& st : sr.steps)
      std::cout << "drop " << st.delta << ": " << vts::to_string(st.status)
                << " (" << st.stats.wall_seconds << "s)\n";
    std::cout << "result: " << vts::to_string(sr.status);
    if (sr.status == vts::SweepStatus::MinConnectivity)
      std::cout << " " << sr.delta;
    std::cout << "\n";
  }
  switch (sr.status) {
    case vts::SweepStatus::MinConnectivity: return 10;
    case vts::SweepStatus::NoGraph: return 20;
    case vts::SweepStatus::Inconclusive: return 30;
  }
  return 30;
}

int cmd_verify(const std::string& path, const Options& o) {
  const vts::ParsedDocument doc = vts::parse_document(vts::read_file(path));
  const vts::Vts& g = doc.vts;
  vts::SearchConfig cfg;
  cfg.variant = vts::variant_from_letter(o.variant[0]);
  cfg.num_nodes = g.num_nodes;
  cfg.num_molecules = g.num_molecules;
  int max_slot = 0;
  for (const auto& e : g.edges) max_slot = std::max(max_slot, e.slot);
  cfg.max_parallel = std::max(o.max_parallel, max_slot + 1);
  cfg.drop_semantics = o.semantics == "paper"
                           ? vts::DropSemantics::Directed
                           : vts::DropSemantics::Undirected;

  struct Row {
    const char* name;
    vts::CheckResult result;
  };
  std::vector<Row> rows;
  rows.push_back({"structure", vts::check_well_structured(g, cfg.max_parallel)});
  rows.push_back({"stability", vts::check_stability(g)});
  rows.push_back({"fusion", vts::check_well_fused(g)});
  rows.push_back({"activity", vts::check_activity_rules(g, cfg.variant)});
  rows.push_back({"connectivity", vts::check_connected(g)});
  if (doc.witness) {
    rows.push_back(
        {"drop", vts::check_drop_disconnects(
                     g, doc.witness->dropped, cfg.drop_semantics,
                     doc.witness->disconnected_pair)});
  }
  bool all = true;
  for (const auto& row : rows) all = all && row.result.ok;

  if (o.format == "machine") {
    ordered_json checks = ordered_json::object();
    for (const auto& row : rows)
      checks[row.name] = {{"pass", row.result.ok},
                          {"failures", row.result.failures}};
    ordered_json j{{"pass", all}, {"checks", checks}};
    if (!g.edges.empty())
      j["edge_connectivity"] = vts::edge_connectivity(g);
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& row : rows) {
      std::cout << row.name << ": " << (row.result.ok ? "pass" : "fail")
                << "\n";
      for (const auto& f : row.result.failures)
        std::cout << "  " << f << "\n";
    }
    std::cout << "edge connectivity: " << vts::edge_connectivity(g) << "\n"
              << "overall: " << (all ? "pass" : "fail") << "\n";
  }
  return all ? 0 : 1;
}

int cmd_export_dot(const std::string& path, const Options& o) {
  const vts::ParsedDocument doc = vts::parse_document(vts::read_file(path));
  const std::string text = vts::export_dot(
      doc.vts, doc.witness ? doc.witness->dropped
                           : std::vector<std::tuple<int, int, int>>{});
  if (o.out.empty())
    std::cout << text;
  else
    vts::write_file(o.out, text);
  return 0;
}

int cmd_bench(const Options& o, const std::string& sizes,
              const std::string& variants) {
  int lo = 2, hi = 6;
  const auto dash = sizes.find('-');
  try {
    if (dash == std::string::npos) {
      lo = hi = std::stoi(sizes);
    } else {
      lo = std::stoi(sizes.substr(0, dash));
      hi = std::stoi(sizes.substr(dash + 1));
    }
  } catch (const std::exception&) {
    throw vts::Error("bench sizes must be N or LO-HI");
  }
  if (lo < 2 || hi < lo) throw vts::Error("bad bench size range");
  for (char c : variants)
    vts::variant_from_letter(c);  // validates

  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) throw vts::Error("cannot open " + o.out);
    os = &file;
  }
  *os << "# drop per variant:";
  for (char c : variants)
    *os << " " << c << "="
        << vts::bench_delta(vts::variant_from_letter(c));
  *os << "\nvariant,nodes,molecules,max_parallel,delta,status,wall_seconds\n";
  os->flush();
  vts::run_bench(variants, lo, hi, o.timeout, o.seed,
                 [&](const vts::BenchRow& row) {
                   *os << row.variant << "," << row.nodes << ","
                       << row.molecules << "," << row.max_parallel << ","
                       << row.delta << "," << vts::to_string(row.status)
                       << "," << row.seconds << "\n";
                   os->flush();
                 });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constraint search for vesicle traffic systems"};
  app.require_subcommand(1);

  Options o;
  std::string doc_path;
  std::string bench_sizes = "2-6";
  std::string bench_variants = "ACDF";

  CLI::App* search = app.add_subcommand(
      "search", "solve one configuration and emit the witness");
  add_model_flags(search, o);
  auto* drop_opt = search->add_option(
      "--drop", o.drop, "require this many dropped edges to disconnect");
  drop_opt->check(CLI::Range(1, 2048));
  search->add_flag("--no-connectivity-query", o.no_query,
                   "base feasibility only (default unless --drop is given)")
      ->excludes(drop_opt);
  search->add_option("--out", o.out, "write the witness document here");
  search->add_option("--dot", o.dot, "write the witness graph as DOT");
  search->add_option("--dimacs", o.dimacs, "write the CNF as DIMACS");

  CLI::App* sweep = app.add_subcommand(
      "min-connectivity",
      "probe drop counts 1,2,... for the smallest that disconnects");
  add_model_flags(sweep, o);
  sweep->add_option("--drop", o.drop,
                    "largest drop count to probe (default nodes^2 * "
                    "max-parallel)");
  sweep->add_option("--out", o.out, "write the minimal witness document");
  sweep->add_option("--dot", o.dot, "write the minimal witness as DOT");

  CLI::App* verify = app.add_subcommand(
      "verify", "check a system document against all conditions");
  verify->add_option("path", doc_path, "document to verify")->required();
  verify->add_option("--variant", o.variant, "activity rule variant")
      ->required()
      ->check(CLI::IsMember({"A", "B", "C", "D", "E", "F"}));
  verify->add_option("--max-parallel", o.max_parallel,
                     "slot bound (grown to fit the document)");
  verify->add_option("--drop-semantics", o.semantics)
      ->check(CLI::IsMember({"paper", "undirected"}));
  verify->add_option("--format", o.format)
      ->check(CLI::IsMember({"text", "machine"}));

  CLI::App* exdot =
      app.add_subcommand("export-dot", "render a system document as DOT");
  exdot->add_option("path", doc_path, "document to render")->required();
  exdot->add_option("--out", o.out, "output file (default stdout)");

  CLI::App* bench = app.add_subcommand(
      "bench", "status and wall time across a size ladder, as CSV");
  bench->add_option("--nodes", bench_sizes, "size N or range LO-HI");
  bench->add_option("--variant", bench_variants,
                    "variant letters to run, e.g. ACDF");
  bench->add_option("--timeout", o.timeout,
                    "solver time limit per cell in seconds");
  bench->add_option("--seed", o.seed, "solver randomization seed");
  bench->add_option("--out", o.out, "CSV file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (search->parsed()) return cmd_search(o);
    if (sweep->parsed()) return cmd_min_connectivity(o);
    if (verify->parsed()) return cmd_verify(doc_path, o);
    if (exdot->parsed()) return cmd_export_dot(doc_path, o);
    if (bench->parsed()) return cmd_bench(o, bench_sizes, bench_variants);
  } catch (const vts::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
