#include "commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "diffseq/core.hpp"
#include "diffseq/formulas.hpp"
#include "diffseq/gapset.hpp"
#include "diffseq/primechain.hpp"
#include "diffseq/report.hpp"
#include "diffseq/solver.hpp"
#include "diffseq/table1.hpp"
#include "diffseq/witnesses.hpp"

namespace diffseq::cli {

namespace {

struct BudgetFlags {
  std::uint64_t max_nodes = 0;  // 0 = unlimited
  std::int64_t max_time_ms = 0;

  SearchBudget budget() const {
    SearchBudget b;
    if (max_nodes > 0) b.max_nodes = max_nodes;
    if (max_time_ms > 0) b.max_time = std::chrono::milliseconds(max_time_ms);
    return b;
  }
};

// Parsed flags for every subcommand.
struct RunConfig {
  std::string set_spec;
  int k = 0;
  int r = 2;
  int n_max = 200;
  int workers = 1;
  std::string format = "json";
  BudgetFlags budget;

  // table1
  std::uint64_t cell_max_nodes = 1'000'000'000;
  std::int64_t cell_max_time_ms = 10 * 60 * 1000;
  std::int64_t hard_cell_max_time_ms = 25 * 60 * 1000;
  bool skip_hard = false;
  std::vector<std::string> rows;

  // verify
  std::string coloring;
  std::string file;
  std::string result_file;

  // witness
  std::string witness_name;
  std::int64_t m = 0, i = 0, len = 0;

  // chain
  std::int64_t t = 1;
  std::int64_t bound = 100000;
  std::string strategy = "dfs";

  bool registry = false;
};

SolverOptions solver_options(const RunConfig& cfg) {
  SolverOptions o;
  o.workers = workers_from_env(cfg.workers);
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  const auto e = s.find_last_not_of(" \t\r\n");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::string positions_text(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

int cmd_compute(const RunConfig& cfg, std::ostream& out) {
  const GapSet S = make_set(cfg.set_spec);
  const SolveResult res = compute_f(S, cfg.k, cfg.r, cfg.n_max, cfg.budget.budget(), solver_options(cfg));
  if (cfg.format == "text") {
    out << "f(" << res.spec << ", " << res.k << "; " << res.r << ") " << status_name(res.status) << ' ' << res.value
        << "\ncertificate " << res.certificate.to_string() << "\nnodes " << res.nodes << "\nelapsed_ms "
        << res.elapsed.count() << '\n';
  } else if (cfg.format == "csv") {
    out << "spec,k,r,status,value,certificate,nodes,elapsed_ms\n"
        << '"' << res.spec << "\"," << res.k << ',' << res.r << ',' << status_name(res.status) << ',' << res.value
        << ',' << res.certificate.to_string() << ',' << res.nodes << ',' << res.elapsed.count() << '\n';
  } else {
    out << to_json(res).dump() << '\n';
  }
  return res.status == SolveStatus::Exact ? kOk : kIncomplete;
}

int cmd_table1(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  out << "row,k,spec,expected,computed,status,nodes,elapsed_ms\n";
  bool mismatch = false;
  const auto options = solver_options(cfg);
  for (const auto& cell : table1_cells()) {
    if (!cfg.rows.empty() && std::find(cfg.rows.begin(), cfg.rows.end(), cell.row) == cfg.rows.end()) continue;
    out << cell.row << ',' << cell.k << ",\"" << cell.spec << "\",";
    if (!cell.expected || (cfg.skip_hard && is_hard_cell(cell))) {
      out << (cell.expected ? std::to_string(*cell.expected) : "?") << ",,skipped,,\n";
      continue;
    }
    SearchBudget budget;
    budget.max_nodes = cfg.cell_max_nodes;
    budget.max_time = std::chrono::milliseconds(is_hard_cell(cell) ? cfg.hard_cell_max_time_ms : cfg.cell_max_time_ms);
    const SolveResult res = compute_f(make_set(cell.spec), cell.k, 2, 4 * *cell.expected, budget, options);
    const bool match = res.status == SolveStatus::Exact && res.value == *cell.expected;
    std::string status = match ? "match" : (res.status == SolveStatus::Exact ? "mismatch" : "timeout");
    out << *cell.expected << ',' << (res.status == SolveStatus::Exact ? std::to_string(res.value) : "") << ','
        << status << ',' << res.nodes << ',' << res.elapsed.count() << '\n';
    out.flush();
    if (!match) {
      mismatch = true;
      err << "mismatch: " << cell.citation << "; computed " << status_name(res.status) << ' ' << res.value << '\n';
    }
  }
  return mismatch ? kMismatch : kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.result_file.empty()) {
    const auto j = nlohmann::json::parse(read_file(cfg.result_file));
    const SolveResult res = solve_result_from_json(j);
    const GapSet S = make_set(res.spec);
    if (res.status != SolveStatus::Exact) {
      const bool ok = !has_k_term(res.certificate, S, res.k);
      out << "certificate " << (ok ? "pass" : "fail") << " (status " << status_name(res.status) << ")\n";
      return ok ? kOk : kIncomplete;
    }
    const bool ok = verify_certificate(res, S, res.k, res.r, solver_options(cfg));
    out << "f(" << res.spec << ", " << res.k << "; " << res.r << ") = " << res.value << ": "
        << (ok ? "pass" : "fail") << '\n';
    return ok ? kOk : kIncomplete;
  }
  std::string text = cfg.coloring;
  if (!cfg.file.empty()) text = trim(read_file(cfg.file));
  if (text.empty()) throw std::invalid_argument("verify needs --coloring, --file or --result");
  const Coloring c = Coloring::parse(text, cfg.r);
  const GapSet S = make_set(cfg.set_spec);
  const auto longest = longest_mono_diffseq(c, S);
  const bool pass = longest.length < cfg.k;
  if (cfg.format == "json") {
    out << nlohmann::json{{"spec", S.spec()},
                          {"k", cfg.k},
                          {"n", c.size()},
                          {"longest", longest.length},
                          {"witness", longest.witness.positions},
                          {"witness_color", longest.witness.color},
                          {"pass", pass}}
               .dump()
        << '\n';
  } else {
    out << "longest " << longest.length << " (color " << int(longest.witness.color) << ": "
        << positions_text(longest.witness.positions) << ")\n"
        << (pass ? "pass: no " : "fail: found a ") << cfg.k << "-term monochromatic " << S.spec() << "-diffsequence\n";
  }
  return pass ? kOk : kIncomplete;
}

std::vector<std::int64_t> witness_params(const RunConfig& cfg) {
  const std::string& n = cfg.witness_name;
  std::vector<std::int64_t> p;
  if (n == "thm35") return {cfg.m, cfg.k};
  if (n == "mod_block") {
    p = {cfg.m};
    if (cfg.len > 0) p.push_back(cfg.len);
    return p;
  }
  if (n == "lemma25") {
    p = {cfg.m};
    if (cfg.i > 0 || cfg.len > 0) p.push_back(cfg.i > 0 ? cfg.i : 1);
    if (cfg.len > 0) p.push_back(cfg.len);
    return p;
  }
  if (n == "p_not_3acc" || n == "remark1") return {cfg.len > 0 ? cfg.len : 1000};
  return {cfg.k};
}

int cmd_witness(const RunConfig& cfg, std::ostream& out) {
  const Witness w = named_witness(cfg.witness_name, witness_params(cfg));
  const ClaimCheck check = check_claim(w);
  auto header = witness_header(w);
  header["length"] = w.coloring.size();
  header["longest"] = check.longest;
  header["check"] = check.pass ? "pass" : "fail";
  if (cfg.format == "text") {
    out << w.name << " length " << w.coloring.size() << ", longest " << check.longest << ", claim "
        << (check.pass ? "pass" : "fail") << " (" << w.claim.text << ")\n"
        << w.coloring.to_string() << '\n';
  } else {
    out << header.dump() << '\n' << w.coloring.to_string() << '\n';
  }
  return check.pass ? kOk : kIncomplete;
}

int cmd_chain(const RunConfig& cfg, std::ostream& out) {
  const auto res = find_chain(cfg.t, cfg.k, cfg.bound, parse_strategy(cfg.strategy));
  auto j = to_json(res, cfg.k);
  j["t"] = cfg.t;
  bool ok = res.chain.has_value();
  if (ok) {
    ok = verify_chain(*res.chain);
    j["verified"] = ok;
  }
  out << j.dump() << '\n';
  return ok ? kOk : kIncomplete;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  if (cfg.registry) {
    out << registry_csv();
    return kOk;
  }
  const GapSet S = make_set(cfg.set_spec);
  const Bounds b = bound(S, cfg.k, cfg.r);
  nlohmann::json j{{"spec", S.spec()}, {"k", cfg.k}, {"r", cfg.r}, {"exact", b.exact}, {"formulas", b.formula_ids}};
  j["lower"] = b.lower ? nlohmann::json(*b.lower) : nlohmann::json(nullptr);
  j["upper"] = b.upper ? nlohmann::json(*b.upper) : nlohmann::json(nullptr);
  j["conjecture"] = b.conjecture ? nlohmann::json(*b.conjecture) : nlohmann::json(nullptr);
  out << j.dump() << '\n';
  return kOk;
}

int cmd_sets(std::ostream& out) {
  for (const auto& e : set_catalog()) out << std::left << std::setw(30) << e.spec << e.description << '\n';
  out << "\nwitnesses:\n";
  for (const auto& w : witness_catalog()) {
    out << "  " << std::left << std::setw(12) << w.name << std::setw(22) << w.params << w.description << '\n';
  }
  return kOk;
}

void add_budget(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--max-nodes", cfg.budget.max_nodes, "Search-node budget (0 = unlimited)");
  cmd->add_option("--max-time-ms", cfg.budget.max_time_ms, "Wall-time budget in ms (0 = unlimited)");
}

void add_workers(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--workers", cfg.workers, "Search threads (DIFFSEQ_WORKERS overrides)")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact f(S,k;r) for monochromatic S-diffsequences, witnesses, and prime gap chains", "diffseq"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "Compute f(S,k;r) with a certificate");
  compute->add_option("--set", cfg.set_spec, "Gap set spec")->required();
  compute->add_option("--k", cfg.k, "Chain length")->required()->check(CLI::PositiveNumber);
  compute->add_option("--r", cfg.r, "Number of colors")->check(CLI::Range(1, kMaxColors));
  compute->add_option("--nmax", cfg.n_max, "Largest n to try")->check(CLI::PositiveNumber);
  compute->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv", "text"}));
  add_budget(compute, cfg);
  add_workers(compute, cfg);

  auto* table = app.add_subcommand("table1", "Recompute the reference table of f(S,k;2)");
  table->add_option("--cell-max-nodes", cfg.cell_max_nodes, "Node budget per cell");
  table->add_option("--cell-max-time-ms", cfg.cell_max_time_ms, "Time budget per cell");
  table->add_option("--hard-cell-max-time-ms", cfg.hard_cell_max_time_ms, "Time budget for the T, k=8 cell");
  table->add_flag("--skip-hard", cfg.skip_hard, "Skip the T, k=8 cell");
  table->add_option("--rows", cfg.rows, "Only these rows (e.g. T,F,S5)")->delimiter(',');
  add_workers(table, cfg);

  auto* verify = app.add_subcommand("verify", "Check a coloring or a saved compute result");
  verify->add_option("--coloring", cfg.coloring, "Coloring string");
  verify->add_option("--file", cfg.file, "File holding a coloring string");
  verify->add_option("--result", cfg.result_file, "JSON written by compute");
  verify->add_option("--set", cfg.set_spec, "Gap set spec");
  verify->add_option("--k", cfg.k, "Chain length")->check(CLI::PositiveNumber);
  verify->add_option("--r", cfg.r, "Number of colors")->check(CLI::Range(1, kMaxColors));
  verify->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));
  add_workers(verify, cfg);

  auto* witness = app.add_subcommand("witness", "Emit a named coloring and check its claim");
  witness->add_option("name", cfg.witness_name, "Witness name")->required();
  witness->add_option("--k", cfg.k, "k parameter");
  witness->add_option("--m", cfg.m, "m parameter");
  witness->add_option("--i", cfg.i, "residue class (lemma25)");
  witness->add_option("--n", cfg.len, "prefix length N");
  witness->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));

  auto* chain = app.add_subcommand("chain", "Find primes with consecutive gaps in P+t");
  chain->add_option("--t", cfg.t, "Odd translation")->required();
  chain->add_option("--k", cfg.k, "Number of primes")->required();
  chain->add_option("--bound", cfg.bound, "Largest prime allowed");
  chain->add_option("--strategy", cfg.strategy)->check(CLI::IsMember({"dfs", "bfs"}));

  auto* bounds = app.add_subcommand("bounds", "Registered bounds for f(S,k;r)");
  bounds->add_option("--set", cfg.set_spec, "Gap set spec");
  bounds->add_option("--k", cfg.k, "Chain length");
  bounds->add_option("--r", cfg.r, "Number of colors");
  bounds->add_flag("--registry", cfg.registry, "Dump the whole registry as CSV");

  auto* sets = app.add_subcommand("sets", "List gap-set and witness names");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*compute) return cmd_compute(cfg, out);
    if (*table) return cmd_table1(cfg, out, err);
    if (*verify) {
      if (cfg.result_file.empty() && (cfg.set_spec.empty() || cfg.k == 0)) {
        throw std::invalid_argument("verify needs --set and --k with --coloring/--file");
      }
      return cmd_verify(cfg, out);
    }
    if (*witness) return cmd_witness(cfg, out);
    if (*chain) return cmd_chain(cfg, out);
    if (*bounds) {
      if (!cfg.registry && (cfg.set_spec.empty() || cfg.k == 0)) throw std::invalid_argument("bounds needs --set and --k");
      return cmd_bounds(cfg, out);
    }
    if (*sets) return cmd_sets(out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace diffseq::cli
