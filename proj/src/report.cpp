#include "diffseq/report.hpp"

#include <stdexcept>

namespace diffseq {

nlohmann::json to_json(const SolveResult& r) {
  return {
      {"spec", r.spec},
      {"k", r.k},
      {"r", r.r},
      {"status", std::string(status_name(r.status))},
      {"value", r.value},
      {"certificate", r.certificate.to_string()},
      {"nodes", r.nodes},
      {"elapsed_ms", r.elapsed.count()},
      {"version", kVersion},
  };
}

SolveResult solve_result_from_json(const nlohmann::json& j) {
  SolveResult r;
  r.spec = j.at("spec").get<std::string>();
  r.k = j.at("k").get<int>();
  r.r = j.at("r").get<int>();
  const auto status = j.at("status").get<std::string>();
  bool known = false;
  for (auto s : {SolveStatus::Exact, SolveStatus::FeasibleAt, SolveStatus::NotFoundUpTo, SolveStatus::Timeout}) {
    if (status == status_name(s)) {
      r.status = s;
      known = true;
    }
  }
  if (!known) throw std::invalid_argument("unknown status '" + status + "'");
  r.value = j.at("value").get<int>();
  r.certificate = Coloring::parse(j.at("certificate").get<std::string>(), r.r);
  r.nodes = j.at("nodes").get<std::uint64_t>();
  r.elapsed = std::chrono::milliseconds(j.at("elapsed_ms").get<std::int64_t>());
  return r;
}

nlohmann::json to_json(const ChainSearchResult& r, int k) {
  nlohmann::json j{
      {"k", k},
      {"bound", r.bound},
      {"strategy", std::string(strategy_name(r.strategy))},
  };
  if (r.chain) {
    j["t"] = r.chain->t;
    j["elements"] = r.chain->elements;
    j["gaps"] = r.chain->gaps;
    j["gap_witnesses"] = r.chain->gap_witnesses;
  } else {
    j["elements"] = nullptr;
    j["status"] = "NotFoundUpTo";
  }
  return j;
}

nlohmann::json witness_header(const Witness& w) {
  nlohmann::json claim{{"bound", w.claim.bound}, {"text", w.claim.text}};
  if (!w.claim.color_bounds.empty()) claim["color_bounds"] = w.claim.color_bounds;
  if (w.claim.domain_spec) claim["domain"] = *w.claim.domain_spec;
  return {
      {"name", w.name},
      {"params", w.params},
      {"set_spec", w.claim.set_spec},
      {"claim", claim},
  };
}

}  // namespace diffseq
