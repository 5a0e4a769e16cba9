#pragma once

#include <json.hpp>

#include "diffseq/primechain.hpp"
#include "diffseq/solver.hpp"
#include "diffseq/witnesses.hpp"

namespace diffseq {

inline constexpr const char* kVersion = "1.0.0";

/// {spec, k, r, status, value, certificate, nodes, elapsed_ms, version}
nlohmann::json to_json(const SolveResult& r);
SolveResult solve_result_from_json(const nlohmann::json& j);

/// {t, k, elements, gaps, gap_witnesses, bound, strategy}
nlohmann::json to_json(const ChainSearchResult& r, int k);

/// Header for a witness dump: {name, params, set_spec, claim}.
nlohmann::json witness_header(const Witness& w);

}  // namespace diffseq
