#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "diffseq/coloring.hpp"
#include "diffseq/gapset.hpp"

namespace diffseq {

struct SearchBudget {
  std::optional<std::uint64_t> max_nodes;
  std::optional<std::chrono::milliseconds> max_time;

  static SearchBudget unlimited() { return {}; }
};

enum class Feasibility { Feasible, Infeasible, BudgetExceeded };

struct FeasibleResult {
  Feasibility status = Feasibility::Infeasible;
  std::optional<Coloring> coloring;  // set iff Feasible
  std::uint64_t nodes = 0;
};

struct SolverOptions {
  int workers = 1;
  /// Use the single-threaded reference search even when workers > 1.
  bool serial = false;
};

/// Decides whether some r-coloring of [1,n] avoids monochromatic k-term
/// S-diffsequences.
///
/// Positions are colored left to right; position 1 gets color 0 and a color
/// may be used only after every smaller color has appeared, so the first
/// coloring found is the lexicographically least canonical one. A branch is
/// cut once its newest chain reaches k or once some later position has all
/// colors blocked. With workers > 1 the tree is split at a shallow depth and
/// the subtrees run under OpenMP; the coloring and the node count equal the
/// serial search's for every worker count.
FeasibleResult feasible(const GapSet& S, int k, int r, int n, const SearchBudget& budget = {},
                        const SolverOptions& options = {});

/// Reference search: one thread, no splitting.
FeasibleResult feasible_serial(const GapSet& S, int k, int r, int n, const SearchBudget& budget = {});

enum class SolveStatus { Exact, FeasibleAt, NotFoundUpTo, Timeout };

std::string_view status_name(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::Timeout;
  /// Exact: f(S,k;r). FeasibleAt / Timeout: largest n shown feasible.
  /// NotFoundUpTo: the n_max searched.
  int value = 0;
  /// Coloring of [1, value-1] (Exact) or [1, value] (FeasibleAt, Timeout)
  /// with no monochromatic k-term S-diffsequence.
  Coloring certificate;
  std::uint64_t nodes = 0;
  std::chrono::milliseconds elapsed{0};
  std::string spec;
  int k = 0;
  int r = 0;
  /// First n tried; n = start - 1 is checked first to produce a certificate.
  int start = 0;
};

/// f(S,k;r): scans n upward from max(k, proven lower bound) and returns the
/// first infeasible n. The budget covers the whole scan.
SolveResult compute_f(const GapSet& S, int k, int r, int n_max, const SearchBudget& budget = {},
                      const SolverOptions& options = {});

/// Re-checks an Exact result: the certificate has the right length and no
/// k-term chain, and a fresh search at n = value is infeasible.
bool verify_certificate(const SolveResult& result, const GapSet& S, int k, int r,
                        const SolverOptions& options = {});

/// Number of workers from DIFFSEQ_WORKERS, else `fallback`.
int workers_from_env(int fallback);

}  // namespace diffseq
