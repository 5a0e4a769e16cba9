#include "diffseq/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "diffseq/core.hpp"
#include "diffseq/formulas.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace diffseq {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kCheckInterval = 1u << 12;
constexpr std::size_t kNoWinner = std::numeric_limits<std::size_t>::max();

// Budget shared by every worker of one feasible() call.
struct Limits {
  std::optional<std::uint64_t> max_nodes;
  std::optional<Clock::time_point> deadline;
  std::atomic<std::uint64_t> flushed{0};
  std::atomic<bool> exceeded{false};

  explicit Limits(const SearchBudget& budget) : max_nodes(budget.max_nodes) {
    if (budget.max_time) deadline = Clock::now() + *budget.max_time;
  }
};

class Search {
 public:
  Search(int n, int r, int k, std::span<const int> gaps, Limits& limits)
      : state_(n, r, k, gaps), limits_(limits) {}

  // Replays an already-validated prefix without counting nodes.
  int replay(std::span<const Color> prefix) {
    int max_used = -1;
    for (Color c : prefix) {
      state_.extend(c);
      max_used = std::max(max_used, static_cast<int>(c));
    }
    return max_used;
  }

  template <typename Cancel>
  bool run(int max_used, Cancel&& cancelled) {
    cancelled_ = [&]() { return cancelled(); };
    const bool found = dfs(state_.assigned() + 1, max_used);
    flush();
    return found;
  }

  std::uint64_t nodes() const { return nodes_; }
  bool stopped() const { return stopped_; }
  bool exceeded() const { return exceeded_; }
  Coloring coloring() const { return state_.coloring(); }

 private:
  void flush() {
    limits_.flushed.fetch_add(nodes_ - flushed_at_, std::memory_order_relaxed);
    flushed_at_ = nodes_;
  }

  void check() {
    flush();
    if (limits_.exceeded.load(std::memory_order_relaxed)) {
      stopped_ = exceeded_ = true;
      return;
    }
    const bool over_nodes = limits_.max_nodes && limits_.flushed.load(std::memory_order_relaxed) > *limits_.max_nodes;
    const bool over_time = limits_.deadline && Clock::now() > *limits_.deadline;
    if (over_nodes || over_time) {
      limits_.exceeded.store(true, std::memory_order_relaxed);
      stopped_ = exceeded_ = true;
      return;
    }
    if (cancelled_ && cancelled_()) stopped_ = true;
  }

  bool dfs(int pos, int max_used) {
    ++nodes_;
    if (nodes_ % kCheckInterval == 0) check();
    if (stopped_) return false;
    if (pos > state_.n()) return true;
    const int top = pos == 1 ? 0 : std::min(state_.num_colors() - 1, max_used + 1);
    for (int c = 0; c <= top; ++c) {
      const ExtendResult e = state_.extend(static_cast<Color>(c));
      if (!e.prune && !e.doomed && dfs(pos + 1, std::max(max_used, c))) return true;
      state_.retract();
      if (stopped_) return false;
    }
    return false;
  }

  ChainState state_;
  Limits& limits_;
  std::function<bool()> cancelled_;
  std::uint64_t nodes_ = 0;
  std::uint64_t flushed_at_ = 0;
  bool stopped_ = false;
  bool exceeded_ = false;
};

struct Leaf {
  std::vector<Color> prefix;
  int max_used = -1;
  std::uint64_t nodes_before = 0;  // prefix-tree nodes visited since the previous leaf
};

// Enumerates the canonical prefixes of length `depth` that survive pruning,
// recording prefix-tree node counts in serial visiting order.
class PrefixEnumerator {
 public:
  PrefixEnumerator(int n, int r, int k, std::span<const int> gaps, int depth)
      : state_(n, r, k, gaps), depth_(depth) {}

  void run() { visit(1, -1); }

  std::vector<Leaf> leaves;
  std::uint64_t tail_nodes = 0;

 private:
  void visit(int pos, int max_used) {
    if (pos == depth_ + 1) {
      leaves.push_back({std::vector<Color>(state_.colors().begin(), state_.colors().end()), max_used, pending_});
      pending_ = 0;
      return;
    }
    ++pending_;
    const int top = pos == 1 ? 0 : std::min(state_.num_colors() - 1, max_used + 1);
    for (int c = 0; c <= top; ++c) {
      const ExtendResult e = state_.extend(static_cast<Color>(c));
      if (!e.prune && !e.doomed) visit(pos + 1, std::max(max_used, c));
      state_.retract();
    }
    tail_nodes = pending_;
  }

  ChainState state_;
  int depth_;
  std::uint64_t pending_ = 0;
};

int split_depth(int workers) {
  int log2w = 0;
  while ((1 << log2w) < workers) ++log2w;
  return log2w + 2;
}

void check_args(int k, int r, int n) {
  if (k < 1 || r < 1 || n < 0) throw std::invalid_argument("feasible: need k >= 1, r >= 1, n >= 0");
  if (r > kMaxColors) throw std::invalid_argument("feasible: r > 36");
}

FeasibleResult parallel_feasible(std::span<const int> gaps, int k, int r, int n, Limits& limits, int workers) {
  const int depth = std::min(split_depth(workers), n);
  PrefixEnumerator enumerator(n, r, k, gaps, depth);
  enumerator.run();
  const auto& leaves = enumerator.leaves;

  struct Outcome {
    bool found = false;
    bool exceeded = false;
    std::uint64_t nodes = 0;
    std::optional<Coloring> coloring;
  };
  std::vector<Outcome> outcomes(leaves.size());
  std::atomic<std::size_t> winner{kNoWinner};

#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(leaves.size()); ++idx) {
    const auto i = static_cast<std::size_t>(idx);
    if (i > winner.load() || limits.exceeded.load()) {
      outcomes[i].exceeded = limits.exceeded.load();
      continue;
    }
    Search search(n, r, k, gaps, limits);
    const int max_used = search.replay(leaves[i].prefix);
    const bool found = search.run(max_used, [&]() { return winner.load() < i; });
    outcomes[i].nodes = search.nodes();
    outcomes[i].exceeded = search.exceeded();
    if (found) {
      outcomes[i].found = true;
      outcomes[i].coloring = search.coloring();
      std::size_t current = winner.load();
      while (i < current && !winner.compare_exchange_weak(current, i)) {
      }
    }
  }

  FeasibleResult result;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    result.nodes += leaves[i].nodes_before + outcomes[i].nodes;
    if (outcomes[i].found) {
      result.status = Feasibility::Feasible;
      result.coloring = std::move(outcomes[i].coloring);
      return result;
    }
    if (outcomes[i].exceeded) {
      result.status = Feasibility::BudgetExceeded;
      return result;
    }
  }
  result.nodes += enumerator.tail_nodes;
  result.status = Feasibility::Infeasible;
  return result;
}

}  // namespace

FeasibleResult feasible_serial(const GapSet& S, int k, int r, int n, const SearchBudget& budget) {
  check_args(k, r, n);
  const auto gaps = materialize(S, n);
  Limits limits(budget);
  Search search(n, r, k, gaps, limits);
  FeasibleResult result;
  const bool found = search.run(-1, [] { return false; });
  result.nodes = search.nodes();
  if (found) {
    result.status = Feasibility::Feasible;
    result.coloring = search.coloring();
  } else {
    result.status = search.exceeded() ? Feasibility::BudgetExceeded : Feasibility::Infeasible;
  }
  return result;
}

FeasibleResult feasible(const GapSet& S, int k, int r, int n, const SearchBudget& budget,
                        const SolverOptions& options) {
  check_args(k, r, n);
  if (options.serial || options.workers <= 1 || n == 0) return feasible_serial(S, k, r, n, budget);
  const auto gaps = materialize(S, n);
  Limits limits(budget);
  return parallel_feasible(gaps, k, r, n, limits, options.workers);
}

std::string_view status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Exact: return "Exact";
    case SolveStatus::FeasibleAt: return "FeasibleAt";
    case SolveStatus::NotFoundUpTo: return "NotFoundUpTo";
    case SolveStatus::Timeout: return "Timeout";
  }
  return "?";
}

SolveResult compute_f(const GapSet& S, int k, int r, int n_max, const SearchBudget& budget,
                      const SolverOptions& options) {
  if (k < 1 || r < 1) throw std::invalid_argument("compute_f: need k >= 1, r >= 1");
  const auto t0 = Clock::now();
  std::optional<Clock::time_point> deadline;
  if (budget.max_time) deadline = t0 + *budget.max_time;

  SolveResult res;
  res.spec = S.spec();
  res.k = k;
  res.r = r;

  auto remaining = [&]() {
    SearchBudget b;
    if (budget.max_nodes) b.max_nodes = *budget.max_nodes > res.nodes ? *budget.max_nodes - res.nodes : 0;
    if (deadline) {
      b.max_time = std::max(std::chrono::milliseconds(0),
                            std::chrono::duration_cast<std::chrono::milliseconds>(*deadline - Clock::now()));
    }
    return b;
  };
  auto finish = [&](SolveStatus status, int value) {
    res.status = status;
    res.value = value;
    res.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
    return res;
  };
  // Any coloring of fewer than k positions is trivially k-term free.
  auto trivial = [&](int m) { return Coloring(std::vector<Color>(static_cast<std::size_t>(std::max(m, 0)), 0), r); };

  int start = k;
  if (const auto lb = proven_lower_bound(S, k, r)) start = std::max(start, *lb);
  res.start = start;

  res.certificate = trivial(k - 1);
  if (start - 1 >= k) {
    auto first = feasible(S, k, r, start - 1, remaining(), options);
    res.nodes += first.nodes;
    if (first.status == Feasibility::BudgetExceeded) return finish(SolveStatus::Timeout, k - 1);
    if (first.status == Feasibility::Feasible) {
      res.certificate = std::move(*first.coloring);
    } else {
      // A registered lower bound was contradicted; fall back to a plain scan.
      start = k;
      res.start = start;
    }
  }

  for (int n = start; n <= n_max; ++n) {
    auto step = feasible(S, k, r, n, remaining(), options);
    res.nodes += step.nodes;
    switch (step.status) {
      case Feasibility::Infeasible:
        return finish(SolveStatus::Exact, n);
      case Feasibility::BudgetExceeded:
        return finish(SolveStatus::Timeout, n - 1);
      case Feasibility::Feasible:
        res.certificate = std::move(*step.coloring);
        break;
    }
  }
  return finish(SolveStatus::NotFoundUpTo, n_max);
}

bool verify_certificate(const SolveResult& result, const GapSet& S, int k, int r, const SolverOptions& options) {
  if (result.status != SolveStatus::Exact) return false;
  const Coloring& cert = result.certificate;
  if (cert.size() != result.value - 1 || cert.num_colors() != r) return false;
  if (has_k_term(cert, S, k)) return false;
  return feasible(S, k, r, result.value, {}, options).status == Feasibility::Infeasible;
}

int workers_from_env(int fallback) {
  if (const char* env = std::getenv("DIFFSEQ_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<int>(v);
  }
  return fallback;
}

}  // namespace diffseq
