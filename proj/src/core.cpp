#include "diffseq/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace diffseq {

std::vector<int> materialize(const GapSet& S, int n) { return S.enumerate(n - 1); }

LongestResult longest_mono_diffseq(const Coloring& c, std::span<const int> gaps) {
  const int n = c.size();
  LongestResult out;
  if (n == 0) return out;

  std::vector<int> chain(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> back(static_cast<std::size_t>(n) + 1, 0);
  int best_end = 1;
  for (int i = 1; i <= n; ++i) {
    const Color ci = c.at(i);
    int best = 0;
    int pred = 0;
    // Gaps ascend, so predecessors i - s descend; >= keeps the smallest.
    for (int s : gaps) {
      if (s >= i) break;
      const int j = i - s;
      if (c.at(j) == ci && chain[j] >= best) {
        best = chain[j];
        pred = j;
      }
    }
    chain[i] = best + 1;
    back[i] = best > 0 ? pred : 0;
    if (chain[i] > chain[best_end]) best_end = i;
  }

  out.length = chain[best_end];
  out.witness.color = c.at(best_end);
  for (int x = best_end; x != 0; x = back[x]) out.witness.positions.push_back(x);
  std::reverse(out.witness.positions.begin(), out.witness.positions.end());
  return out;
}

LongestResult longest_mono_diffseq(const Coloring& c, const GapSet& S) {
  const auto gaps = materialize(S, c.size());
  return longest_mono_diffseq(c, gaps);
}

bool has_k_term(const Coloring& c, std::span<const int> gaps, int k) {
  const int n = c.size();
  if (k <= 0) return true;
  if (n == 0) return false;
  if (k == 1) return true;
  std::vector<int> chain(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    const Color ci = c.at(i);
    int best = 0;
    for (int s : gaps) {
      if (s >= i) break;
      if (c.at(i - s) == ci) best = std::max(best, chain[i - s]);
    }
    chain[i] = best + 1;
    if (chain[i] >= k) return true;
  }
  return false;
}

bool has_k_term(const Coloring& c, const GapSet& S, int k) {
  const auto gaps = materialize(S, c.size());
  return has_k_term(c, gaps, k);
}

bool is_valid_witness(const Coloring& c, const GapSet& S, const DiffseqWitness& w) {
  if (w.positions.empty()) return false;
  for (std::size_t i = 0; i < w.positions.size(); ++i) {
    const int x = w.positions[i];
    if (x < 1 || x > c.size() || c.at(x) != w.color) return false;
    if (i > 0 && !S.contains(x - w.positions[i - 1])) return false;
  }
  return true;
}

int brute_force_longest(const Coloring& c, const GapSet& S) {
  const int n = c.size();
  if (n > kBruteForceMaxN) throw std::invalid_argument("brute_force_longest: n > 20");
  int best = 0;
  std::vector<int> members;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    members.clear();
    for (int b = 0; b < n; ++b) {
      if (mask & (1u << b)) members.push_back(b + 1);
    }
    if (static_cast<int>(members.size()) <= best) continue;
    bool ok = true;
    for (std::size_t i = 1; i < members.size() && ok; ++i) {
      ok = c.at(members[i]) == c.at(members[0]) && S.contains(members[i] - members[i - 1]);
    }
    if (ok) best = static_cast<int>(members.size());
  }
  return best;
}

ChainState::ChainState(int n, int r, int k, std::span<const int> gaps)
    : n_(n), r_(r), k_(k), gaps_(gaps.begin(), gaps.end()) {
  if (n < 0 || r < 1 || k < 1) throw std::invalid_argument("ChainState: need n >= 0, r >= 1, k >= 1");
  best_.assign((static_cast<std::size_t>(n) + 1) * static_cast<std::size_t>(r), 0);
  colors_.reserve(static_cast<std::size_t>(n));
  chains_.reserve(static_cast<std::size_t>(n));
  marks_.reserve(static_cast<std::size_t>(n));
}

bool ChainState::all_blocked(int x) const {
  for (int c = 0; c < r_; ++c) {
    if (best_[index(x, static_cast<Color>(c))] < k_ - 1) return false;
  }
  return true;
}

ExtendResult ChainState::extend(Color color) {
  const int x = assigned() + 1;
  if (x > n_) throw std::logic_error("ChainState::extend past the end of the interval");
  ExtendResult res;
  res.chain = 1 + best_[index(x, color)];
  res.prune = res.chain >= k_;

  marks_.push_back(trail_.size());
  colors_.push_back(color);
  chains_.push_back(res.chain);
  for (int s : gaps_) {
    const int y = x + s;
    if (y > n_) break;
    const std::size_t slot = index(y, color);
    if (best_[slot] < res.chain) {
      trail_.push_back({static_cast<std::uint32_t>(slot), best_[slot]});
      best_[slot] = res.chain;
      if (res.chain >= k_ - 1 && !res.doomed) res.doomed = all_blocked(y);
    }
  }
  return res;
}

void ChainState::retract() {
  if (marks_.empty()) throw std::logic_error("ChainState::retract with nothing to undo");
  const std::size_t mark = marks_.back();
  marks_.pop_back();
  while (trail_.size() > mark) {
    best_[trail_.back().slot] = trail_.back().old_value;
    trail_.pop_back();
  }
  colors_.pop_back();
  chains_.pop_back();
}

Coloring ChainState::coloring() const { return Coloring(colors_, r_); }

}  // namespace diffseq
