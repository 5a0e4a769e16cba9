#include "diffseq/primechain.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "diffseq/primes.hpp"

namespace diffseq {

PrimeChain PrimeChain::from_elements(std::int64_t t, std::vector<std::int64_t> elements) {
  PrimeChain c;
  c.t = t;
  c.elements = std::move(elements);
  for (std::size_t i = 1; i < c.elements.size(); ++i) {
    c.gaps.push_back(c.elements[i] - c.elements[i - 1]);
    c.gap_witnesses.push_back(c.gaps.back() - t);
  }
  return c;
}

std::string_view strategy_name(ChainStrategy s) { return s == ChainStrategy::Dfs ? "dfs" : "bfs"; }

ChainStrategy parse_strategy(std::string_view text) {
  if (text == "dfs") return ChainStrategy::Dfs;
  if (text == "bfs") return ChainStrategy::Bfs;
  throw std::invalid_argument("unknown chain strategy '" + std::string(text) + "'");
}

namespace {

struct PrimeIndex {
  std::vector<std::int64_t> primes;
  std::vector<bool> flags;

  explicit PrimeIndex(std::int64_t bound) {
    for (auto p : sieve(static_cast<std::uint64_t>(std::max<std::int64_t>(bound, 2)))) {
      if (static_cast<std::int64_t>(p) <= bound) primes.push_back(static_cast<std::int64_t>(p));
    }
    flags.assign(static_cast<std::size_t>(std::max<std::int64_t>(bound, 2)) + 1, false);
    for (auto p : primes) flags[static_cast<std::size_t>(p)] = true;
  }

  bool is_prime(std::int64_t x) const { return x >= 0 && x < static_cast<std::int64_t>(flags.size()) && flags[x]; }
};

class DfsChain {
 public:
  DfsChain(const PrimeIndex& idx, std::int64_t t, std::int64_t bound) : idx_(idx), t_(t), bound_(bound) {}

  // Extends `path` (ending at p) by `need` - 1 more elements.
  bool extend(std::int64_t p, int need, std::vector<std::int64_t>& path) {
    if (need <= 1) return true;
    if (auto it = failed_.find(p); it != failed_.end() && it->second <= need) return false;
    for (auto q : idx_.primes) {
      const std::int64_t next = p + q + t_;
      if (next > bound_) break;
      if (!idx_.is_prime(next)) continue;
      path.push_back(next);
      if (extend(next, need - 1, path)) return true;
      path.pop_back();
    }
    auto [it, inserted] = failed_.emplace(p, need);
    if (!inserted) it->second = std::min(it->second, need);
    return false;
  }

 private:
  const PrimeIndex& idx_;
  std::int64_t t_;
  std::int64_t bound_;
  // Smallest chain length known to be unreachable from a prime.
  std::unordered_map<std::int64_t, int> failed_;
};

std::optional<std::vector<std::int64_t>> dfs_search(const PrimeIndex& idx, std::int64_t t, int k, std::int64_t bound) {
  DfsChain dfs(idx, t, bound);
  std::vector<std::int64_t> path;
  for (auto p : idx.primes) {
    path.assign(1, p);
    if (dfs.extend(p, k, path)) return path;
  }
  return std::nullopt;
}

// Primes in ascending order; the first whose longest incoming chain reaches
// k ends a chain with the least possible largest element.
std::optional<std::vector<std::int64_t>> bfs_search(const PrimeIndex& idx, std::int64_t t, int k) {
  std::unordered_map<std::int64_t, std::pair<int, std::int64_t>> chain;  // p -> (length, predecessor)
  for (auto p : idx.primes) {
    int best = 0;
    std::int64_t pred = 0;
    for (auto q : idx.primes) {
      const std::int64_t prev = p - q - t;
      if (prev < 2) break;
      if (!idx.is_prime(prev)) continue;
      const int len = chain.at(prev).first;
      // Predecessors descend as q ascends; >= keeps the smallest on ties.
      if (len >= best) {
        best = len;
        pred = prev;
      }
    }
    chain[p] = {std::min(best + 1, k), best > 0 ? pred : 0};
    if (best + 1 >= k) {
      std::vector<std::int64_t> path;
      for (std::int64_t x = p; x != 0 && static_cast<int>(path.size()) < k; x = chain.at(x).second) path.push_back(x);
      std::reverse(path.begin(), path.end());
      return path;
    }
  }
  return std::nullopt;
}

}  // namespace

ChainSearchResult find_chain(std::int64_t t, int k, std::int64_t bound, ChainStrategy strategy) {
  if (t < 1 || t % 2 == 0) throw std::invalid_argument("find_chain: t must be an odd positive integer");
  if (k < 2) throw std::invalid_argument("find_chain: k must be >= 2");
  if (bound < 2) throw std::invalid_argument("find_chain: bound must be >= 2");

  const PrimeIndex idx(bound);
  ChainSearchResult res;
  res.bound = bound;
  res.strategy = strategy;
  auto elements = strategy == ChainStrategy::Dfs ? dfs_search(idx, t, k, bound) : bfs_search(idx, t, k);
  if (elements) res.chain = PrimeChain::from_elements(t, std::move(*elements));
  return res;
}

bool verify_chain(const PrimeChain& chain) {
  if (chain.elements.empty()) return false;
  if (chain.gaps.size() + 1 != chain.elements.size() || chain.gap_witnesses.size() != chain.gaps.size()) return false;
  for (std::size_t i = 0; i < chain.elements.size(); ++i) {
    if (chain.elements[i] < 2 || !is_prime_trial(static_cast<std::uint64_t>(chain.elements[i]))) return false;
    if (i == 0) continue;
    const std::int64_t gap = chain.elements[i] - chain.elements[i - 1];
    if (gap <= 0 || chain.gaps[i - 1] != gap) return false;
    const std::int64_t q = gap - chain.t;
    if (chain.gap_witnesses[i - 1] != q || q < 2 || !is_prime_trial(static_cast<std::uint64_t>(q))) return false;
  }
  return true;
}

OffsetSystem OffsetSystem::from_primes(std::vector<std::int64_t> qs, std::int64_t t) {
  OffsetSystem sys;
  sys.t = t;
  sys.offsets.push_back(0);
  for (auto q : qs) sys.offsets.push_back(sys.offsets.back() + q + t);
  sys.source = std::move(qs);
  return sys;
}

OffsetSystem OffsetSystem::from_offsets(std::vector<std::int64_t> offsets) {
  OffsetSystem sys;
  sys.offsets = std::move(offsets);
  return sys;
}

bool is_p_admissible(const OffsetSystem& sys, std::int64_t p) {
  if (p < 2 || !is_prime_trial(static_cast<std::uint64_t>(p))) throw std::invalid_argument("is_p_admissible: p must be prime");
  for (std::int64_t h = 0; h < p; ++h) {
    bool avoids = true;
    for (auto b : sys.offsets) {
      if (((h + b) % p + p) % p == 0) {
        avoids = false;
        break;
      }
    }
    if (avoids) return true;
  }
  return false;
}

bool is_admissible_small_primes(const OffsetSystem& sys, int k) {
  for (std::int64_t p = 2; p < k; ++p) {
    if (is_prime_trial(static_cast<std::uint64_t>(p)) && !is_p_admissible(sys, p)) return false;
  }
  return true;
}

}  // namespace diffseq
