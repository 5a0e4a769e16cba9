#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace diffseq {

/// Primes p_1 < ... < p_k whose gaps all lie in P + t.
struct PrimeChain {
  std::int64_t t = 1;
  std::vector<std::int64_t> elements;
  std::vector<std::int64_t> gaps;
  std::vector<std::int64_t> gap_witnesses;  // gaps[i] - t, each prime

  /// Builds gaps and witnesses from t and the elements.
  static PrimeChain from_elements(std::int64_t t, std::vector<std::int64_t> elements);
};

enum class ChainStrategy { Dfs, Bfs };

std::string_view strategy_name(ChainStrategy s);
ChainStrategy parse_strategy(std::string_view text);

struct ChainSearchResult {
  std::optional<PrimeChain> chain;  // empty: not found up to bound
  std::int64_t bound = 0;
  ChainStrategy strategy = ChainStrategy::Dfs;
};

/// Finds a k-term chain of primes <= bound with every gap in P + t.
///   Dfs: lexicographically least chain (backtracking from the smallest prime).
///   Bfs: chain with the least largest element (deepening over that element).
/// Throws std::invalid_argument for even or non-positive t, or k < 2.
ChainSearchResult find_chain(std::int64_t t, int k, std::int64_t bound, ChainStrategy strategy = ChainStrategy::Dfs);

/// Re-tests every element and every gap - t by trial division.
bool verify_chain(const PrimeChain& chain);

/// Offsets b_1 = 0 < b_2 < ... with b_{i+1} = b_i + q_i + t.
struct OffsetSystem {
  std::vector<std::int64_t> offsets;
  std::vector<std::int64_t> source;
  std::int64_t t = 0;

  static OffsetSystem from_primes(std::vector<std::int64_t> qs, std::int64_t t);
  static OffsetSystem from_offsets(std::vector<std::int64_t> offsets);
};

/// Some residue h mod p makes every h + b_i nonzero mod p.
bool is_p_admissible(const OffsetSystem& sys, std::int64_t p);

/// is_p_admissible for every prime p < k.
bool is_admissible_small_primes(const OffsetSystem& sys, int k);

}  // namespace diffseq
