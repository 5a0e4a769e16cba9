#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "diffseq/coloring.hpp"
#include "diffseq/gapset.hpp"

namespace diffseq {

/// S intersected with [1, n-1], ascending. The only part of S an interval of
/// length n can use.
std::vector<int> materialize(const GapSet& S, int n);

struct DiffseqWitness {
  std::vector<int> positions;
  Color color = 0;
};

struct LongestResult {
  int length = 0;
  DiffseqWitness witness;
};

/// Longest monochromatic S-diffsequence in c. O(n * |S cap [1,n-1]|).
/// Ties: the witness ends at the smallest position attaining the maximum and
/// each step takes the smallest predecessor attaining the maximum.
LongestResult longest_mono_diffseq(const Coloring& c, std::span<const int> gaps);
LongestResult longest_mono_diffseq(const Coloring& c, const GapSet& S);

/// True iff c contains a monochromatic k-term S-diffsequence. Stops at the
/// first position whose chain reaches k.
bool has_k_term(const Coloring& c, std::span<const int> gaps, int k);
bool has_k_term(const Coloring& c, const GapSet& S, int k);

/// Independent check that a witness is a same-colored S-diffsequence of c.
bool is_valid_witness(const Coloring& c, const GapSet& S, const DiffseqWitness& w);

/// Exhaustive oracle: enumerates every subset of [1,n] and keeps the longest
/// monochromatic one with all gaps in S. No dynamic programming.
inline constexpr int kBruteForceMaxN = 20;
int brute_force_longest(const Coloring& c, const GapSet& S);

struct ExtendResult {
  int chain = 0;       // L at the newly colored position
  bool prune = false;  // chain >= k
  bool doomed = false; // some later position has every color at chain >= k
};

/// Incremental longest-chain state for colorings built left to right.
///
/// best(j, c) holds the largest L[i] over colored i < j with color c and
/// j - i in S, so L at the next position is 1 + best(next, color). Each extend
/// pushes the new L forward to every i + s; retract pops exactly those writes.
class ChainState {
 public:
  ChainState(int n, int r, int k, std::span<const int> gaps);

  int n() const { return n_; }
  int num_colors() const { return r_; }
  int k() const { return k_; }
  int assigned() const { return static_cast<int>(colors_.size()); }

  /// Colors position assigned()+1.
  ExtendResult extend(Color color);
  /// Undoes the most recent extend.
  void retract();

  /// L value of colored position x.
  int chain_at(int x) const { return chains_[static_cast<std::size_t>(x - 1)]; }
  /// Chain length position x (not yet colored) would get with color c.
  int would_be(int x, Color c) const { return 1 + best_[index(x, c)]; }

  Coloring coloring() const;
  std::span<const Color> colors() const { return colors_; }

 private:
  std::size_t index(int x, Color c) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(r_) + c;
  }
  bool all_blocked(int x) const;

  struct Write {
    std::uint32_t slot;
    std::int32_t old_value;
  };

  int n_, r_, k_;
  std::vector<int> gaps_;
  std::vector<int> best_;
  std::vector<Color> colors_;
  std::vector<int> chains_;
  std::vector<Write> trail_;
  std::vector<std::size_t> marks_;
};

}  // namespace diffseq
