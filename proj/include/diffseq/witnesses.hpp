#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diffseq/coloring.hpp"
#include "diffseq/core.hpp"
#include "diffseq/gapset.hpp"

namespace diffseq {

/// prefix . block^repeats . suffix
struct PatternColoring {
  std::string prefix;
  std::string block;
  int repeats = 0;
  std::string suffix;

  std::size_t length() const { return prefix.size() + static_cast<std::size_t>(repeats) * block.size() + suffix.size(); }
};

Coloring expand(const PatternColoring& p, int r);

/// Machine-checkable statement attached to a witness coloring: every
/// monochromatic S-diffsequence (with elements in `domain`, if set) has
/// fewer than `bound` terms, and fewer than color_bounds[c] terms in color c
/// where given.
struct WitnessClaim {
  std::string set_spec;
  int bound = 0;
  std::vector<int> color_bounds;
  std::optional<std::string> domain_spec;
  std::string text;
};

struct Witness {
  std::string name;
  std::vector<std::int64_t> params;
  Coloring coloring;
  WitnessClaim claim;
};

struct WitnessInfo {
  std::string name;
  std::string params;
  std::string description;
};

/// Names accepted by named_witness, with parameter conventions.
std::vector<WitnessInfo> witness_catalog();

/// Builds a named coloring. Throws std::invalid_argument for an unknown name
/// and DomainError for parameters out of range. Parameters:
///   chi_k(k>=5)  C_k(k even >=2)  D_k(k odd >=3)  thm34(k>=2)
///   thm35(m>=5, k>=2)  prop36(k>=3)  mod_block(m>=2 [, N=1000])
///   lemma25(m>=2 [, i=1 [, N=100]])  p_not_3acc(N>=1)  remark1(N>=1)
Witness named_witness(std::string_view name, const std::vector<std::int64_t>& params);

struct ClaimCheck {
  bool pass = false;
  int longest = 0;
  std::vector<int> longest_per_color;
};

ClaimCheck check_claim(const Witness& w);

/// color(x) = c1(x) * r2 + c2(x), with r1 * r2 colors.
Coloring product_coloring(const Coloring& c1, const Coloring& c2);

/// Longest-chain queries over a coloring restricted to positions in a domain
/// set: only diffsequences whose elements all lie in the domain count.
class RestrictedColoring {
 public:
  RestrictedColoring(Coloring c, const GapSet& domain);

  const Coloring& coloring() const { return coloring_; }
  const std::vector<int>& positions() const { return positions_; }

  LongestResult longest(const GapSet& S) const;
  /// Longest chain within each color.
  std::vector<int> longest_per_color(const GapSet& S) const;

 private:
  Coloring coloring_;
  std::vector<int> positions_;
};

RestrictedColoring subset_elements_coloring(const Coloring& c, const GapSet& domain);

/// Longest chain of each color over the whole interval.
std::vector<int> longest_per_color(const Coloring& c, const GapSet& S);

}  // namespace diffseq
