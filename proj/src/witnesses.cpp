#include "diffseq/witnesses.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace diffseq {

Coloring expand(const PatternColoring& p, int r) {
  if (p.repeats < 0) throw std::invalid_argument("pattern repeats must be non-negative");
  std::string text = p.prefix;
  text.reserve(p.length());
  for (int i = 0; i < p.repeats; ++i) text += p.block;
  text += p.suffix;
  return Coloring::parse(text, r);
}

namespace {

std::string repeat(std::string_view s, std::int64_t times) {
  std::string out;
  for (std::int64_t i = 0; i < times; ++i) out += s;
  return out;
}

std::int64_t param(const std::vector<std::int64_t>& params, std::size_t i, std::int64_t fallback) {
  return i < params.size() ? params[i] : fallback;
}

void need(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

void need_count(const std::vector<std::int64_t>& params, std::size_t lo, std::size_t hi, std::string_view name) {
  if (params.size() < lo || params.size() > hi) {
    throw DomainError(std::string(name) + ": expected " + std::to_string(lo) +
                      (lo == hi ? "" : "-" + std::to_string(hi)) + " parameter(s)");
  }
}

Witness avoidance(std::string name, std::vector<std::int64_t> params, Coloring c, const GapSet& S, int k) {
  Witness w{std::move(name), std::move(params), std::move(c), {}};
  w.claim.set_spec = S.spec();
  w.claim.bound = k;
  w.claim.text = "no monochromatic " + std::to_string(k) + "-term " + S.spec() + "-diffsequence";
  return w;
}

// Longest chain per color, with an optional domain mask (index x, 1-based).
std::vector<int> per_color(const Coloring& c, std::span<const int> gaps, const std::vector<bool>* mask) {
  std::vector<int> best(static_cast<std::size_t>(c.num_colors()), 0);
  std::vector<int> chain(static_cast<std::size_t>(c.size()) + 1, 0);
  for (int i = 1; i <= c.size(); ++i) {
    if (mask && !(*mask)[i]) continue;
    int b = 0;
    for (int s : gaps) {
      if (s >= i) break;
      if (c.at(i - s) == c.at(i)) b = std::max(b, chain[i - s]);
    }
    chain[i] = b + 1;
    best[c.at(i)] = std::max(best[c.at(i)], chain[i]);
  }
  return best;
}

}  // namespace

std::vector<WitnessInfo> witness_catalog() {
  return {
      {"chi_k", "k>=5", "(10010110)^(k-3) for powers(2); no k-term chain"},
      {"C_k", "k even >=2", "1(000111)^((k-2)/2)0 for odds_plus_two; no k-term chain"},
      {"D_k", "k odd >=3", "11(000111)^((k-3)/2)00 for odds_plus_two; no k-term chain"},
      {"thm34", "k>=2", "mod-4 coloring of [1,4k-6] (0 on 2,3; 1 on 0,1) for s_m(3); no k-term chain"},
      {"thm35", "m>=5, k>=2", "(10^(m-1))^a(1^(m-1)0)^a 0^e 1^e, a=floor(k/m), e=k-a(m-1)-1, for s_m(m)"},
      {"prop36", "k>=3", "1(10011000110011)^... for {x: 3,4 do not divide x}; no k-term chain"},
      {"mod_block", "m>=2 [N=1000]", "x mod m on [1,N]; no 2-term chain for any S without multiples of m"},
      {"lemma25", "m>=2 [i=1 [N=100]]", "0 iff m | x on [1,N]; no m-term chain for residues(m; i)"},
      {"p_not_3acc", "N>=1", "multiples of 9 green, other evens red, other odds blue; primes chains < 9 (green < 2)"},
      {"remark1", "N>=1", "2-coloring of odds_plus_two (1 iff x = 1 mod 4 or x = 2); no 4-term chain inside the set"},
  };
}

Witness named_witness(std::string_view name, const std::vector<std::int64_t>& params) {
  const std::string n(name);
  if (n == "chi_k") {
    need_count(params, 1, 1, n);
    const auto k = params[0];
    need(k >= 5, "chi_k requires k >= 5");
    auto c = expand({"", "10010110", static_cast<int>(k - 3), ""}, 2);
    return avoidance(n, params, std::move(c), GapSet::powers(2), static_cast<int>(k));
  }
  if (n == "C_k") {
    need_count(params, 1, 1, n);
    const auto k = params[0];
    need(k >= 2 && k % 2 == 0, "C_k requires even k >= 2");
    auto c = expand({"1", "000111", static_cast<int>((k - 2) / 2), "0"}, 2);
    return avoidance(n, params, std::move(c), GapSet::odds_plus_two(), static_cast<int>(k));
  }
  if (n == "D_k") {
    need_count(params, 1, 1, n);
    const auto k = params[0];
    need(k >= 3 && k % 2 == 1, "D_k requires odd k >= 3");
    auto c = expand({"11", "000111", static_cast<int>((k - 3) / 2), "00"}, 2);
    return avoidance(n, params, std::move(c), GapSet::odds_plus_two(), static_cast<int>(k));
  }
  if (n == "thm34") {
    need_count(params, 1, 1, n);
    const auto k = params[0];
    need(k >= 2, "thm34 requires k >= 2");
    std::vector<Color> colors;
    for (std::int64_t i = 1; i <= 4 * k - 6; ++i) colors.push_back(i % 4 == 2 || i % 4 == 3 ? 0 : 1);
    return avoidance(n, params, Coloring(std::move(colors), 2), GapSet::s_m(3), static_cast<int>(k));
  }
  if (n == "thm35") {
    need_count(params, 2, 2, n);
    const auto m = params[0];
    const auto k = params[1];
    need(m >= 5, "thm35 requires m >= 5");
    need(k >= 2, "thm35 requires k >= 2");
    const auto a = k / m;
    const auto e = k - a * (m - 1) - 1;
    const std::string text = repeat("1" + repeat("0", m - 1), a) + repeat(repeat("1", m - 1) + "0", a) +
                             repeat("0", e) + repeat("1", e);
    return avoidance(n, params, Coloring::parse(text, 2), GapSet::s_m(m), static_cast<int>(k));
  }
  if (n == "prop36") {
    need_count(params, 1, 1, n);
    const auto k = params[0];
    need(k >= 3, "prop36 requires k >= 3");
    const std::string block = "10011000110011";
    auto c = k % 2 == 0 ? expand({"1", block, static_cast<int>((k - 2) / 2), ""}, 2)
                        : expand({"1", block, static_cast<int>((k - 3) / 2), "1001100"}, 2);
    return avoidance(n, params, std::move(c), not_div_3_or_4(), static_cast<int>(k));
  }
  if (n == "mod_block") {
    need_count(params, 1, 2, n);
    const auto m = params[0];
    const auto len = param(params, 1, 1000);
    need(m >= 2 && m <= kMaxColors, "mod_block requires 2 <= m <= 36");
    need(len >= 1, "mod_block requires N >= 1");
    std::vector<Color> colors;
    for (std::int64_t x = 1; x <= len; ++x) colors.push_back(static_cast<Color>(x % m));
    Witness w = avoidance(n, params, Coloring(std::move(colors), static_cast<int>(m)), GapSet::s_m(m), 2);
    w.claim.text += " (holds for every S without multiples of " + std::to_string(m) + ")";
    return w;
  }
  if (n == "lemma25") {
    need_count(params, 1, 3, n);
    const auto m = params[0];
    const auto i = param(params, 1, 1);
    const auto len = param(params, 2, 100);
    need(m >= 2, "lemma25 requires m >= 2");
    need(i >= 1 && i < m && std::gcd(i, m) == 1, "lemma25 requires 1 <= i < m with gcd(i, m) = 1");
    need(len >= 1, "lemma25 requires N >= 1");
    std::vector<Color> colors;
    for (std::int64_t x = 1; x <= len; ++x) colors.push_back(x % m == 0 ? 0 : 1);
    return avoidance(n, params, Coloring(std::move(colors), 2), GapSet::residues(m, {i}), static_cast<int>(m));
  }
  if (n == "p_not_3acc") {
    need_count(params, 1, 1, n);
    const auto len = params[0];
    need(len >= 1, "p_not_3acc requires N >= 1");
    // 0 = red (even), 1 = blue (odd), 2 = green (multiple of 9).
    std::vector<Color> colors;
    for (std::int64_t x = 1; x <= len; ++x) colors.push_back(x % 9 == 0 ? 2 : (x % 2 == 0 ? 0 : 1));
    Witness w = avoidance(n, params, Coloring(std::move(colors), 3), GapSet::primes(), 9);
    w.claim.color_bounds = {9, 9, 2};
    w.claim.text = "red and blue prime-gap chains have fewer than 9 terms, green fewer than 2";
    return w;
  }
  if (n == "remark1") {
    need_count(params, 1, 1, n);
    const auto len = params[0];
    need(len >= 1, "remark1 requires N >= 1");
    std::vector<Color> colors;
    for (std::int64_t x = 1; x <= len; ++x) colors.push_back(x % 4 == 1 || x == 2 ? 1 : 0);
    const GapSet S = GapSet::odds_plus_two();
    Witness w = avoidance(n, params, Coloring(std::move(colors), 2), S, 4);
    w.claim.domain_spec = S.spec();
    w.claim.text += " with every element in " + S.spec();
    return w;
  }
  throw std::invalid_argument("unknown witness name '" + n + "'");
}

ClaimCheck check_claim(const Witness& w) {
  const GapSet S = make_set(w.claim.set_spec);
  ClaimCheck out;
  if (w.claim.domain_spec) {
    const RestrictedColoring rc(w.coloring, make_set(*w.claim.domain_spec));
    out.longest_per_color = rc.longest_per_color(S);
  } else {
    out.longest_per_color = longest_per_color(w.coloring, S);
  }
  out.longest = out.longest_per_color.empty()
                    ? 0
                    : *std::max_element(out.longest_per_color.begin(), out.longest_per_color.end());
  out.pass = out.longest < w.claim.bound;
  for (std::size_t c = 0; c < w.claim.color_bounds.size() && c < out.longest_per_color.size(); ++c) {
    out.pass = out.pass && out.longest_per_color[c] < w.claim.color_bounds[c];
  }
  return out;
}

Coloring product_coloring(const Coloring& c1, const Coloring& c2) {
  if (c1.size() != c2.size()) throw std::invalid_argument("product_coloring: length mismatch");
  const int r = c1.num_colors() * c2.num_colors();
  if (r > kMaxColors) throw std::invalid_argument("product_coloring: more than 36 colors");
  std::vector<Color> colors;
  colors.reserve(static_cast<std::size_t>(c1.size()));
  for (int x = 1; x <= c1.size(); ++x) colors.push_back(static_cast<Color>(c1.at(x) * c2.num_colors() + c2.at(x)));
  return Coloring(std::move(colors), r);
}

RestrictedColoring::RestrictedColoring(Coloring c, const GapSet& domain) : coloring_(std::move(c)) {
  positions_ = domain.enumerate(coloring_.size());
}

LongestResult RestrictedColoring::longest(const GapSet& S) const {
  const int n = coloring_.size();
  const auto gaps = materialize(S, n);
  std::vector<bool> in(static_cast<std::size_t>(n) + 1, false);
  for (int x : positions_) in[x] = true;

  std::vector<int> chain(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> back(static_cast<std::size_t>(n) + 1, 0);
  LongestResult out;
  int best_end = 0;
  for (int x : positions_) {
    int best = 0, pred = 0;
    for (int s : gaps) {
      if (s >= x) break;
      const int y = x - s;
      if (in[y] && coloring_.at(y) == coloring_.at(x) && chain[y] >= best) {
        best = chain[y];
        pred = y;
      }
    }
    chain[x] = best + 1;
    back[x] = best > 0 ? pred : 0;
    if (best_end == 0 || chain[x] > chain[best_end]) best_end = x;
  }
  if (best_end == 0) return out;
  out.length = chain[best_end];
  out.witness.color = coloring_.at(best_end);
  for (int x = best_end; x != 0; x = back[x]) out.witness.positions.push_back(x);
  std::reverse(out.witness.positions.begin(), out.witness.positions.end());
  return out;
}

std::vector<int> RestrictedColoring::longest_per_color(const GapSet& S) const {
  std::vector<bool> in(static_cast<std::size_t>(coloring_.size()) + 1, false);
  for (int x : positions_) in[x] = true;
  const auto gaps = materialize(S, coloring_.size());
  return per_color(coloring_, gaps, &in);
}

RestrictedColoring subset_elements_coloring(const Coloring& c, const GapSet& domain) { return RestrictedColoring(c, domain); }

std::vector<int> longest_per_color(const Coloring& c, const GapSet& S) {
  const auto gaps = materialize(S, c.size());
  return per_color(c, gaps, nullptr);
}

}  // namespace diffseq
