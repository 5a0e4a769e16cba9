#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diffseq/gapset.hpp"

namespace diffseq {

/// 3k-4 for odd k, 3k-3 for even k (k >= 2).
std::int64_t g(int k);

/// F_1 = F_2 = 1.
std::int64_t fib(int i);

/// f(jS,k;r) given M = f(S,k;r).
std::int64_t scaled_value(std::int64_t M, std::int64_t j);

/// a = floor(k/m), checked against a*m <= k < (a+1)*m.
int sm_block_count(int m, int k);

/// Lower bound 2k+2a-1 for f(S_m,k;2), m >= 5.
std::int64_t sm_lower(int m, int k);

/// Conjectured f(S_6,k;2) for k >= 2, by k mod 4.
std::int64_t s6_conjecture(int k);

enum class BoundKind { Exact, Lower, Upper, Conjecture };

std::string_view bound_kind_name(BoundKind kind);

struct BoundEntry {
  std::string id;
  std::string family;
  std::string params;
  std::string k_range;
  int r = 2;
  BoundKind kind = BoundKind::Lower;
  std::string formula;
  std::string citation;
  std::function<bool(const GapSet&, int k)> applies;
  std::function<std::optional<std::int64_t>(const GapSet&, int k)> value;
};

/// Every registered formula, in a fixed order.
const std::vector<BoundEntry>& bound_registry();

struct Bounds {
  std::optional<std::int64_t> lower;
  std::optional<std::int64_t> upper;
  std::optional<std::int64_t> conjecture;
  bool exact = false;
  std::vector<std::string> formula_ids;
};

/// Tightest registered bounds for f(S,k;r). Conjectures are reported
/// separately and never feed lower/upper. Unknown families give empty bounds.
Bounds bound(const GapSet& S, int k, int r);

/// Proven lower bound only; what the solver may start from.
std::optional<int> proven_lower_bound(const GapSet& S, int k, int r);

/// family,params,k-range,kind,formula,citation
std::string registry_csv();

}  // namespace diffseq
