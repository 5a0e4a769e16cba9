#include "diffseq/formulas.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace diffseq {

std::int64_t g(int k) {
  if (k < 2) throw std::invalid_argument("g(k) requires k >= 2");
  return k % 2 == 1 ? 3 * static_cast<std::int64_t>(k) - 4 : 3 * static_cast<std::int64_t>(k) - 3;
}

std::int64_t fib(int i) {
  if (i < 1) throw std::invalid_argument("fib(i) requires i >= 1");
  if (i > 92) throw std::overflow_error("fib(i) overflows int64 for i > 92");
  std::int64_t a = 1, b = 1;
  for (int j = 2; j < i; ++j) {
    const std::int64_t next = a + b;
    a = b;
    b = next;
  }
  return i <= 2 ? 1 : b;
}

std::int64_t scaled_value(std::int64_t M, std::int64_t j) {
  if (M < 1 || j < 1) throw std::invalid_argument("scaled_value requires M >= 1, j >= 1");
  return j * (M - 1) + 1;
}

int sm_block_count(int m, int k) {
  const int a = k / m;
  if (!(a * m <= k && k < (a + 1) * m)) throw std::logic_error("sm_block_count: a*m <= k < (a+1)*m violated");
  return a;
}

std::int64_t sm_lower(int m, int k) { return 2 * static_cast<std::int64_t>(k) + 2 * sm_block_count(m, k) - 1; }

std::int64_t s6_conjecture(int k) {
  if (k < 2) throw std::invalid_argument("s6_conjecture requires k >= 2");
  const std::int64_t five_k = 5 * static_cast<std::int64_t>(k);
  switch (k % 4) {
    case 2: return (five_k - 4) / 2;
    case 3: return (five_k - 5) / 2;
    case 0: return (five_k - 6) / 2;
    default: return (five_k - 7) / 2;
  }
}

std::string_view bound_kind_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::Exact: return "exact";
    case BoundKind::Lower: return "lower";
    case BoundKind::Upper: return "upper";
    case BoundKind::Conjecture: return "conjecture";
  }
  return "?";
}

namespace {

bool is_sm(const GapSet& S, std::int64_t m) { return S.kind() == SetKind::SM && S.params()[0] == m; }

bool is_powers_of_two(const GapSet& S) {
  return (S.kind() == SetKind::Powers || S.kind() == SetKind::Thm23) && S.params()[0] == 2;
}

// a^k - a + 1, or nullopt on overflow.
std::optional<std::int64_t> power_bound(std::int64_t a, int k) {
  std::int64_t p = 1;
  for (int i = 0; i < k; ++i) {
    if (p > std::numeric_limits<std::int64_t>::max() / a) return std::nullopt;
    p *= a;
  }
  return p - a + 1;
}

std::vector<BoundEntry> build_registry() {
  using K = BoundKind;
  std::vector<BoundEntry> reg;
  reg.push_back({"sm3_exact", "s_m", "m=3", "k>=2", 2, K::Exact, "4k-5", "two-color exact law for S_3",
                 [](const GapSet& S, int k) { return is_sm(S, 3) && k >= 2; },
                 [](const GapSet&, int k) -> std::optional<std::int64_t> { return 4 * static_cast<std::int64_t>(k) - 5; }});
  reg.push_back({"sm4_exact", "s_m", "m=4", "k>=2", 2, K::Exact, "g(k)", "two-color exact law for S_4",
                 [](const GapSet& S, int k) { return is_sm(S, 4) && k >= 2; },
                 [](const GapSet&, int k) -> std::optional<std::int64_t> { return g(k); }});
  reg.push_back({"sm_small_k_exact", "s_m", "m>=5", "2<=k<m", 2, K::Exact, "2k-1", "S_m law below the modulus",
                 [](const GapSet& S, int k) { return S.kind() == SetKind::SM && S.params()[0] >= 5 && k >= 2 && k < S.params()[0]; },
                 [](const GapSet&, int k) -> std::optional<std::int64_t> { return 2 * static_cast<std::int64_t>(k) - 1; }});
  reg.push_back({"sm_lower", "s_m", "m>=5", "k>=2, a=floor(k/m)", 2, K::Lower, "2k+2a-1", "S_m block-coloring lower bound",
                 [](const GapSet& S, int k) { return S.kind() == SetKind::SM && S.params()[0] >= 5 && k >= 2; },
                 [](const GapSet& S, int k) -> std::optional<std::int64_t> { return sm_lower(static_cast<int>(S.params()[0]), k); }});
  reg.push_back({"powers2_lower", "powers", "a=2", "k>=3", 2, K::Lower, "8(k-3)+1", "(10010110)^(k-3) avoidance coloring",
                 [](const GapSet& S, int k) { return is_powers_of_two(S) && k >= 3; },
                 [](const GapSet&, int k) -> std::optional<std::int64_t> { return 8 * (static_cast<std::int64_t>(k) - 3) + 1; }});
  reg.push_back({"thm23_upper", "thm23", "a>=2", "k>=1", 2, K::Upper, "a^k-a+1", "{(a-1)a^j} u {(a-1)^2 a^j} induction bound",
                 [](const GapSet& S, int k) { return (S.kind() == SetKind::Thm23 || is_powers_of_two(S)) && k >= 1; },
                 [](const GapSet& S, int k) { return power_bound(S.params()[0], k); }});
  reg.push_back({"fibonacci_upper", "fibonacci", "", "k>=1", 2, K::Upper, "F_(k+3)-2", "Fibonacci gap upper bound",
                 [](const GapSet& S, int k) { return S.kind() == SetKind::Fibonacci && k >= 1 && k + 3 <= 92; },
                 [](const GapSet&, int k) -> std::optional<std::int64_t> { return fib(k + 3) - 2; }});
  reg.push_back({"not3or4_exact", "residues", "m=12; 1,2,5,7,10,11", "k>=3", 2, K::Exact, "7k-12",
                 "{x : 3 and 4 do not divide x} exact law",
                 [](const GapSet& S, int k) { return S == not_div_3_or_4() && k >= 3; },
                 [](const GapSet&, int k) -> std::optional<std::int64_t> { return 7 * static_cast<std::int64_t>(k) - 12; }});
  reg.push_back({"odds_plus_two_lower", "odds_plus_two", "", "k>=2", 2, K::Lower, "g(k)",
                 "{2} u odds avoidance colorings C_k, D_k",
                 [](const GapSet& S, int k) { return S.kind() == SetKind::OddsPlusTwo && k >= 2; },
                 [](const GapSet&, int k) -> std::optional<std::int64_t> { return g(k); }});
  // The published law f = g(k) fails at k = 9 (a 24-term coloring avoids 9-term chains).
  reg.push_back({"odds_plus_two_exact", "odds_plus_two", "", "2<=k<=8", 2, K::Exact, "g(k)", "{2} u odds two-color law",
                 [](const GapSet& S, int k) { return S.kind() == SetKind::OddsPlusTwo && k >= 2 && k <= 8; },
                 [](const GapSet&, int k) -> std::optional<std::int64_t> { return g(k); }});
  reg.push_back({"odds_plus_two_r3_upper", "odds_plus_two", "", "k>=1", 3, K::Upper, "6k^2-13k+6",
                 "{2} u odds three-color bound",
                 [](const GapSet& S, int k) { return S.kind() == SetKind::OddsPlusTwo && k >= 1; },
                 [](const GapSet&, int k) -> std::optional<std::int64_t> {
                   const std::int64_t kk = k;
                   return 6 * kk * kk - 13 * kk + 6;
                 }});
  reg.push_back({"s6_conjecture", "s_m", "m=6", "k>=2", 2, K::Conjecture, "(5k-4)/2,(5k-5)/2,(5k-6)/2,(5k-7)/2 by k mod 4 = 2,3,0,1",
                 "S_6 calculations (open)",
                 [](const GapSet& S, int k) { return is_sm(S, 6) && k >= 2; },
                 [](const GapSet&, int k) -> std::optional<std::int64_t> { return s6_conjecture(k); }});
  return reg;
}

}  // namespace

const std::vector<BoundEntry>& bound_registry() {
  static const std::vector<BoundEntry> registry = build_registry();
  return registry;
}

Bounds bound(const GapSet& S, int k, int r) {
  Bounds out;
  bool exact_seen = false;
  for (const auto& e : bound_registry()) {
    if (e.r != r || !e.applies(S, k)) continue;
    const auto v = e.value(S, k);
    if (!v) continue;
    out.formula_ids.push_back(e.id);
    if (e.kind == BoundKind::Conjecture) {
      out.conjecture = *v;
      continue;
    }
    if (e.kind == BoundKind::Exact || e.kind == BoundKind::Lower) out.lower = std::max(out.lower.value_or(*v), *v);
    if (e.kind == BoundKind::Exact || e.kind == BoundKind::Upper) out.upper = std::min(out.upper.value_or(*v), *v);
    exact_seen = exact_seen || e.kind == BoundKind::Exact;
  }
  out.exact = exact_seen && out.lower && out.upper && *out.lower == *out.upper;
  return out;
}

std::optional<int> proven_lower_bound(const GapSet& S, int k, int r) {
  const auto b = bound(S, k, r);
  if (!b.lower || *b.lower > std::numeric_limits<int>::max()) return std::nullopt;
  return static_cast<int>(*b.lower);
}

std::string registry_csv() {
  std::ostringstream os;
  os << "family,params,k-range,kind,formula,citation\n";
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  };
  for (const auto& e : bound_registry()) {
    const std::string params = (e.params.empty() ? "" : e.params + "; ") + "r=" + std::to_string(e.r);
    os << quote(e.family) << ',' << quote(params) << ',' << quote(e.k_range) << ',' << bound_kind_name(e.kind) << ',' << quote(e.formula) << ','
       << quote(e.citation) << '\n';
  }
  return os.str();
}

}  // namespace diffseq
