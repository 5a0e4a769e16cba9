#include "diffseq/gapset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>

#include "diffseq/primes.hpp"

namespace diffseq {

struct GapSet::Node {
  SetKind kind;
  std::vector<std::int64_t> params;
  std::vector<GapSet> children;
  std::string spec;
  // Precomputed lookup data: residue flags, or the sorted finite set.
  std::vector<bool> classes;
  std::vector<std::int64_t> members;
};

namespace {

std::string join(const std::vector<std::int64_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

void sort_unique(std::vector<std::int64_t>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

bool is_power_of(std::int64_t d, std::int64_t a) {
  if (d < 1) return false;
  while (d % a == 0) d /= a;
  return d == 1;
}

bool is_fibonacci(std::int64_t d) {
  std::int64_t a = 1, b = 2;
  while (a < d) {
    const std::int64_t next = a + b;
    a = b;
    b = next;
  }
  return a == d;
}

}  // namespace

std::string_view kind_name(SetKind kind) {
  switch (kind) {
    case SetKind::Powers: return "powers";
    case SetKind::Thm23: return "thm23";
    case SetKind::Fibonacci: return "fibonacci";
    case SetKind::Primes: return "primes";
    case SetKind::PrimesShifted: return "primes_shifted";
    case SetKind::SM: return "s_m";
    case SetKind::Residues: return "residues";
    case SetKind::DiffOfSet: return "diff_of_set";
    case SetKind::Scaled: return "scaled";
    case SetKind::Union: return "union";
    case SetKind::Explicit: return "explicit";
    case SetKind::OddsPlusTwo: return "odds_plus_two";
  }
  return "?";
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

GapSet GapSet::powers(std::int64_t a) {
  if (a < 2) throw DomainError("powers(a) requires a >= 2");
  return GapSet(std::make_shared<Node>(Node{SetKind::Powers, {a}, {}, "powers(" + std::to_string(a) + ")", {}, {}}));
}

GapSet GapSet::thm23(std::int64_t a) {
  if (a < 2) throw DomainError("thm23(a) requires a >= 2");
  return GapSet(std::make_shared<Node>(Node{SetKind::Thm23, {a}, {}, "thm23(" + std::to_string(a) + ")", {}, {}}));
}

GapSet GapSet::fibonacci() {
  return GapSet(std::make_shared<Node>(Node{SetKind::Fibonacci, {}, {}, "fibonacci", {}, {}}));
}

GapSet GapSet::primes(std::int64_t shift) {
  if (shift < 0) throw DomainError("primes+t requires t >= 0");
  if (shift == 0) return GapSet(std::make_shared<Node>(Node{SetKind::Primes, {0}, {}, "primes", {}, {}}));
  return GapSet(std::make_shared<Node>(
      Node{SetKind::PrimesShifted, {shift}, {}, "primes+" + std::to_string(shift), {}, {}}));
}

GapSet GapSet::s_m(std::int64_t m) {
  if (m < 2) throw DomainError("s_m(m) requires m >= 2");
  std::vector<bool> classes(static_cast<std::size_t>(m), true);
  classes[0] = false;
  return GapSet(std::make_shared<Node>(
      Node{SetKind::SM, {m}, {}, "s_m(" + std::to_string(m) + ")", std::move(classes), {}}));
}

GapSet GapSet::residues(std::int64_t m, std::vector<std::int64_t> classes) {
  if (m < 1) throw DomainError("residues(m; ...) requires m >= 1");
  if (classes.empty()) throw DomainError("residues(m; ...) requires at least one class");
  for (auto c : classes) {
    if (c < 0 || c >= m) throw DomainError("residue class " + std::to_string(c) + " not in [0, m-1]");
  }
  sort_unique(classes);
  std::vector<bool> in(static_cast<std::size_t>(m), false);
  for (auto c : classes) in[static_cast<std::size_t>(c)] = true;

  // Reduce to the smallest period so equal sets share one canonical spec.
  std::int64_t period = m;
  for (std::int64_t p = 1; p < m; ++p) {
    if (m % p != 0) continue;
    bool periodic = true;
    for (std::int64_t c = 0; c < m && periodic; ++c) periodic = in[c] == in[c % p];
    if (periodic) {
      period = p;
      break;
    }
  }
  std::vector<std::int64_t> reduced;
  for (std::int64_t c = 0; c < period; ++c) {
    if (in[c]) reduced.push_back(c);
  }
  if (period >= 2 && reduced.size() == static_cast<std::size_t>(period - 1) && reduced.front() == 1) {
    return s_m(period);
  }
  std::vector<bool> flags(static_cast<std::size_t>(period), false);
  for (auto c : reduced) flags[static_cast<std::size_t>(c)] = true;
  std::string spec = "residues(" + std::to_string(period) + "; " + join(reduced) + ")";
  std::vector<std::int64_t> params{period};
  params.insert(params.end(), reduced.begin(), reduced.end());
  return GapSet(std::make_shared<Node>(Node{SetKind::Residues, std::move(params), {}, std::move(spec), std::move(flags), {}}));
}

GapSet GapSet::diffs(std::vector<std::int64_t> elements) {
  if (elements.empty()) throw DomainError("diffs(...) requires at least one element");
  for (auto t : elements) {
    if (t < 1) throw DomainError("diffs(...) elements must be positive");
  }
  sort_unique(elements);
  std::vector<std::int64_t> members;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) members.push_back(elements[j] - elements[i]);
  }
  sort_unique(members);
  std::string spec = "diffs(" + join(elements) + ")";
  return GapSet(std::make_shared<Node>(
      Node{SetKind::DiffOfSet, std::move(elements), {}, std::move(spec), {}, std::move(members)}));
}

GapSet GapSet::scaled(std::int64_t j, const GapSet& inner) {
  if (j < 1) throw DomainError("scaled(j, S) requires j >= 1");
  if (j == 1) return inner;
  std::string spec = "scaled(" + std::to_string(j) + ", " + inner.spec() + ")";
  return GapSet(std::make_shared<Node>(Node{SetKind::Scaled, {j}, {inner}, std::move(spec), {}, {}}));
}

GapSet GapSet::set_union(const GapSet& a, const GapSet& b) {
  if (a == b) return a;
  const bool swap = b.spec() < a.spec();
  const GapSet& first = swap ? b : a;
  const GapSet& second = swap ? a : b;
  std::string spec = "union(" + first.spec() + ", " + second.spec() + ")";
  return GapSet(std::make_shared<Node>(Node{SetKind::Union, {}, {first, second}, std::move(spec), {}, {}}));
}

GapSet GapSet::explicit_set(std::vector<std::int64_t> elements) {
  if (elements.empty()) throw DomainError("explicit(...) requires at least one element");
  for (auto d : elements) {
    if (d < 1) throw DomainError("explicit(...) elements must be positive");
  }
  sort_unique(elements);
  std::string spec = "explicit(" + join(elements) + ")";
  auto members = elements;
  return GapSet(std::make_shared<Node>(
      Node{SetKind::Explicit, std::move(elements), {}, std::move(spec), {}, std::move(members)}));
}

GapSet GapSet::odds_plus_two() {
  return GapSet(std::make_shared<Node>(Node{SetKind::OddsPlusTwo, {}, {}, "odds_plus_two", {}, {}}));
}

bool GapSet::contains(std::int64_t d) const {
  if (d < 1) return false;
  const Node& n = *node_;
  switch (n.kind) {
    case SetKind::Powers:
      return is_power_of(d, n.params[0]);
    case SetKind::Thm23: {
      const std::int64_t base = n.params[0] - 1;
      if (d % base != 0) return false;
      const std::int64_t e = d / base;
      return is_power_of(e, n.params[0]) || (e % base == 0 && is_power_of(e / base, n.params[0]));
    }
    case SetKind::Fibonacci:
      return is_fibonacci(d);
    case SetKind::Primes:
      return PrimeTable::instance().is_prime(static_cast<std::uint64_t>(d));
    case SetKind::PrimesShifted:
      return d - n.params[0] >= 2 && PrimeTable::instance().is_prime(static_cast<std::uint64_t>(d - n.params[0]));
    case SetKind::SM:
    case SetKind::Residues:
      return n.classes[static_cast<std::size_t>(d % static_cast<std::int64_t>(n.classes.size()))];
    case SetKind::DiffOfSet:
    case SetKind::Explicit:
      return std::binary_search(n.members.begin(), n.members.end(), d);
    case SetKind::Scaled:
      return d % n.params[0] == 0 && n.children[0].contains(d / n.params[0]);
    case SetKind::Union:
      return n.children[0].contains(d) || n.children[1].contains(d);
    case SetKind::OddsPlusTwo:
      return d % 2 == 1 || d == 2;
  }
  return false;
}

std::vector<int> GapSet::enumerate(int limit) const {
  std::vector<int> out;
  if (limit >= 2) PrimeTable::instance().reserve(static_cast<std::uint64_t>(limit));
  for (int d = 1; d <= limit; ++d) {
    if (contains(d)) out.push_back(d);
  }
  return out;
}

const std::string& GapSet::spec() const { return node_->spec; }
SetKind GapSet::kind() const { return node_->kind; }
const std::vector<std::int64_t>& GapSet::params() const { return node_->params; }
std::vector<GapSet> GapSet::children() const { return node_->children; }

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GapSet parse_all() {
    GapSet s = parse_set();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected set name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_) {
      pos_ = start;
      fail("expected integer");
    }
    return value;
  }

  std::vector<std::int64_t> integer_list() {
    std::vector<std::int64_t> xs{integer()};
    while (accept(',')) xs.push_back(integer());
    return xs;
  }

  GapSet parse_set() {
    skip_ws();
    const std::size_t at = pos_;
    const std::string name = identifier();
    if (name == "fibonacci") return GapSet::fibonacci();
    if (name == "odds_plus_two") return GapSet::odds_plus_two();
    if (name == "primes") {
      if (accept('+')) return GapSet::primes(integer());
      return GapSet::primes(0);
    }
    if (name == "powers" || name == "thm23" || name == "s_m") {
      expect('(');
      const std::int64_t a = integer();
      expect(')');
      if (name == "powers") return GapSet::powers(a);
      if (name == "thm23") return GapSet::thm23(a);
      return GapSet::s_m(a);
    }
    if (name == "residues") {
      expect('(');
      const std::int64_t m = integer();
      expect(';');
      auto classes = integer_list();
      expect(')');
      return GapSet::residues(m, std::move(classes));
    }
    if (name == "diffs" || name == "explicit") {
      expect('(');
      auto xs = integer_list();
      expect(')');
      return name == "diffs" ? GapSet::diffs(std::move(xs)) : GapSet::explicit_set(std::move(xs));
    }
    if (name == "scaled") {
      expect('(');
      const std::int64_t j = integer();
      expect(',');
      GapSet inner = parse_set();
      expect(')');
      return GapSet::scaled(j, inner);
    }
    if (name == "union") {
      expect('(');
      GapSet a = parse_set();
      expect(',');
      GapSet b = parse_set();
      expect(')');
      return GapSet::set_union(a, b);
    }
    pos_ = at;
    fail("unknown set name '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GapSet make_set(std::string_view spec) { return Parser(spec).parse_all(); }

GapSet not_div_3_or_4() { return GapSet::residues(12, {1, 2, 5, 7, 10, 11}); }

std::vector<CatalogEntry> set_catalog() {
  return {
      {"powers(2)", "powers of two {1,2,4,8,...}"},
      {"thm23(a)", "{(a-1)a^j} union {(a-1)^2 a^j}, j >= 0"},
      {"fibonacci", "Fibonacci numbers {1,2,3,5,8,...}"},
      {"primes", "the primes"},
      {"primes+t", "primes translated upward by t"},
      {"s_m(m)", "positive integers not divisible by m"},
      {"residues(m; c1,...)", "union of residue classes mod m"},
      {"residues(12; 1,2,5,7,10,11)", "{x : 3 does not divide x and 4 does not divide x}"},
      {"diffs(t1,...)", "T - T = {t - s : s < t in T} for a finite T"},
      {"scaled(j, S)", "jS = {j*s : s in S}"},
      {"union(A, B)", "union of two sets"},
      {"explicit(d1,...)", "an explicit finite set"},
      {"odds_plus_two", "{2} union the odd numbers"},
  };
}

}  // namespace diffseq
