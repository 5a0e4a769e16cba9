#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace diffseq {

enum class SetKind {
  Powers,
  Thm23,
  Fibonacci,
  Primes,
  PrimesShifted,
  SM,
  Residues,
  DiffOfSet,
  Scaled,
  Union,
  Explicit,
  OddsPlusTwo,
};

std::string_view kind_name(SetKind kind);

/// Malformed set spec. position() is the 0-based offset into the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed spec with parameters outside the constructor's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A set of allowed differences S, a subset of the positive integers.
///
/// Sets are immutable and cheap to copy (shared node). Membership beyond the
/// range a caller enumerates is never consulted by the search code.
class GapSet {
 public:
  struct Node;

  static GapSet powers(std::int64_t a);
  static GapSet thm23(std::int64_t a);
  static GapSet fibonacci();
  static GapSet primes(std::int64_t shift = 0);
  static GapSet s_m(std::int64_t m);
  static GapSet residues(std::int64_t m, std::vector<std::int64_t> classes);
  static GapSet diffs(std::vector<std::int64_t> elements);
  static GapSet scaled(std::int64_t j, const GapSet& inner);
  static GapSet set_union(const GapSet& a, const GapSet& b);
  static GapSet explicit_set(std::vector<std::int64_t> elements);
  static GapSet odds_plus_two();

  bool contains(std::int64_t d) const;
  /// S intersected with [1, limit], ascending.
  std::vector<int> enumerate(int limit) const;

  /// Canonical spec text; make_set(spec()) describes the same set.
  const std::string& spec() const;
  SetKind kind() const;
  /// Kind-specific integer parameters (a, m, t, j, or the element list).
  const std::vector<std::int64_t>& params() const;
  /// Operands of scaled/union; empty otherwise.
  std::vector<GapSet> children() const;

  friend bool operator==(const GapSet& a, const GapSet& b) { return a.spec() == b.spec(); }

 private:
  explicit GapSet(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Parses the set grammar:
///   powers(a) | thm23(a) | fibonacci | primes | primes+t | s_m(m)
///   | residues(m; c1,c2,...) | diffs(t1,t2,...) | scaled(j, SPEC)
///   | union(SPEC, SPEC) | explicit(d1,d2,...) | odds_plus_two
GapSet make_set(std::string_view spec);

struct CatalogEntry {
  std::string spec;
  std::string description;
};

/// Named sets used throughout the project, in display order.
std::vector<CatalogEntry> set_catalog();

/// {x : 3 does not divide x and 4 does not divide x}.
GapSet not_div_3_or_4();

}  // namespace diffseq
