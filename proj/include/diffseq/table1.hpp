#pragma once

#include <optional>
#include <string>
#include <vector>

namespace diffseq {

/// One cell of the reference table of f(S,k;2). `expected` is empty where
/// the value is unknown.
struct Table1Cell {
  std::string row;
  std::string spec;
  int k = 0;
  std::optional<int> expected;
  std::string citation;
};

/// Rows T, F, P, P+1..P+7, S_5, S_6; columns k = 2..8.
const std::vector<Table1Cell>& table1_cells();

/// The single cell that gets the extended budget.
inline bool is_hard_cell(const Table1Cell& c) { return c.row == "T" && c.k == 8; }

}  // namespace diffseq
