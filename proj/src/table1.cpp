#include "diffseq/table1.hpp"

#include <array>

namespace diffseq {

namespace {

struct Row {
  const char* label;
  const char* spec;
  std::array<int, 7> values;  // k = 2..8; 0 marks an unknown cell
};

// clang-format off
constexpr std::array<Row, 12> kRows{{
    {"T",   "powers(2)", {3, 7, 11, 17, 25, 35, 51}},
    {"F",   "fibonacci", {3, 5, 9, 11, 15, 19, 21}},
    {"P",   "primes",    {5, 9, 13, 21, 25, 33, 0}},
    {"P+1", "primes+1",  {7, 13, 21, 27, 35, 0, 0}},
    {"P+2", "primes+2",  {9, 17, 25, 33, 0, 0, 0}},
    {"P+3", "primes+3",  {11, 21, 31, 42, 0, 0, 0}},
    {"P+4", "primes+4",  {13, 25, 37, 0, 0, 0, 0}},
    {"P+5", "primes+5",  {15, 29, 0, 0, 0, 0, 0}},
    {"P+6", "primes+6",  {17, 33, 0, 0, 0, 0, 0}},
    {"P+7", "primes+7",  {19, 37, 0, 0, 0, 0, 0}},
    {"S5",  "s_m(5)",    {3, 5, 7, 11, 13, 15, 19}},
    {"S6",  "s_m(6)",    {3, 5, 7, 9, 13, 15, 17}},
}};
// clang-format on

std::vector<Table1Cell> build() {
  std::vector<Table1Cell> cells;
  for (const auto& row : kRows) {
    for (int k = 2; k <= 8; ++k) {
      Table1Cell cell{row.label, row.spec, k, std::nullopt, {}};
      const int v = row.values[static_cast<std::size_t>(k - 2)];
      if (v != 0) cell.expected = v;
      cell.citation = "reference table, row " + cell.row + ", k=" + std::to_string(k) + ": " +
                      (v != 0 ? std::to_string(v) : std::string("?"));
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

}  // namespace

const std::vector<Table1Cell>& table1_cells() {
  static const std::vector<Table1Cell> cells = build();
  return cells;
}

}  // namespace diffseq
