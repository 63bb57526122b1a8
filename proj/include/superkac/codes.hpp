#pragma once

#include <string>
#include <vector>

#include "superkac/atypicality.hpp"

namespace superkac {

// A code has one column per atypical root. A column is a strictly increasing
// list of labels from 1..r; the empty column is the zero column.
struct Code {
  std::vector<std::vector<int>> columns;

  int r() const { return static_cast<int>(columns.size()); }
  const std::vector<int>& column(int s) const { return columns[s - 1]; }
  int top(int s) const { return columns[s - 1].empty() ? 0 : columns[s - 1].front(); }
  bool contains(int s, int label) const;
  bool is_zero() const;

  static Code zero(int r) { return {std::vector<std::vector<int>>(r)}; }

  friend bool operator==(const Code&, const Code&) = default;
  friend auto operator<=>(const Code&, const Code&) = default;
};

// "1/2 2 3/4 4 0"
std::string to_string(const Code& code);
Code parse_code(const std::string& text);

// Rule numbers 1..6 that fail; rule 0 flags a malformed column.
std::vector<int> failed_rules(const Code& code, const NqcType& t);
bool is_permissible(const Code& code, const NqcType& t);

// All permissible codes, sorted.
std::vector<Code> enumerate_codes(const NqcType& t);
// Exhaustive generate-and-filter over every column choice; for r <= 5.
std::vector<Code> enumerate_codes_exhaustive(const NqcType& t);
std::vector<Code> enumerate_codes_exhaustive_serial(const NqcType& t);

bool is_linked(const Code& code);
bool connected(const Code& code, int s, int t);
bool is_indecomposable(const Code& code);
// Indecomposable pieces ordered by their first nonzero column; each piece keeps
// r columns with the other columns zeroed.
std::vector<Code> decompose(const Code& code);

}  // namespace superkac
