#pragma once

#include <optional>
#include <vector>

#include "superkac/codes.hpp"

namespace superkac {

using PositionSet = std::vector<Position>;  // sorted, duplicate-free

struct ChainSet {
  int s = 0;
  Position start;
  std::vector<Position> west_ext;   // columns c_s, c_s - 1, ... in that order
  std::vector<Position> south_ext;  // rows b_s, b_s + 1, ... in that order
  std::vector<Position> west;       // kept prefix of west_ext
  std::vector<Position> south;      // kept prefix of south_ext
  PositionSet sw;
};

std::vector<Position> west_chain_ext(const Weight& w, int s);
std::vector<Position> south_chain_ext(const Weight& w, int s);
ChainSet sw_chain(const Weight& w, int s);

// Cells on or below W(t), on or left of S(t), closed off by the column of the
// last west position and the row of the last south position.
PositionSet region_D(const Weight& w, int t);

// Union of SW(s) over the nonzero columns of an unlinked code. Throws on a
// linked or malformed code.
PositionSet d_sigma(const Weight& w, const Code& code);
std::vector<RootIndex> roots_of(const Shape& s, const PositionSet& cells);
Weight sigma_weight(const Weight& w, const Code& code);

// t with d_sigma == region_D(t), if any.
std::optional<int> check_indecomposable_region(const Weight& w, const Code& code);

PositionSet set_union(const PositionSet& a, const PositionSet& b);
bool includes(const PositionSet& big, const PositionSet& small);

}  // namespace superkac
