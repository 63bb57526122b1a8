#pragma once

#include <string>
#include <vector>

#include "superkac/chains.hpp"

namespace superkac {

// A(Lambda) as a text grid. The labels a_-m..a_-1 sit in the left margin
// between the rows they separate and a_1..a_n under the gaps between
// columns, as in the usual hand-drawn figures.
std::string render_matrix(const Weight& w);

// Same grid with every chain cell tagged: '*' the atypical zero, '<' a west
// step, 'v' a south step. Cells shared by two chains keep the first tag.
// One line per chain follows, listing its SW set.
std::string render_chains(const Weight& w, const std::vector<ChainSet>& chains);

std::string to_string(const Position& p);            // "(3,3)"
std::string to_string(const PositionSet& cells);     // "{(1,6),(2,5)}"
std::string to_string(const RootIndex& r);           // "alpha(-5,4)"

}  // namespace superkac
