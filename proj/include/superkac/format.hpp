#pragma once

#include <string>

#include "superkac/rootdata.hpp"

namespace superkac {

class Element;

// Weights as "[a_-m,...,a_-1;a_0;a_1,...,a_n]". Segments without separators
// are read one digit per label, so "[0011;1;00200]" also parses. The shape is
// taken from the label counts.
Weight parse_weight(const std::string& text);
std::string to_string(const Weight& w);   // comma-separated form
std::string compact(const Weight& w);     // digit form when all labels are 0..9

// "c * f(-2,1) f(-1,0) h(0)^2 e(1,1) + ..." with factors in PBW order.
std::string to_string(const Element& x, const Basis& basis);
Element parse_element(const Shape& s, const std::string& text);

}  // namespace superkac
