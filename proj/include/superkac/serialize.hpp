#pragma once

#include <json.hpp>

#include "superkac/chains.hpp"
#include "superkac/primvec.hpp"

namespace superkac {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "superkac/1";

// Rationals travel as strings ("3", "-1/2") so nothing is lost to doubles.
Json to_json(const Weight& w);
Weight weight_from_json(const Json& j);

Json to_json(const Code& code);  // array of columns
Code code_from_json(const Json& j);

Json to_json(const ChainSet& ch);
ChainSet chain_set_from_json(const Json& j);

// Elements use the PBW text form.
Json to_json(const Element& x, const Basis& basis);
Element element_from_json(const Shape& s, const Json& j);

// Terms {odd, state, coeff}: odd in PBW text, state as one bitmask per
// tensor factor of the even module.
Json to_json(const KacVector& v, const Basis& basis);
KacVector kac_vector_from_json(const Shape& s, const Json& j);

Json to_json(const ConstructionTrace& t);

}  // namespace superkac
