#pragma once

#include <json.hpp>

#include "torpoly/kostant.hpp"
#include "torpoly/plancherel.hpp"
#include "torpoly/torsion.hpp"
#include "torpoly/weights.hpp"

namespace torpoly {

// Serialization keeps every rational exact as a "p/q" string; numeric
// columns are presentation-layer only. ordered_json keeps key order stable
// so identical inputs produce byte-identical output.
using ojson = nlohmann::ordered_json;

ojson to_json(const HalfIntVec& v);  // array of exact rational strings
ojson weight_to_json(const WeightG& w);
ojson weight_to_json(const WeightK& w);
ojson weight_to_json(const WeightM& w);

ojson kostant_to_json(const std::vector<KostantDatum>& data);

ojson ratpoly_to_json(const RatPoly& p);

ojson torsion_to_json(const TorsionPolynomial& p, const PlancherelConstant& c);

/// tau rendered with integer entries as JSON numbers and half-integers as
/// "p/2" strings.
ojson tau_to_json(const HalfIntVec& tau);

}  // namespace torpoly
