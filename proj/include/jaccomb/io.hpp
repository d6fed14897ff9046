#pragma once

#include <string>

#include "json.hpp"

#include "jaccomb/curve.hpp"
#include "jaccomb/polarization.hpp"
#include "jaccomb/stability.hpp"

namespace jaccomb {

// Curve JSON:
//   {"components": [{"name": "C1", "genus": 0}, ...],
//    "intersections": [[i, j, multiplicity], ...],   // i < j, omitted = 0
//    "points": [{"on": [i, j, ...]}, ...]}           // optional
// Unknown keys are rejected so typos cannot silently drop data.  All
// structural errors carry errc::invalid_input with the offending field.
CurveGraph curve_from_json(const nlohmann::json& j);
CurveGraph curve_from_file(const std::string& path);
nlohmann::json curve_to_json(const CurveGraph& g);

// Polarizations serialize as arrays of exact rational strings ("num/den" or
// integer strings; JSON integers are also accepted).  Decimal numbers are
// rejected: no silent rounding.
Polarization polarization_from_json(const nlohmann::json& j);
nlohmann::json polarization_to_json(const Polarization& q);

nlohmann::json multidegree_to_json(const Multidegree& d);

}  // namespace jaccomb
