#pragma once

#include <json.hpp>

#include "orbitq/operator_rep.hpp"
#include "orbitq/orbits.hpp"
#include "orbitq/polarization.hpp"
#include "orbitq/symbol.hpp"

namespace orbitq {

using nlohmann::json;

/// Scalar coefficient encoding: "re" and "im" are arrays indexed by lambda
/// power. Each entry is an exact [num, den] pair, or, when sigma appears, an
/// array of such pairs indexed by sigma power.
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

/// {"terms":[{"n":..,"d":..,"re":[...],"im":[...]}]}, sorted by (n, d).
json symbol_to_json(const SymbolFunction& f);
SymbolFunction symbol_from_json(const json& j);

/// {"terms":[{"n":..,"re":[...],"im":[...]}]}
json trigpoly_to_json(const TrigPoly& f);
TrigPoly trigpoly_from_json(const json& j);

/// {"var":"s"|"theta","c1":{...},"c0":{...}}
json diffop_to_json(const DiffOp1& d);
DiffOp1 diffop_from_json(const json& j);

json orbit_class_to_json(const OrbitClass& c);
json normal_form_to_json(const NormalForm& f);
json polarization_report_to_json(const PolarizationReport& r);

/// Nonzero entries with exact "a/b+c/d i" value strings (constant entries).
json band_matrix_to_json(const BandMatrix& m);
std::string band_matrix_to_csv(const BandMatrix& m);

std::string canonical_dump(const json& j);

}  // namespace orbitq
