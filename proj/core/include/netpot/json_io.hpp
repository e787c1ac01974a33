#pragma once

#include <nlohmann/json_fwd.hpp>

#include "netpot/classify.hpp"
#include "netpot/dbrg.hpp"
#include "netpot/matrix.hpp"
#include "netpot/potential.hpp"

namespace netpot {

// All rationals serialize as canonical "p/q" strings ("p" for denominator 1),
// never as floats.

nlohmann::json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json array_to_json(const BiregularArray& a);
BiregularArray array_from_json(const nlohmann::json& j);

nlohmann::json counts_to_json(const DerivedCounts& c);
nlohmann::json feasibility_to_json(const FeasibilityReport& r);
nlohmann::json mreport_to_json(const MReport& r);
nlohmann::json measure_to_json(const EquilibriumMeasure& m, const Network& net);
nlohmann::json equilibrium_to_json(const DbrgEquilibrium& e);
nlohmann::json search_hit_to_json(const SearchHit& hit);

}  // namespace netpot
