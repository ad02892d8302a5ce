#pragma once

#include <json.hpp>

#include "psm/apchar.hpp"
#include "psm/bezout.hpp"
#include "psm/oracle.hpp"
#include "psm/propmod.hpp"
#include "psm/semigroup.hpp"

namespace psm {

using json = nlohmann::ordered_json;

json semigroup_json(const NumericalSemigroup& s);
json pm_triple_json(const PMTriple& t);
json regions_json(const std::vector<AdmissibleRegion>& regions);
json triple_regions_json(const std::vector<TripleRegion>& regions);
json bezout_json(const BezoutSequence& seq);
json extrema_report_json(const ExtremaReport& rep);
json region_scan_json(const RegionScanReport& rep);

}  // namespace psm
