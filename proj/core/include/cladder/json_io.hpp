#pragma once

#include <json.hpp>
#include <string>

#include "cladder/cpd.hpp"
#include "cladder/courses.hpp"
#include "cladder/filtrations.hpp"
#include "cladder/grid_poset.hpp"
#include "cladder/quiver_rep.hpp"
#include "cladder/stability.hpp"

namespace cladder {

using Json = nlohmann::json;

// schema: {"rows":[s,t],"spans":[[b,d],...]}
Json interval_to_json(const StaircaseInterval& i);
StaircaseInterval interval_from_json(const Json& j);

// schema cladder/module/1: {"shape":{"kind":"cl"|"grid","p","q"},"field",
//   "x_lo"?,"dims":[[row1...],[row2...],...],"arrows":[{"from":[x,y],"to":[x,y],"matrix":[[...]]}]}
Json gridrep_to_json(const GridRep& m);
GridRep gridrep_from_json(const Json& j);

// schema cladder/module/1 with shape kind "an": {"shape":{"kind":"an","n"},
//   "orientation":"fb...","field","dims":[...],"arrows":[{"from":i,"to":j,"matrix":...}]}
Json zigzag_to_json(const ZigzagRep& z);
ZigzagRep zigzag_from_json(const Json& j);

// {"orientation":"fbf...","labels":[[x,y],...]}
Json course_to_json(const ZigzagCourse& c);
ZigzagCourse course_from_json(const Json& j);

// schema cladder/cpd/1; deaths are serialized exclusively (d_json = d + 1).
Json cpd_to_json(const ConnectedPD& cpd);
ConnectedPD cpd_from_json(const Json& j);

// signed multiplicity maps as [{"interval":...,"value":...}]
Json delta_to_json(const SignedMultiplicityMap& delta);
SignedMultiplicityMap delta_from_json(const Json& j);

// matchings as {"components":{"upper":[{"src":[b,d],"dst":[b,d]}],...}},
// inclusive deaths.
Json matching_to_json(const MatchingTuple& t);

// schema cladder/triplet/1: {"vertices",m,"simplices":[[...]],"filters":
//   {"f1":[...],"f2":[...]}} with null standing for +infinity
Json triplet_to_json(const LadderTriplet& t);
LadderTriplet triplet_from_json(const Json& j);

// schema cladder/filtration/1: a triplet plus its thresholds
Json filtration_to_json(const LadderFiltration& f);
LadderFiltration filtration_from_json(const Json& j);

Json load_json_file(const std::string& path);
void save_json_file(const Json& j, const std::string& path);

// fail with a schema error unless j["schema"] == expected
void require_schema(const Json& j, const std::string& expected);

}  // namespace cladder
