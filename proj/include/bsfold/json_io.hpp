#pragma once

#include <memory>
#include <string>

#include "json.hpp"

#include "bsfold/chevalley.hpp"
#include "bsfold/gkm.hpp"

namespace bsfold {

using Json = nlohmann::json;

// {"components":[{"family":"A","rank":4}, ...]} or the shorthand "A4".
std::shared_ptr<const RootSystem> root_system_from_json(const Json& j);
Json root_system_to_json(const RootSystem& rs);

Json root_to_json(const Root& r);

// {"seq":[1,2,1]} with an optional "type" override; without one the system
// defaults to type A of the largest letter index.
SimpleSeq seq_from_json(const Json& j);
Json seq_to_json(const SimpleSeq& s);

// {"bits":[0,1,0]} or the string form "(e,s2,e)".
Gallery gallery_from_json(const SimpleSeq& s, const Json& j);

WeylElt weyl_from_json(const RootSystem& rs, const Json& j);  // {"word": ...} | {"cycles": ...}
Json weyl_to_json(const WeylElt& w);                           // matrix form

FoldMorphism morphism_from_json(const Json& j);
Json morphism_to_json(const FoldMorphism& m);

GkmClass gkm_class_from_json(const Json& j);
Json gkm_class_to_json(const GkmClass& f);

Json grp_to_json(const GrpElt& g);
Json transition_to_json(const ChartCoords& t);

Json moment_graph_to_json(const MomentGraph& g);

}  // namespace bsfold
