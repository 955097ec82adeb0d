#pragma once

// JSON forms of the library's records. Field order is fixed (ordered_json), so
// identical values always serialise to identical bytes.

#include "chibound/invariants.hpp"
#include "chibound/recognition.hpp"
#include "chibound/structure.hpp"
#include "chibound/verify.hpp"

#include <json.hpp>

namespace chibound {

using Json = nlohmann::ordered_json;

void to_json(Json& j, const Witness& w);
void to_json(Json& j, const MembershipVerdict& v);
void to_json(Json& j, const Coloring& c);
void to_json(Json& j, const InvariantReport& r);
void to_json(Json& j, const CliquePartition& p);
void to_json(Json& j, const NeighborhoodDecomposition& d);
void to_json(Json& j, const StructureReport& r);
void to_json(Json& j, const BoundCheck& b);
void to_json(Json& j, const Violation& v);
void to_json(Json& j, const ExtremalMember& e);
void to_json(Json& j, const OrderStats& s);
void to_json(Json& j, const RemarkRow& r);

/// Parses {kind: "3K1"|"K1+C4", vertices: [...]}; throws InvalidInput otherwise.
Witness witness_from_json(const Json& j);

/// {type: "summary", ...}. Wall-clock time is only included on request, so
/// that the default output is reproducible byte for byte.
Json summary_json(const CampaignReport& r, bool include_timing = false);

}  // namespace chibound
