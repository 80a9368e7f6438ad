#pragma once

#include <string>

#include <json.hpp>

#include "freebound/boundary.hpp"
#include "freebound/cancellation.hpp"
#include "freebound/eq_explorer.hpp"
#include "freebound/growth.hpp"
#include "freebound/stallings.hpp"

// JSON views of the reports. Output is deterministic: no timings, words in
// shortlex order, keys sorted.
namespace freebound::report {

using Json = nlohmann::json;

std::string outcome_str(FixOracle::Outcome o);
std::string strategy_str(FixOracle::Strategy s);

Json length_json(const std::string& condition, const Endomorphism& phi, const LengthDecision& d);
Json ali_json(const Endomorphism& phi, const AliReport& r);
Json oracle_json(const FixOracle& o);
Json boundary_json(const BoundaryFixReport& r);
/// For fix-boundary runs that stop before the streams: holds = false or an
/// unresolved oracle. Same schema, empty lists.
Json boundary_json(const AliReport& ali, const FixOracle& oracle);
Json aut_fix_json(const Endomorphism& phi, const AutFixAnswer& a, const FixOracle& oracle);
Json exploration_json(const ExplorationReport& r);
Json stallings_json(const Endomorphism& phi, const InverseAutomaton& a);
Json constants_json(const Endomorphism& phi, const BrpCertificate& brp,
                    const MeetBoundTable& mn);

/// First 64 letters of a stream.
std::string prefix64(const BoundaryStream& s);

}  // namespace freebound::report
