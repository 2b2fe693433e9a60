#pragma once

#include <json.hpp>

#include "pairshare/nevanlinna.hpp"
#include "pairshare/puiseux.hpp"
#include "pairshare/search.hpp"

namespace pairshare {

using Json = nlohmann::ordered_json;

Json divisor_json(const Divisor& d);
Json pointset_json(const PointSet& ps);
Json pattern_json(const PatternReport& rep);
Json certificate_json(const SharingCertificate& cert);
Json curve_json(const CurveModel& m);
Json fiber_json(const FiberCheck& fc);
Json shape_json(const ShapeReport& rep);
Json branches_json(const std::vector<BranchExpansion>& brs);
Json identity_json(const std::vector<IdentityRow>& rows);
std::string identity_tsv(const std::vector<IdentityRow>& rows);
Json pencil_json(const PencilCheck& pc);
Json candidates_json(const std::vector<Candidate>& cands,
                     const ConstraintSystem& sys);
Json elimination_json(const std::vector<EliminationCandidate>& cands);

// search configuration from JSON (profile, starts, seed, tol, lift bound)
struct SearchConfig {
    DegreeProfile profile;
    SearchOptions options;
    long lift_den = 1000000;
};
SearchConfig search_config_from_json(const Json& j);

}  // namespace pairshare
