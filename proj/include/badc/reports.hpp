#pragma once

#include "json.hpp"

#include "badc/double_cycle.hpp"
#include "badc/dynamics.hpp"
#include "badc/seqdsl.hpp"
#include "badc/verify.hpp"

namespace badc {

inline constexpr int kSchemaVersion = 1;

// {schemaVersion, kind, n, m, attractors: [{size, kind, sampleMembers}],
//  transientCount, networkConvergenceTime}
nlohmann::json dynamics_report(const DoubleCycle& dc, const TransitionGraph& g,
                               const AttractorAnalysis& an,
                               const ConvergenceReport& conv);

// {schemaVersion, updates: [{automaton, old, new}], final, attempted,
//  effective, certified, notes}
nlohmann::json trace_report(const DoubleCycle& dc, const seq::Trace& t);

nlohmann::json verification_report(const VerificationReport& rep);

}  // namespace badc
