#include "badc/reports.hpp"

namespace badc {

using nlohmann::json;

json dynamics_report(const DoubleCycle& dc, const TransitionGraph& g,
                     const AttractorAnalysis& an, const ConvergenceReport& conv) {
  json attractors = json::array();
  for (const Attractor& a : an.attractors) {
    json members = json::array();
    for (std::size_t i = 0; i < a.members.size() && i < 4; ++i) {
      members.push_back(format_config(dc, a.members[i]));
    }
    attractors.push_back({{"size", a.size()},
                          {"kind", a.kind() == AttractorKind::StableConfiguration
                                       ? "stable-configuration"
                                       : "stable-oscillation"},
                          {"sampleMembers", members}});
  }
  std::size_t transient_count = 0;
  for (char r : an.recurrent_mask) {
    if (!r) ++transient_count;
  }
  return json{{"schemaVersion", kSchemaVersion},
              {"kind", to_string(dc.kind)},
              {"n", dc.n},
              {"m", dc.m},
              {"stateCount", g.state_count},
              {"attractors", attractors},
              {"transientCount", transient_count},
              {"networkConvergenceTime", conv.network_time}};
}

json trace_report(const DoubleCycle& dc, const seq::Trace& t) {
  json updates = json::array();
  for (const seq::UpdateRecord& u : t.updates) {
    updates.push_back({{"automaton", u.automaton},
                       {"old", u.before ? 1 : 0},
                       {"new", u.after ? 1 : 0}});
  }
  return json{{"schemaVersion", kSchemaVersion},
              {"updates", updates},
              {"final", format_config(dc, t.final_config)},
              {"attempted", t.attempted()},
              {"effective", t.effective()},
              {"certified", t.certified},
              {"notes", t.notes}};
}

json verification_report(const VerificationReport& rep) {
  json cases = json::array();
  for (const VerificationCase& c : rep.cases) {
    cases.push_back({{"id", c.id},
                     {"n", c.n},
                     {"m", c.m},
                     {"kind", c.kind},
                     {"measured", c.measured},
                     {"expected", c.expected},
                     {"pass", c.pass}});
  }
  return json{{"schemaVersion", kSchemaVersion},
              {"cases", cases},
              {"passed", rep.passed()},
              {"failed", rep.failed()}};
}

}  // namespace badc
