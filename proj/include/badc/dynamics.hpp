#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "badc/network.hpp"

namespace badc {

// Effective asynchronous transitions in CSR form, ordered by
// (configuration, updated automaton). Non-effective self-transitions are
// never stored; they change nothing downstream.
struct TransitionGraph {
  int bits = 0;
  std::uint32_t state_count = 0;
  std::vector<std::uint32_t> offsets;  // state_count + 1
  std::vector<std::uint32_t> targets;
  std::vector<std::uint8_t> updated;

  std::size_t edge_count() const { return targets.size(); }
  std::uint32_t out_degree(Config x) const { return offsets[x + 1] - offsets[x]; }

  friend bool operator==(const TransitionGraph&, const TransitionGraph&) = default;
};

// Parallel two-pass build: a counting sweep, a prefix sum, and a fill sweep
// where each worker writes only its own slice. Result is identical to the
// serial reference.
TransitionGraph build_graph(const NetworkSpec& net, int cap_bits = kMaxAutomata);

// Straightforward append loop, kept as the reference implementation.
TransitionGraph build_graph_serial(const NetworkSpec& net, int cap_bits = kMaxAutomata);

enum class AttractorKind { StableConfiguration, StableOscillation };

struct Attractor {
  std::vector<Config> members;  // ascending

  std::size_t size() const { return members.size(); }
  Config smallest() const { return members.front(); }
  AttractorKind kind() const {
    return members.size() == 1 ? AttractorKind::StableConfiguration
                               : AttractorKind::StableOscillation;
  }
};

const char* to_string(AttractorKind kind);

struct AttractorAnalysis {
  std::uint32_t scc_count = 0;
  std::vector<std::uint32_t> scc;    // component id per configuration
  std::vector<char> recurrent_mask;  // member of a terminal component
  std::vector<Attractor> attractors; // ordered by smallest member
};

// Iterative Tarjan over the full graph plus terminal-component extraction.
AttractorAnalysis analyze(const TransitionGraph& g);

std::vector<Attractor> attractors(const TransitionGraph& g);
std::vector<Config> recurrent(const AttractorAnalysis& a);
std::vector<Config> transient(const AttractorAnalysis& a);
std::vector<Config> recurrent(const TransitionGraph& g);
std::vector<Config> transient(const TransitionGraph& g);

bool reachable(const TransitionGraph& g, Config x, Config y);
std::optional<std::uint32_t> distance(const TransitionGraph& g, Config x, Config y);

struct ConvergenceReport {
  std::vector<std::uint32_t> per_config;  // shortest distance to a recurrent configuration
  std::uint32_t network_time = 0;
};

// Multi-source BFS from the recurrent set along reversed edges.
ConvergenceReport convergence(const TransitionGraph& g, const AttractorAnalysis& a);
ConvergenceReport convergence(const TransitionGraph& g);

// Transient and unreachable from every other configuration (equivalently:
// transient with no incoming effective edge).
bool irreversibility_check(const TransitionGraph& g, const AttractorAnalysis& a, Config x);
bool irreversibility_check(const TransitionGraph& g, Config x);

// One node per configuration, one edge per effective transition labeled with
// the updated automaton; attractor members get doubled peripheries.
void write_dot(std::ostream& os, const TransitionGraph& g,
               const AttractorAnalysis& a,
               const std::function<std::string(Config)>& label);

}  // namespace badc
