#include "badc/dynamics.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

namespace badc {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

void check_cap(const NetworkSpec& net, int cap_bits) {
  net.validate();
  if (net.count > cap_bits || net.count > kMaxAutomata) {
    throw CapExceeded("state space of " + std::to_string(net.count) +
                      " automata exceeds the enumeration cap");
  }
}

void check_node(const TransitionGraph& g, Config x) {
  if (x >= g.state_count) throw std::out_of_range("configuration out of range");
}

}  // namespace

const char* to_string(AttractorKind kind) {
  return kind == AttractorKind::StableConfiguration ? "stable configuration"
                                                    : "stable oscillation";
}

TransitionGraph build_graph(const NetworkSpec& net, int cap_bits) {
  check_cap(net, cap_bits);
  TransitionGraph g;
  g.bits = net.count;
  g.state_count = Config{1} << net.count;
  const std::int64_t states = g.state_count;
  const int n = net.count;

  std::vector<std::uint32_t> degree(states, 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t xi = 0; xi < states; ++xi) {
    const Config x = static_cast<Config>(xi);
    std::uint32_t d = 0;
    for (int i = 0; i < n; ++i) {
      if (async_step(net, x, i) != x) ++d;
    }
    degree[xi] = d;
  }

  g.offsets.resize(states + 1);
  g.offsets[0] = 0;
  for (std::int64_t xi = 0; xi < states; ++xi) {
    g.offsets[xi + 1] = g.offsets[xi] + degree[xi];
  }
  g.targets.resize(g.offsets[states]);
  g.updated.resize(g.offsets[states]);

#pragma omp parallel for schedule(static)
  for (std::int64_t xi = 0; xi < states; ++xi) {
    const Config x = static_cast<Config>(xi);
    std::uint32_t at = g.offsets[xi];
    for (int i = 0; i < n; ++i) {
      const Config y = async_step(net, x, i);
      if (y != x) {
        g.targets[at] = y;
        g.updated[at] = static_cast<std::uint8_t>(i);
        ++at;
      }
    }
  }
  return g;
}

TransitionGraph build_graph_serial(const NetworkSpec& net, int cap_bits) {
  check_cap(net, cap_bits);
  TransitionGraph g;
  g.bits = net.count;
  g.state_count = Config{1} << net.count;

  g.offsets.reserve(g.state_count + 1);
  g.offsets.push_back(0);
  for (Config x = 0; x < g.state_count; ++x) {
    for (int i = 0; i < net.count; ++i) {
      const Config y = async_step(net, x, i);
      if (y != x) {
        g.targets.push_back(y);
        g.updated.push_back(static_cast<std::uint8_t>(i));
      }
    }
    g.offsets.push_back(static_cast<std::uint32_t>(g.targets.size()));
  }
  return g;
}

AttractorAnalysis analyze(const TransitionGraph& g) {
  const std::uint32_t states = g.state_count;
  AttractorAnalysis a;
  a.scc.assign(states, kNone);

  // Tarjan with an explicit frame stack; the state space is far too large
  // for recursion.
  std::vector<std::uint32_t> index(states, kNone);
  std::vector<std::uint32_t> low(states, 0);
  std::vector<char> on_stack(states, 0);
  std::vector<std::uint32_t> stack;
  struct Frame {
    std::uint32_t v;
    std::uint32_t next_edge;
  };
  std::vector<Frame> frames;
  std::uint32_t counter = 0;
  std::uint32_t comp_count = 0;

  for (std::uint32_t root = 0; root < states; ++root) {
    if (index[root] != kNone) continue;
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    frames.push_back({root, g.offsets[root]});
    while (!frames.empty()) {
      const std::uint32_t v = frames.back().v;
      bool descended = false;
      while (frames.back().next_edge < g.offsets[v + 1]) {
        const std::uint32_t w = g.targets[frames.back().next_edge++];
        if (index[w] == kNone) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, g.offsets[w]});
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;
      frames.pop_back();
      if (!frames.empty()) {
        low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
      if (low[v] == index[v]) {
        while (true) {
          const std::uint32_t w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          a.scc[w] = comp_count;
          if (w == v) break;
        }
        ++comp_count;
      }
    }
  }
  a.scc_count = comp_count;

  std::vector<char> terminal(comp_count, 1);
  for (std::uint32_t x = 0; x < states; ++x) {
    for (std::uint32_t e = g.offsets[x]; e < g.offsets[x + 1]; ++e) {
      if (a.scc[x] != a.scc[g.targets[e]]) terminal[a.scc[x]] = 0;
    }
  }

  a.recurrent_mask.assign(states, 0);
  std::vector<std::uint32_t> slot(comp_count, kNone);
  for (std::uint32_t x = 0; x < states; ++x) {
    const std::uint32_t c = a.scc[x];
    if (!terminal[c]) continue;
    a.recurrent_mask[x] = 1;
    if (slot[c] == kNone) {
      slot[c] = static_cast<std::uint32_t>(a.attractors.size());
      a.attractors.emplace_back();
    }
    a.attractors[slot[c]].members.push_back(x);
  }
  return a;
}

std::vector<Attractor> attractors(const TransitionGraph& g) {
  return analyze(g).attractors;
}

std::vector<Config> recurrent(const AttractorAnalysis& a) {
  std::vector<Config> out;
  for (Config x = 0; x < a.recurrent_mask.size(); ++x) {
    if (a.recurrent_mask[x]) out.push_back(x);
  }
  return out;
}

std::vector<Config> transient(const AttractorAnalysis& a) {
  std::vector<Config> out;
  for (Config x = 0; x < a.recurrent_mask.size(); ++x) {
    if (!a.recurrent_mask[x]) out.push_back(x);
  }
  return out;
}

std::vector<Config> recurrent(const TransitionGraph& g) { return recurrent(analyze(g)); }
std::vector<Config> transient(const TransitionGraph& g) { return transient(analyze(g)); }

std::optional<std::uint32_t> distance(const TransitionGraph& g, Config x, Config y) {
  check_node(g, x);
  check_node(g, y);
  if (x == y) return 0;
  std::vector<std::uint32_t> dist(g.state_count, kNone);
  std::vector<std::uint32_t> queue;
  queue.reserve(g.state_count);
  dist[x] = 0;
  queue.push_back(x);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t v = queue[head];
    for (std::uint32_t e = g.offsets[v]; e < g.offsets[v + 1]; ++e) {
      const std::uint32_t w = g.targets[e];
      if (dist[w] != kNone) continue;
      dist[w] = dist[v] + 1;
      if (w == y) return dist[w];
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

bool reachable(const TransitionGraph& g, Config x, Config y) {
  return distance(g, x, y).has_value();
}

ConvergenceReport convergence(const TransitionGraph& g, const AttractorAnalysis& a) {
  const std::uint32_t states = g.state_count;
  std::vector<std::uint32_t> rev_offsets(states + 1, 0);
  for (std::uint32_t t : g.targets) ++rev_offsets[t + 1];
  for (std::uint32_t i = 0; i < states; ++i) rev_offsets[i + 1] += rev_offsets[i];
  std::vector<std::uint32_t> rev_targets(g.targets.size());
  std::vector<std::uint32_t> cursor = rev_offsets;
  for (std::uint32_t x = 0; x < states; ++x) {
    for (std::uint32_t e = g.offsets[x]; e < g.offsets[x + 1]; ++e) {
      rev_targets[cursor[g.targets[e]]++] = x;
    }
  }

  ConvergenceReport r;
  r.per_config.assign(states, kNone);
  std::vector<std::uint32_t> queue;
  queue.reserve(states);
  for (std::uint32_t x = 0; x < states; ++x) {
    if (a.recurrent_mask[x]) {
      r.per_config[x] = 0;
      queue.push_back(x);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t v = queue[head];
    for (std::uint32_t e = rev_offsets[v]; e < rev_offsets[v + 1]; ++e) {
      const std::uint32_t w = rev_targets[e];
      if (r.per_config[w] != kNone) continue;
      r.per_config[w] = r.per_config[v] + 1;
      queue.push_back(w);
    }
  }
  r.network_time = 0;
  for (std::uint32_t d : r.per_config) {
    if (d == kNone) throw Error("configuration cannot reach any attractor");
    r.network_time = std::max(r.network_time, d);
  }
  return r;
}

ConvergenceReport convergence(const TransitionGraph& g) {
  return convergence(g, analyze(g));
}

// Once any effective update leaves x, no sequence re-enters it. Transient
// configurations sitting on a transient cycle fail this; so do recurrent ones.
bool irreversibility_check(const TransitionGraph& g, const AttractorAnalysis& a,
                           Config x) {
  check_node(g, x);
  if (a.recurrent_mask[x]) return false;
  for (std::uint32_t e = g.offsets[x]; e < g.offsets[x + 1]; ++e) {
    if (reachable(g, g.targets[e], x)) return false;
  }
  return true;
}

bool irreversibility_check(const TransitionGraph& g, Config x) {
  return irreversibility_check(g, analyze(g), x);
}

void write_dot(std::ostream& os, const TransitionGraph& g,
               const AttractorAnalysis& a,
               const std::function<std::string(Config)>& label) {
  os << "digraph transitions {\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (Config x = 0; x < g.state_count; ++x) {
    os << "  s" << x << " [label=\"" << label(x) << "\"";
    if (a.recurrent_mask[x]) os << ", peripheries=2";
    os << "];\n";
  }
  for (Config x = 0; x < g.state_count; ++x) {
    for (std::uint32_t e = g.offsets[x]; e < g.offsets[x + 1]; ++e) {
      os << "  s" << x << " -> s" << g.targets[e] << " [label=\""
         << static_cast<int>(g.updated[e]) << "\"];\n";
    }
  }
  os << "}\n";
}

}  // namespace badc
