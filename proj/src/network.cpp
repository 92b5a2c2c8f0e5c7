#include "badc/network.hpp"

#include <algorithm>

namespace badc {

namespace {

void check_index(const NetworkSpec& net, int i, const char* what) {
  if (i < 0 || i >= net.count) {
    throw std::out_of_range(std::string(what) + " index " + std::to_string(i) +
                            " out of range for " + std::to_string(net.count) +
                            " automata");
  }
}

}  // namespace

void NetworkSpec::validate() const {
  if (count <= 0) throw Error("network needs at least one automaton");
  if (static_cast<int>(functions.size()) != count) {
    throw Error("function table size " + std::to_string(functions.size()) +
                " does not match automaton count " + std::to_string(count));
  }
  for (int i = 0; i < count; ++i) {
    const LocalFunction& f = functions[i];
    if (f.a < 0 || f.a >= count ||
        (f.kind == FunctionKind::AndGate && (f.b < 0 || f.b >= count))) {
      throw Error("function of automaton " + std::to_string(i) +
                  " reads an out-of-range source");
    }
  }
}

bool eval_local(const NetworkSpec& net, Config x, int i) {
  check_index(net, i, "automaton");
  const LocalFunction& f = net.functions[i];
  switch (f.kind) {
    case FunctionKind::Identity:
      return config_bit(x, f.a);
    case FunctionKind::Negation:
      return !config_bit(x, f.a);
    case FunctionKind::AndGate:
      return (config_bit(x, f.a) != f.neg_a) && (config_bit(x, f.b) != f.neg_b);
  }
  throw Error("unreachable function kind");
}

Config async_step(const NetworkSpec& net, Config x, int i) {
  return config_with_bit(x, i, eval_local(net, x, i));
}

int interaction_sign(const NetworkSpec& net, Config x, int j, int i) {
  check_index(net, j, "source automaton");
  const int fi = eval_local(net, x, i) ? 1 : 0;
  const int fi_flipped = eval_local(net, config_flip(x, j), i) ? 1 : 0;
  const int s = config_bit(x, j) ? 1 : -1;
  return s * (fi - fi_flipped);
}

std::vector<SignedArc> interaction_graph(const NetworkSpec& net, int cap_bits) {
  net.validate();
  if (net.count > cap_bits || net.count > kMaxAutomata) {
    throw CapExceeded("interaction graph over " + std::to_string(net.count) +
                      " automata exceeds the enumeration cap");
  }
  const Config states = Config{1} << net.count;

  std::vector<SignedArc> arcs;
  for (int i = 0; i < net.count; ++i) {
    const LocalFunction& f = net.functions[i];
    // Only declared sources can influence f_i; all other pairs have sign 0.
    int sources[2] = {f.a, f.b};
    const int n_sources =
        (f.kind == FunctionKind::AndGate && f.b != f.a) ? 2 : 1;
    for (int si = 0; si < n_sources; ++si) {
      const int j = sources[si];
      bool seen_pos = false;
      bool seen_neg = false;
      for (Config x = 0; x < states; ++x) {
        const int s = interaction_sign(net, x, j, i);
        if (s > 0) seen_pos = true;
        if (s < 0) seen_neg = true;
        if (seen_pos && seen_neg) {
          throw NonSimpleNetwork("interaction (" + std::to_string(j) + "," +
                                 std::to_string(i) +
                                 ") carries both signs; network is not simple");
        }
      }
      if (seen_pos || seen_neg) arcs.push_back({j, i, seen_pos ? 1 : -1});
    }
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

namespace {

// Enumerates every simple cycle once, anchored at its smallest node.
class CycleScan {
public:
  explicit CycleScan(const std::vector<SignedArc>& arcs) {
    int nodes = 0;
    for (const SignedArc& a : arcs) nodes = std::max({nodes, a.from + 1, a.to + 1});
    adj_.resize(nodes);
    for (const SignedArc& a : arcs) adj_[a.from].push_back({a.to, a.sign});
    on_path_.assign(nodes, 0);
    for (int anchor = 0; anchor < nodes; ++anchor) {
      if (pos_ && neg_) break;
      anchor_ = anchor;
      dfs(anchor, +1);
    }
  }

  bool pos_ = false;
  bool neg_ = false;

private:
  void dfs(int v, int product) {
    on_path_[v] = 1;
    for (const auto& [w, sign] : adj_[v]) {
      if (pos_ && neg_) break;
      const int p = product * sign;
      if (w == anchor_) {
        (p > 0 ? pos_ : neg_) = true;
      } else if (w > anchor_ && !on_path_[w]) {
        dfs(w, p);
      }
    }
    on_path_[v] = 0;
  }

  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::vector<char> on_path_;
  int anchor_ = 0;
};

}  // namespace

bool positive_cycle_exists(const std::vector<SignedArc>& arcs) {
  return CycleScan(arcs).pos_;
}

bool negative_cycle_exists(const std::vector<SignedArc>& arcs) {
  return CycleScan(arcs).neg_;
}

}  // namespace badc
