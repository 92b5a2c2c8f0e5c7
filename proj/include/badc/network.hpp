#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace badc {

// A configuration is a packed Boolean word: bit i holds the state of
// automaton i. The enumeration cap keeps full state spaces addressable
// with 32-bit ids.
using Config = std::uint32_t;

inline constexpr int kMaxAutomata = 24;

inline bool config_bit(Config x, int i) { return (x >> i) & 1u; }

inline Config config_with_bit(Config x, int i, bool v) {
  const Config mask = Config{1} << i;
  return v ? (x | mask) : (x & ~mask);
}

inline Config config_flip(Config x, int i) { return x ^ (Config{1} << i); }

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class CapExceeded : public Error {
public:
  using Error::Error;
};

// Raised when an interaction carries both signs over the state space.
class NonSimpleNetwork : public Error {
public:
  using Error::Error;
};

enum class FunctionKind { Identity, Negation, AndGate };

// Local transition functions are restricted to unary identity/negation and
// a two-input conjunction whose inputs may be individually negated.
struct LocalFunction {
  FunctionKind kind = FunctionKind::Identity;
  int a = 0;
  int b = 0;
  bool neg_a = false;
  bool neg_b = false;

  static LocalFunction identity(int source) {
    return {FunctionKind::Identity, source, 0, false, false};
  }
  static LocalFunction negation(int source) {
    return {FunctionKind::Negation, source, 0, false, false};
  }
  static LocalFunction and_gate(int a, bool neg_a, int b, bool neg_b) {
    return {FunctionKind::AndGate, a, b, neg_a, neg_b};
  }

  friend bool operator==(const LocalFunction&, const LocalFunction&) = default;
};

struct NetworkSpec {
  int count = 0;
  std::vector<LocalFunction> functions;

  void validate() const;  // throws Error on out-of-range sources

  friend bool operator==(const NetworkSpec&, const NetworkSpec&) = default;
};

bool eval_local(const NetworkSpec& net, Config x, int i);

// y agrees with x everywhere except automaton i, which takes f_i(x).
Config async_step(const NetworkSpec& net, Config x, int i);

// s(x_j) * (f_i(x) - f_i(x with bit j flipped)), in {-1, 0, +1}.
int interaction_sign(const NetworkSpec& net, Config x, int j, int i);

struct SignedArc {
  int from = 0;
  int to = 0;
  int sign = 0;  // +1 or -1; zero-sign pairs are never stored

  friend auto operator<=>(const SignedArc&, const SignedArc&) = default;
};

// Every (j, i) whose sign is nonzero for some configuration, labeled with
// that sign. Enumerates the full state space; throws NonSimpleNetwork if a
// pair carries both signs, CapExceeded above the enumeration cap.
std::vector<SignedArc> interaction_graph(const NetworkSpec& net,
                                         int cap_bits = kMaxAutomata);

bool positive_cycle_exists(const std::vector<SignedArc>& arcs);
bool negative_cycle_exists(const std::vector<SignedArc>& arcs);

}  // namespace badc
