#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "badc/network.hpp"

namespace badc {

enum class Kind { Positive, Mixed, Negative };
enum class Cycle { Left, Right };

const char* to_string(Kind kind);
Kind kind_from_string(std::string_view text);  // throws Error

// Two cycles of identity/negation automata sharing automaton 0 (the hub),
// whose local function is a two-input AND over the last automaton of each
// cycle. Layout: index 0 = hub, 1..n-1 = left cycle, n..n+m-2 = right cycle.
struct DoubleCycle {
  int n = 0;
  int m = 0;
  Kind kind = Kind::Positive;
  NetworkSpec net;

  int size() const { return n + m - 1; }
  int cycle_size(Cycle c) const { return c == Cycle::Left ? n : m; }
  // Position k within a cycle (0 = hub) to the global automaton index.
  int automaton(Cycle c, int k) const {
    return (k == 0 || c == Cycle::Left) ? k : n - 1 + k;
  }
  Config state_mask() const { return (Config{1} << size()) - 1; }
};

// All chain arcs are identities; the hub input polarities carry the kind:
// positive (+,+), mixed (-,+), negative (-,-). A size-1 cycle feeds the hub
// with itself.
DoubleCycle build_canonical(Kind kind, int n, int m);

// Explicit arc signs for a non-canonical double-cycle. Entry k of a cycle is
// the arc from position k to position (k+1) mod size; the last entry closes
// into the hub.
struct CycleSigns {
  std::vector<int> left;
  std::vector<int> right;

  void validate() const;  // sizes >= 1, entries in {-1, +1}
};

Kind classify(const CycleSigns& signs);

// The network realizing the given signs: negation chain arcs where -1, hub
// polarities from the closing arcs.
NetworkSpec network_from_signs(const CycleSigns& signs);

// x -> x XOR mask, with the hub bit never flipped.
struct Relabeling {
  Config mask = 0;

  bool flips(int automaton) const { return config_bit(mask, automaton); }
  Config apply(Config x) const { return x ^ mask; }
};

struct CanonicalForm {
  DoubleCycle canonical;
  Relabeling relabel;
  // A mixed instance whose negative cycle is the right one canonicalizes to
  // the mirror image of the mixed normal form: a state relabeling cannot
  // move the hub negation across sides.
  bool mirrored = false;
};

// Absorbs chain negations into per-automaton state flips, walking each cycle
// from the hub; the residual sign parity lands on the hub input polarities.
// The relabeling is an exact transition-graph isomorphism onto the result.
CanonicalForm canonicalize(const CycleSigns& signs);

struct Word {
  std::uint32_t bits = 0;
  int len = 0;

  bool bit(int i) const { return (bits >> i) & 1u; }
  friend bool operator==(const Word&, const Word&) = default;
};

Word word_from_string(std::string_view text);  // "0101"; char k = position k
std::string to_string(const Word& w);

// Cyclic count of 01 boundaries: positions k with w_k = 0, w_{k+1 mod len} = 1.
int expressiveness_cycle(const Word& w);

// Projection of a configuration on one cycle; position 0 is the hub bit.
Word cycle_word(const DoubleCycle& dc, Config x, Cycle c);

int expressiveness(const DoubleCycle& dc, Config x);

// Pair notation "(wl,wr)"; both words start with the hub bit.
std::string format_config(const DoubleCycle& dc, Config x);
Config parse_config(const DoubleCycle& dc, std::string_view text);  // throws Error

std::string repeat_word(std::string_view unit, int times,
                        std::string_view tail = "");

}  // namespace badc
