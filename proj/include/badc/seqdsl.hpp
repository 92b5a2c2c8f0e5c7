#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "badc/double_cycle.hpp"

namespace badc::seq {

enum class Op { Sync, Update, IncUp, DecUp, Erase, Expand, Shift, Macro };

struct Instruction {
  Op op = Op::Sync;
  Cycle cycle = Cycle::Left;
  int i = 0;
  int j = 0;
  std::string macro;       // Op::Macro name
  std::string config_arg;  // copy-family target literal "(wl,wr)"
  int bit_arg = -1;        // comp_bit argument
  bool has_cycle = false;  // copy_c carries an explicit cycle
};

using Program = std::vector<Instruction>;

class ParseError : public Error {
public:
  ParseError(int line, int col, const std::string& what);
  int line = 0;
  int col = 0;
};

// One instruction per line or ';'-separated; '#' starts a comment. Cycles
// are written L/R, automaton indices start at 1 (only sync reaches the hub).
Program parse(std::string_view text);

class MacroPreconditionError : public Error {
public:
  using Error::Error;
};

struct UpdateRecord {
  std::uint8_t automaton = 0;
  bool before = false;
  bool after = false;
};

struct Trace {
  std::vector<UpdateRecord> updates;
  Config final_config = 0;
  bool certified = true;           // every macro ran inside its certified case
  std::vector<std::string> notes;  // skipped expands, variants, uncertified runs

  std::size_t attempted() const { return updates.size(); }
  std::size_t effective() const;
};

struct ExecOptions {
  // expand with no matching pattern boundary: skip with a note, or throw.
  bool expand_undefined_error = false;
};

// Applies a program left to right; pure in (network, start, program).
Trace exec(const DoubleCycle& dc, Config start, const Program& program,
           const ExecOptions& opt = {});

// Named update sequences. copy-family and fix0/fix1 throw
// MacroPreconditionError when their entry conditions fail; the comp family
// and the sigma sequences run anyway and mark the trace uncertified.
Trace copy_c(const DoubleCycle& dc, Config x, Config target, Cycle cycle);
Trace copy(const DoubleCycle& dc, Config x, Config target);
Trace copy_p(const DoubleCycle& dc, Config x, Config target);
Trace fix0(const DoubleCycle& dc, Config x);
Trace fix1(const DoubleCycle& dc, Config x);
Trace simp(const DoubleCycle& dc, Config x);
Trace comp1(const DoubleCycle& dc, Config x);
Trace comp2(const DoubleCycle& dc, Config x);
Trace comp(const DoubleCycle& dc, Config x);
Trace comp_bit(const DoubleCycle& dc, Config x, bool b);
Trace sigma_a(const DoubleCycle& dc, Config x);
Trace sigma_a_inv(const DoubleCycle& dc, Config x);
Trace sigma_b(const DoubleCycle& dc, Config x);
Trace sigma_b_inv(const DoubleCycle& dc, Config x);

// "(step, automaton, old→new)" lines followed by the final configuration
// and the update counts.
void write_trace_text(std::ostream& os, const DoubleCycle& dc, const Trace& t);

}  // namespace badc::seq
