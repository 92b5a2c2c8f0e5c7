#include "badc/seqdsl.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace badc::seq {

namespace {

const char* cycle_name(Cycle c) { return c == Cycle::Left ? "left" : "right"; }

}  // namespace

ParseError::ParseError(int line_, int col_, const std::string& what_)
    : Error("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
            ": " + what_),
      line(line_),
      col(col_) {}

std::size_t Trace::effective() const {
  std::size_t k = 0;
  for (const UpdateRecord& u : updates) {
    if (u.before != u.after) ++k;
  }
  return k;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct RawToken {
  std::string text;
  int line = 0;
  int col = 0;
};

bool parse_int(const std::string& s, int& out) {
  if (s.empty() || s.size() > 9) return false;
  out = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
    out = out * 10 + (ch - '0');
  }
  return true;
}

Instruction parse_statement(const std::vector<RawToken>& ts) {
  const RawToken& head = ts[0];
  auto fail = [](const RawToken& t, const std::string& msg) {
    throw ParseError(t.line, t.col, msg);
  };
  auto want = [&](std::size_t k, const char* usage) {
    if (ts.size() != k) fail(head, std::string("usage: ") + usage);
  };
  auto cyc = [&](const RawToken& t) {
    if (t.text == "L") return Cycle::Left;
    if (t.text == "R") return Cycle::Right;
    fail(t, "expected cycle L or R");
    return Cycle::Left;
  };
  auto num = [&](const RawToken& t, int min) {
    int v = 0;
    if (!parse_int(t.text, v)) fail(t, "expected a number, got '" + t.text + "'");
    if (v < min) {
      fail(t, min == 1 ? "automaton index must be at least 1 (only sync updates the hub)"
                       : "number out of range");
    }
    return v;
  };
  auto config_lit = [&](const RawToken& t) {
    if (t.text.size() < 5 || t.text.front() != '(' || t.text.back() != ')' ||
        t.text.find(',') == std::string::npos) {
      fail(t, "expected a configuration literal (wl,wr)");
    }
    return t.text;
  };

  const std::string& name = head.text;
  Instruction ins;
  if (name == "sync") {
    want(1, "sync");
    ins.op = Op::Sync;
  } else if (name == "update") {
    want(3, "update L|R k");
    ins.op = Op::Update;
    ins.cycle = cyc(ts[1]);
    ins.i = num(ts[2], 1);
  } else if (name == "incUp" || name == "decUp") {
    want(4, "incUp|decUp L|R i j");
    ins.op = name == "incUp" ? Op::IncUp : Op::DecUp;
    ins.cycle = cyc(ts[1]);
    ins.i = num(ts[2], 1);
    ins.j = num(ts[3], 0);
  } else if (name == "erase" || name == "expand" || name == "shift") {
    want(2, "erase|expand|shift L|R");
    ins.op = name == "erase" ? Op::Erase : name == "expand" ? Op::Expand : Op::Shift;
    ins.cycle = cyc(ts[1]);
  } else if (name == "fix0" || name == "fix1" || name == "simp" ||
             name == "comp1" || name == "comp2" || name == "comp" ||
             name == "sigma_a" || name == "sigma_a_inv" || name == "sigma_b" ||
             name == "sigma_b_inv") {
    want(1, "macro without arguments");
    ins.op = Op::Macro;
    ins.macro = name;
  } else if (name == "comp_bit") {
    want(2, "comp_bit 0|1");
    ins.op = Op::Macro;
    ins.macro = name;
    ins.bit_arg = num(ts[1], 0);
    if (ins.bit_arg > 1) fail(ts[1], "comp_bit takes 0 or 1");
  } else if (name == "copy" || name == "copy_p") {
    want(2, "copy|copy_p (wl,wr)");
    ins.op = Op::Macro;
    ins.macro = name;
    ins.config_arg = config_lit(ts[1]);
  } else if (name == "copy_c") {
    want(3, "copy_c (wl,wr) L|R");
    ins.op = Op::Macro;
    ins.macro = name;
    ins.config_arg = config_lit(ts[1]);
    ins.cycle = cyc(ts[2]);
    ins.has_cycle = true;
  } else {
    fail(head, "unknown instruction or macro '" + name + "'");
  }
  return ins;
}

}  // namespace

Program parse(std::string_view text) {
  std::vector<std::vector<RawToken>> statements;
  std::vector<RawToken> current;
  auto flush = [&] {
    if (!current.empty()) {
      statements.push_back(current);
      current.clear();
    }
  };

  int line = 1;
  int col = 1;
  bool comment = false;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n') {
      comment = false;
      flush();
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (comment || ch == '#') {
      comment = true;
      ++col;
      ++i;
      continue;
    }
    if (ch == ';') {
      flush();
      ++col;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++col;
      ++i;
      continue;
    }
    const int token_col = col;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
           text[i] != ';' && text[i] != '#') {
      ++col;
      ++i;
    }
    current.push_back({std::string(text.substr(start, i - start)), line, token_col});
  }
  flush();

  Program program;
  program.reserve(statements.size());
  for (const auto& st : statements) program.push_back(parse_statement(st));
  return program;
}

// ---------------------------------------------------------------------------
// interpretation

namespace {

class Runner {
public:
  Runner(const DoubleCycle& dc, Config start, const ExecOptions& opt)
      : dc_(dc), opt_(opt), x_(start) {
    if ((start & ~dc.state_mask()) != 0) {
      throw Error("start configuration out of range for " +
                  std::to_string(dc.size()) + " automata");
    }
  }

  void run(const Program& program) {
    for (const Instruction& ins : program) run(ins);
  }

  void run(const Instruction& ins) {
    switch (ins.op) {
      case Op::Sync: sync(); return;
      case Op::Update: update(ins.cycle, ins.i); return;
      case Op::IncUp: inc_up(ins.cycle, ins.i, ins.j); return;
      case Op::DecUp: dec_up(ins.cycle, ins.i, ins.j); return;
      case Op::Erase: erase(ins.cycle); return;
      case Op::Expand: expand(ins.cycle); return;
      case Op::Shift: shift(ins.cycle); return;
      case Op::Macro: run_macro(ins); return;
    }
    throw Error("unreachable instruction op");
  }

  Trace take() {
    tr_.final_config = x_;
    return std::move(tr_);
  }

  // -- elementary instructions

  void sync() { apply(0); }

  void update(Cycle c, int k) {
    if (k < 1) throw Error("only sync may update the hub");
    if (k > dc_.cycle_size(c) - 1) {
      throw Error("position " + std::to_string(k) + " out of range for the " +
                  std::string(cycle_name(c)) + " cycle");
    }
    apply(dc_.automaton(c, k));
  }

  void inc_up(Cycle c, int i, int j) {
    check_span(c, i, j);
    for (int k = i; k <= j; ++k) update(c, k);
  }

  void dec_up(Cycle c, int i, int j) {
    check_span(c, i, j);
    for (int k = j; k >= i; --k) update(c, k);
  }

  void erase(Cycle c) { inc_up(c, 1, dc_.cycle_size(c) - 1); }
  void shift(Cycle c) { dec_up(c, 1, dc_.cycle_size(c) - 1); }

  void expand(Cycle c) {
    const int s = dc_.cycle_size(c);
    const bool hub_one = hub();
    int kappa = -1;
    for (int k = 1; k <= s - 1; ++k) {
      const bool wk = cbit(c, k);
      const bool wk1 = cbit(c, (k + 1) % s);
      if (hub_one ? (!wk && wk1) : (wk && !wk1)) {
        kappa = k;
        break;
      }
    }
    if (kappa < 0) {
      if (opt_.expand_undefined_error) {
        throw Error(std::string("expand: no pattern boundary in the ") +
                    cycle_name(c) + " cycle");
      }
      note(std::string("expand: no pattern boundary in the ") + cycle_name(c) +
           " cycle, skipped");
      return;
    }
    inc_up(c, 1, kappa - 1);
  }

  // -- macros

  void run_macro(const Instruction& ins) {
    const std::string& name = ins.macro;
    if (name == "copy") {
      m_copy(target_of(ins));
    } else if (name == "copy_c") {
      m_copy_c(target_of(ins), ins.cycle);
    } else if (name == "copy_p") {
      m_copy_p(target_of(ins));
    } else if (name == "fix0") {
      m_fix0();
    } else if (name == "fix1") {
      m_fix1();
    } else if (name == "simp") {
      m_simp();
    } else if (name == "comp1") {
      m_comp1();
    } else if (name == "comp2") {
      m_comp2();
    } else if (name == "comp") {
      m_comp();
    } else if (name == "comp_bit") {
      m_comp_bit(ins.bit_arg == 1);
    } else if (name == "sigma_a") {
      m_sigma_a();
    } else if (name == "sigma_a_inv") {
      m_sigma_a_inv();
    } else if (name == "sigma_b") {
      m_sigma_b();
    } else if (name == "sigma_b_inv") {
      m_sigma_b_inv();
    } else {
      throw Error("unknown macro '" + name + "'");
    }
  }

  void m_copy_c(Config target, Cycle c) {
    const int s = dc_.cycle_size(c);
    if (s <= 1) return;
    int j;
    if (cbit(c, s - 1) == cbit(c, s - 2) && cbit(c, s - 1) != tbit(target, c, s - 1)) {
      j = 0;
      for (int k = s - 2; k >= 1; --k) {
        if (cbit(c, k) != tbit(target, c, k)) {
          j = k;
          break;
        }
      }
      if (j == 0) {
        // the boundary must change but the sweep has nothing to anchor on
        throw MacroPreconditionError(
            std::string("copy_c: the ") + cycle_name(c) +
            " cycle boundary differs from the target but no interior position does");
      }
    } else {
      j = s;
    }
    // double-switch walk down to the anchor, then a single-switch sweep
    for (int k = s - 1; k >= j + 1; --k) {
      update(c, k - 1);
      update(c, k);
    }
    const int sweep_from = j == s ? s - 1 : j - 1;
    for (int k = sweep_from; k >= 1; --k) {
      if (cbit(c, k) != tbit(target, c, k)) update(c, k);
    }
  }

  void m_copy(Config target) {
    check_target(target);
    if (hub() != config_bit(target, 0)) {
      throw MacroPreconditionError("copy: the hub state differs from the target's");
    }
    for (Cycle c : {Cycle::Left, Cycle::Right}) {
      if (copy_property(c, target) == 0) {
        throw MacroPreconditionError(
            std::string("copy: the ") + cycle_name(c) +
            " cycle satisfies none of the three entry shapes");
      }
    }
    m_copy_c(target, Cycle::Left);
    m_copy_c(target, Cycle::Right);
    check_landing("copy", target);
  }

  void m_copy_p(Config target) {
    check_target(target);
    for (Cycle c : {Cycle::Left, Cycle::Right}) {
      for (int k = 1; k <= dc_.cycle_size(c) - 1; ++k) {
        if (cbit(c, k) == cbit(c, k - 1)) {
          throw MacroPreconditionError(std::string("copy_p: the ") + cycle_name(c) +
                                       " cycle is not alternating");
        }
      }
    }
    if (hub() != config_bit(target, 0)) {
      shift(Cycle::Left);
      shift(Cycle::Right);
      sync();
    }
    m_copy(target);
  }

  void m_fix0() {
    require_kind(Kind::Positive, "fix0");
    if (x_ == dc_.state_mask()) {
      throw MacroPreconditionError("fix0: no automaton is at state 0");
    }
    if (hub()) {
      const int i = find_state(Cycle::Left, false);
      if (i > 0) {
        note("fix0: propagating a 0 along the left cycle");
        inc_up(Cycle::Left, i + 1, dc_.n - 1);
      } else {
        const int jz = find_state(Cycle::Right, false);
        note("fix0: left cycle all ones, mirrored onto the right cycle");
        inc_up(Cycle::Right, jz + 1, dc_.m - 1);
      }
      sync();
    }
    erase(Cycle::Left);
    erase(Cycle::Right);
    check_landing("fix0", 0);
  }

  void m_fix1() {
    require_kind(Kind::Positive, "fix1");
    if (!hub()) {
      const int i = find_state(Cycle::Left, true);
      if (i < 0) {
        throw MacroPreconditionError("fix1: the left cycle has no automaton at state 1");
      }
      inc_up(Cycle::Left, i + 1, dc_.n - 1);
      const int j = find_state(Cycle::Right, true);
      if (j < 0) {
        throw MacroPreconditionError("fix1: the right cycle has no automaton at state 1");
      }
      inc_up(Cycle::Right, j + 1, dc_.m - 1);
      sync();
    }
    erase(Cycle::Left);
    erase(Cycle::Right);
    check_landing("fix1", dc_.state_mask());
  }

  void m_simp() {
    if (dc_.kind == Kind::Positive) {
      throw MacroPreconditionError("simp: needs a mixed or negative double-cycle");
    }
    if (hub()) {
      erase(Cycle::Left);
      sync();
    }
    erase(Cycle::Left);
    erase(Cycle::Right);
    check_landing("simp", 0);
  }

  void m_comp1() {
    require_kind(Kind::Negative, "comp1");
    const bool cert = x_ == 0 && dc_.n % 2 == 0 && dc_.m >= 2;
    if (!cert) uncertified("comp1");
    comp1_body();
    if (cert) check_landing("comp1", comp1_target());
  }

  void m_comp2() {
    require_kind(Kind::Negative, "comp2");
    const bool cert =
        dc_.n % 2 == 0 && dc_.m % 2 == 0 && dc_.m >= 2 && x_ == comp1_target();
    if (!cert) uncertified("comp2");
    comp2_body();
    if (cert) check_landing("comp2", cfg(repeat_word("10", dc_.n / 2),
                                         repeat_word("10", dc_.m / 2)));
  }

  void m_comp() {
    require_kind(Kind::Negative, "comp");
    const bool cert = x_ == 0 && dc_.n % 2 == 0 && dc_.m % 2 == 0 && dc_.m >= 2;
    if (!cert) uncertified("comp");
    comp1_body();
    comp2_body();
    if (cert) check_landing("comp", comp_target());
  }

  void m_comp_bit(bool b) {
    require_kind(Kind::Negative, "comp_bit");
    const bool n_odd = dc_.n % 2 == 1;
    const bool m_odd = dc_.m % 2 == 1;
    const bool cert = x_ == 0 && !n_odd && !m_odd && b;
    if (!cert) uncertified("comp_bit");
    comp1_body();
    comp2_body();
    if (b && (n_odd || m_odd)) {
      if (dc_.n < 2 || dc_.m < 2) {
        note("comp_bit: sigma suffix undefined for size-1 cycles, skipped");
      } else if (n_odd && !m_odd) {
        sigma_a_body();
      } else if (!n_odd && m_odd) {
        sigma_a_mirror_body();
      } else {
        sigma_b_body();
      }
    } else if (!b && !n_odd && !m_odd) {
      note("comp_bit: hub bit 0 is unreachable from the even/even landing");
    }
    if (cert) check_landing("comp_bit", comp_target());
  }

  void m_sigma_a() {
    require_kind(Kind::Negative, "sigma_a");
    const bool cert = sigma_a_sizes() && x_ == sigma_a_form(false);
    if (!cert) uncertified("sigma_a");
    sigma_a_body();
    if (cert) check_landing("sigma_a", sigma_a_form(true));
  }

  void m_sigma_a_inv() {
    require_kind(Kind::Negative, "sigma_a_inv");
    const bool cert = sigma_a_sizes() && x_ == sigma_a_form(true);
    if (!cert) uncertified("sigma_a_inv");
    sigma_a_inv_body();
    if (cert) check_landing("sigma_a_inv", sigma_a_form(false));
  }

  void m_sigma_b() {
    require_kind(Kind::Negative, "sigma_b");
    const bool cert = sigma_b_sizes() && x_ == sigma_b_form(false);
    if (!cert) uncertified("sigma_b");
    sigma_b_body();
    if (cert) check_landing("sigma_b", sigma_b_form(true));
  }

  void m_sigma_b_inv() {
    require_kind(Kind::Negative, "sigma_b_inv");
    const bool cert = sigma_b_sizes() && x_ == sigma_b_form(true);
    if (!cert) uncertified("sigma_b_inv");
    sigma_b_inv_body();
    if (cert) check_landing("sigma_b_inv", sigma_b_form(false));
  }

private:
  void apply(int automaton) {
    const bool before = config_bit(x_, automaton);
    const bool after = eval_local(dc_.net, x_, automaton);
    x_ = config_with_bit(x_, automaton, after);
    tr_.updates.push_back({static_cast<std::uint8_t>(automaton), before, after});
  }

  void check_span(Cycle c, int i, int j) {
    if (i < 1) throw Error("only sync may update the hub");
    if (j >= i && j > dc_.cycle_size(c) - 1) {
      throw Error("position " + std::to_string(j) + " out of range for the " +
                  std::string(cycle_name(c)) + " cycle");
    }
  }

  bool hub() const { return config_bit(x_, 0); }
  bool cbit(Cycle c, int k) const { return config_bit(x_, dc_.automaton(c, k)); }
  bool tbit(Config t, Cycle c, int k) const {
    return config_bit(t, dc_.automaton(c, k));
  }

  void check_target(Config target) const {
    if ((target & ~dc_.state_mask()) != 0) {
      throw Error("target configuration out of range");
    }
  }

  // first position k >= 1 of the cycle whose state equals `state`, or -1
  int find_state(Cycle c, bool state) const {
    for (int k = 1; k <= dc_.cycle_size(c) - 1; ++k) {
      if (cbit(c, k) == state) return k;
    }
    return -1;
  }

  // copy entry shapes: 1 = alternating throughout, 2 = alternating up to the
  // boundary with the boundary already matching the target, 3 = alternating
  // up to the boundary with some interior difference from the target.
  int copy_property(Cycle c, Config target) const {
    const int s = dc_.cycle_size(c);
    bool alt_full = true;
    bool alt_core = true;
    for (int k = 1; k <= s - 1; ++k) {
      if (cbit(c, k) == cbit(c, k - 1)) {
        alt_full = false;
        if (k <= s - 2) alt_core = false;
      }
    }
    if (alt_full) return 1;
    if (!alt_core) return 0;
    if (cbit(c, s - 1) == tbit(target, c, s - 1)) return 2;
    for (int p = 1; p <= s - 2; ++p) {
      if (cbit(c, p) != tbit(target, c, p)) return 3;
    }
    return 0;
  }

  void require_kind(Kind k, const char* name) const {
    if (dc_.kind != k) {
      throw MacroPreconditionError(std::string(name) + ": needs a " +
                                   to_string(k) + " double-cycle");
    }
  }

  void note(const std::string& text) { tr_.notes.push_back(text); }

  void uncertified(const std::string& name) {
    tr_.certified = false;
    note(name + ": uncertified, start or cycle sizes outside the certified case");
  }

  void check_landing(const std::string& name, Config expected) {
    if (x_ != expected) {
      tr_.certified = false;
      note(name + ": landing mismatch, got " + format_config(dc_, x_) +
           " expected " + format_config(dc_, expected));
    }
  }

  Config cfg(const std::string& wl, const std::string& wr) const {
    return parse_config(dc_, "(" + wl + "," + wr + ")");
  }

  Config comp1_target() const {
    return cfg(repeat_word("10", dc_.n / 2), repeat_word("1", dc_.m));
  }

  // certified landing for even cycle sizes only; odd sizes leave the
  // composition uncertified and the sigma sequences carry the replay instead
  Config comp_target() const { return most_expressive(true); }

  // The recurrent maximally expressive configuration with the given hub bit.
  Config most_expressive(bool hub_one) const {
    const int n = dc_.n;
    const int m = dc_.m;
    const bool n_odd = n % 2 == 1;
    const bool m_odd = m % 2 == 1;
    const char* u = hub_one ? "10" : "01";
    if (!n_odd && !m_odd) {
      return cfg(repeat_word(u, n / 2), repeat_word(u, m / 2));
    }
    if (n_odd && !m_odd) {
      return cfg(repeat_word(u, (n - 1) / 2, "0"), repeat_word(u, m / 2));
    }
    if (!n_odd && m_odd) {
      return cfg(repeat_word(u, n / 2), repeat_word(u, (m - 1) / 2, "0"));
    }
    return cfg(repeat_word(u, (n - 1) / 2, hub_one ? "0" : "1"),
               repeat_word(u, (m - 1) / 2, "0"));
  }

  bool sigma_a_sizes() const {
    return dc_.n % 2 == 1 && dc_.n > 1 && dc_.m % 2 == 0 && dc_.m >= 2;
  }
  bool sigma_b_sizes() const {
    return dc_.n % 2 == 1 && dc_.n > 1 && dc_.m % 2 == 1 && dc_.m > 1;
  }

  // valid only after the matching size check passed
  Config sigma_a_form(bool hub_one) const { return most_expressive(hub_one); }
  Config sigma_b_form(bool hub_one) const { return most_expressive(hub_one); }

  void comp1_body() {
    for (int i = 1; i <= dc_.n - 1; ++i) {
      sync();
      expand(Cycle::Left);
      erase(Cycle::Right);
    }
  }

  void comp2_body() {
    const Word right = cycle_word(dc_, x_, Cycle::Right);
    if (right.bits == (std::uint32_t{1} << right.len) - 1) {
      sync();
      erase(Cycle::Right);
    }
    sync();
    expand(Cycle::Right);
    for (int i = 1; i <= dc_.m - 2; ++i) {
      shift(Cycle::Left);
      sync();
      expand(Cycle::Right);
    }
  }

  void sigma_a_body() {
    shift(Cycle::Left);
    shift(Cycle::Right);
    update(Cycle::Left, dc_.n - 1);
    sync();
  }

  void sigma_a_mirror_body() {
    shift(Cycle::Left);
    shift(Cycle::Right);
    update(Cycle::Right, dc_.m - 1);
    sync();
  }

  void sigma_a_inv_body() {
    shift(Cycle::Left);
    shift(Cycle::Right);
    sync();
  }

  void sigma_b_body() {
    shift(Cycle::Left);
    shift(Cycle::Right);
    update(Cycle::Left, dc_.n - 1);
    update(Cycle::Right, dc_.m - 1);
    sync();
  }

  void sigma_b_inv_body() {
    shift(Cycle::Left);
    shift(Cycle::Right);
    update(Cycle::Left, dc_.n - 1);
    sync();
  }

  Config target_of(const Instruction& ins) const {
    if (ins.config_arg.empty()) throw Error("macro needs a target configuration");
    return parse_config(dc_, ins.config_arg);
  }

  const DoubleCycle& dc_;
  ExecOptions opt_;
  Config x_;
  Trace tr_;
};

Trace run_one(const DoubleCycle& dc, Config x, void (Runner::*method)()) {
  Runner r(dc, x, {});
  (r.*method)();
  return r.take();
}

}  // namespace

Trace exec(const DoubleCycle& dc, Config start, const Program& program,
           const ExecOptions& opt) {
  Runner r(dc, start, opt);
  r.run(program);
  return r.take();
}

Trace copy_c(const DoubleCycle& dc, Config x, Config target, Cycle cycle) {
  Runner r(dc, x, {});
  r.m_copy_c(target, cycle);
  return r.take();
}

Trace copy(const DoubleCycle& dc, Config x, Config target) {
  Runner r(dc, x, {});
  r.m_copy(target);
  return r.take();
}

Trace copy_p(const DoubleCycle& dc, Config x, Config target) {
  Runner r(dc, x, {});
  r.m_copy_p(target);
  return r.take();
}

Trace fix0(const DoubleCycle& dc, Config x) { return run_one(dc, x, &Runner::m_fix0); }
Trace fix1(const DoubleCycle& dc, Config x) { return run_one(dc, x, &Runner::m_fix1); }
Trace simp(const DoubleCycle& dc, Config x) { return run_one(dc, x, &Runner::m_simp); }
Trace comp1(const DoubleCycle& dc, Config x) { return run_one(dc, x, &Runner::m_comp1); }
Trace comp2(const DoubleCycle& dc, Config x) { return run_one(dc, x, &Runner::m_comp2); }
Trace comp(const DoubleCycle& dc, Config x) { return run_one(dc, x, &Runner::m_comp); }

Trace comp_bit(const DoubleCycle& dc, Config x, bool b) {
  Runner r(dc, x, {});
  r.m_comp_bit(b);
  return r.take();
}

Trace sigma_a(const DoubleCycle& dc, Config x) { return run_one(dc, x, &Runner::m_sigma_a); }
Trace sigma_a_inv(const DoubleCycle& dc, Config x) { return run_one(dc, x, &Runner::m_sigma_a_inv); }
Trace sigma_b(const DoubleCycle& dc, Config x) { return run_one(dc, x, &Runner::m_sigma_b); }
Trace sigma_b_inv(const DoubleCycle& dc, Config x) { return run_one(dc, x, &Runner::m_sigma_b_inv); }

void write_trace_text(std::ostream& os, const DoubleCycle& dc, const Trace& t) {
  int step = 1;
  for (const UpdateRecord& u : t.updates) {
    os << "(" << step++ << ", " << static_cast<int>(u.automaton) << ", "
       << (u.before ? 1 : 0) << "→" << (u.after ? 1 : 0) << ")\n";
  }
  os << "final " << format_config(dc, t.final_config) << "\n";
  os << "attempted " << t.attempted() << " effective " << t.effective() << "\n";
  for (const std::string& n : t.notes) os << "note: " << n << "\n";
}

}  // namespace badc::seq
