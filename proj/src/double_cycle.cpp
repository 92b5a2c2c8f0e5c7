#include "badc/double_cycle.hpp"

#include <algorithm>

namespace badc {

const char* to_string(Kind kind) {
  switch (kind) {
    case Kind::Positive: return "positive";
    case Kind::Mixed: return "mixed";
    case Kind::Negative: return "negative";
  }
  return "?";
}

Kind kind_from_string(std::string_view text) {
  if (text == "positive") return Kind::Positive;
  if (text == "mixed") return Kind::Mixed;
  if (text == "negative") return Kind::Negative;
  throw Error("unknown kind '" + std::string(text) +
              "' (expected positive, mixed or negative)");
}

DoubleCycle build_canonical(Kind kind, int n, int m) {
  if (n < 1 || m < 1) throw Error("cycle sizes must be at least 1");
  if (n + m - 1 > kMaxAutomata) {
    throw CapExceeded("double-cycle of size " + std::to_string(n + m - 1) +
                      " exceeds the enumeration cap");
  }
  DoubleCycle dc;
  dc.n = n;
  dc.m = m;
  dc.kind = kind;
  dc.net.count = dc.size();
  dc.net.functions.resize(dc.net.count);

  const bool neg_left = kind != Kind::Positive;
  const bool neg_right = kind == Kind::Negative;
  dc.net.functions[0] = LocalFunction::and_gate(
      dc.automaton(Cycle::Left, n - 1), neg_left,
      dc.automaton(Cycle::Right, m - 1), neg_right);
  for (int k = 1; k < n; ++k) {
    dc.net.functions[dc.automaton(Cycle::Left, k)] =
        LocalFunction::identity(dc.automaton(Cycle::Left, k - 1));
  }
  for (int k = 1; k < m; ++k) {
    dc.net.functions[dc.automaton(Cycle::Right, k)] =
        LocalFunction::identity(dc.automaton(Cycle::Right, k - 1));
  }
  return dc;
}

void CycleSigns::validate() const {
  if (left.empty() || right.empty()) throw Error("cycle sizes must be at least 1");
  for (const auto* v : {&left, &right}) {
    for (int s : *v) {
      if (s != 1 && s != -1) throw Error("arc signs must be +1 or -1");
    }
  }
  const int size = static_cast<int>(left.size() + right.size()) - 1;
  if (size > kMaxAutomata) {
    throw CapExceeded("double-cycle of size " + std::to_string(size) +
                      " exceeds the enumeration cap");
  }
}

namespace {

int sign_product(const std::vector<int>& signs) {
  int p = 1;
  for (int s : signs) p *= s;
  return p;
}

}  // namespace

Kind classify(const CycleSigns& signs) {
  signs.validate();
  const bool left_neg = sign_product(signs.left) < 0;
  const bool right_neg = sign_product(signs.right) < 0;
  if (left_neg && right_neg) return Kind::Negative;
  if (left_neg || right_neg) return Kind::Mixed;
  return Kind::Positive;
}

NetworkSpec network_from_signs(const CycleSigns& signs) {
  signs.validate();
  const int n = static_cast<int>(signs.left.size());
  const int m = static_cast<int>(signs.right.size());
  DoubleCycle layout;
  layout.n = n;
  layout.m = m;

  NetworkSpec net;
  net.count = n + m - 1;
  net.functions.resize(net.count);
  net.functions[0] = LocalFunction::and_gate(
      layout.automaton(Cycle::Left, n - 1), signs.left[n - 1] < 0,
      layout.automaton(Cycle::Right, m - 1), signs.right[m - 1] < 0);
  for (int k = 1; k < n; ++k) {
    const int src = layout.automaton(Cycle::Left, k - 1);
    net.functions[layout.automaton(Cycle::Left, k)] =
        signs.left[k - 1] < 0 ? LocalFunction::negation(src)
                              : LocalFunction::identity(src);
  }
  for (int k = 1; k < m; ++k) {
    const int src = layout.automaton(Cycle::Right, k - 1);
    net.functions[layout.automaton(Cycle::Right, k)] =
        signs.right[k - 1] < 0 ? LocalFunction::negation(src)
                               : LocalFunction::identity(src);
  }
  return net;
}

CanonicalForm canonicalize(const CycleSigns& signs) {
  signs.validate();
  const int n = static_cast<int>(signs.left.size());
  const int m = static_cast<int>(signs.right.size());
  DoubleCycle layout;
  layout.n = n;
  layout.m = m;

  // flips_k = parity of the chain arcs between the hub and position k;
  // flips_0 = false fixes the gauge.
  Relabeling relabel;
  bool parity = false;
  for (int k = 1; k < n; ++k) {
    parity ^= signs.left[k - 1] < 0;
    if (parity) relabel.mask |= Config{1} << layout.automaton(Cycle::Left, k);
  }
  parity = false;
  for (int k = 1; k < m; ++k) {
    parity ^= signs.right[k - 1] < 0;
    if (parity) relabel.mask |= Config{1} << layout.automaton(Cycle::Right, k);
  }

  const bool left_neg = sign_product(signs.left) < 0;
  const bool right_neg = sign_product(signs.right) < 0;

  CanonicalForm out;
  out.relabel = relabel;
  out.mirrored = right_neg && !left_neg;
  out.canonical = build_canonical(classify(signs), n, m);
  out.canonical.net.functions[0] = LocalFunction::and_gate(
      layout.automaton(Cycle::Left, n - 1), left_neg,
      layout.automaton(Cycle::Right, m - 1), right_neg);
  return out;
}

Word word_from_string(std::string_view text) {
  if (text.empty() || text.size() > 32) throw Error("bad word length");
  Word w;
  w.len = static_cast<int>(text.size());
  for (int i = 0; i < w.len; ++i) {
    if (text[i] == '1') {
      w.bits |= std::uint32_t{1} << i;
    } else if (text[i] != '0') {
      throw Error("words may only contain 0 and 1");
    }
  }
  return w;
}

std::string to_string(const Word& w) {
  std::string s(w.len, '0');
  for (int i = 0; i < w.len; ++i) {
    if (w.bit(i)) s[i] = '1';
  }
  return s;
}

int expressiveness_cycle(const Word& w) {
  if (w.len <= 0) throw Error("empty word");
  int count = 0;
  for (int i = 0; i < w.len; ++i) {
    if (!w.bit(i) && w.bit((i + 1) % w.len)) ++count;
  }
  return count;
}

Word cycle_word(const DoubleCycle& dc, Config x, Cycle c) {
  Word w;
  w.len = dc.cycle_size(c);
  for (int k = 0; k < w.len; ++k) {
    if (config_bit(x, dc.automaton(c, k))) w.bits |= std::uint32_t{1} << k;
  }
  return w;
}

int expressiveness(const DoubleCycle& dc, Config x) {
  if ((x & ~dc.state_mask()) != 0) throw Error("configuration out of range");
  return expressiveness_cycle(cycle_word(dc, x, Cycle::Left)) +
         expressiveness_cycle(cycle_word(dc, x, Cycle::Right));
}

std::string format_config(const DoubleCycle& dc, Config x) {
  return "(" + to_string(cycle_word(dc, x, Cycle::Left)) + "," +
         to_string(cycle_word(dc, x, Cycle::Right)) + ")";
}

Config parse_config(const DoubleCycle& dc, std::string_view text) {
  auto fail = [&](const std::string& why) {
    throw Error("bad configuration '" + std::string(text) + "': " + why);
  };
  // tolerate surrounding whitespace only
  size_t b = text.find_first_not_of(" \t");
  size_t e = text.find_last_not_of(" \t");
  if (b == std::string_view::npos) fail("empty");
  text = text.substr(b, e - b + 1);

  if (text.size() < 5 || text.front() != '(' || text.back() != ')') {
    fail("expected \"(wl,wr)\"");
  }
  const size_t comma = text.find(',');
  if (comma == std::string_view::npos) fail("missing comma");
  const std::string_view wl = text.substr(1, comma - 1);
  const std::string_view wr = text.substr(comma + 1, text.size() - comma - 2);
  if (static_cast<int>(wl.size()) != dc.n) fail("left word must have length " + std::to_string(dc.n));
  if (static_cast<int>(wr.size()) != dc.m) fail("right word must have length " + std::to_string(dc.m));
  for (std::string_view w : {wl, wr}) {
    for (char ch : w) {
      if (ch != '0' && ch != '1') fail("words may only contain 0 and 1");
    }
  }
  if (wl[0] != wr[0]) fail("both words must start with the shared hub state");

  Config x = 0;
  if (wl[0] == '1') x |= 1u;
  for (int k = 1; k < dc.n; ++k) {
    if (wl[k] == '1') x |= Config{1} << dc.automaton(Cycle::Left, k);
  }
  for (int k = 1; k < dc.m; ++k) {
    if (wr[k] == '1') x |= Config{1} << dc.automaton(Cycle::Right, k);
  }
  return x;
}

std::string repeat_word(std::string_view unit, int times, std::string_view tail) {
  std::string out;
  out.reserve(unit.size() * std::max(times, 0) + tail.size());
  for (int i = 0; i < times; ++i) out += unit;
  out += tail;
  return out;
}

}  // namespace badc
