#include "badc/verify.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "badc/dynamics.hpp"
#include "badc/seqdsl.hpp"

namespace badc {

int VerificationReport::passed() const {
  int k = 0;
  for (const VerificationCase& c : cases) {
    if (c.pass) ++k;
  }
  return k;
}

int VerificationReport::failed() const {
  return static_cast<int>(cases.size()) - passed();
}

void VerificationReport::merge(VerificationReport other) {
  for (VerificationCase& c : other.cases) cases.push_back(std::move(c));
}

VerificationReport VerificationReport::filter(std::string_view id_prefix) const {
  VerificationReport out;
  for (const VerificationCase& c : cases) {
    if (c.id.rfind(id_prefix, 0) == 0) out.cases.push_back(c);
  }
  return out;
}

std::vector<std::pair<int, int>> size_pairs(int min_n, int min_m, int max_bits) {
  std::vector<std::pair<int, int>> out;
  for (int n = min_n; n + min_m - 1 <= max_bits; ++n) {
    for (int m = min_m; n + m - 1 <= max_bits; ++m) out.emplace_back(n, m);
  }
  return out;
}

std::vector<std::pair<int, int>> even_size_pairs(int max_bits) {
  std::vector<std::pair<int, int>> out;
  for (int n = 2; n + 1 <= max_bits; n += 2) {
    for (int m = 2; n + m - 1 <= max_bits; m += 2) out.emplace_back(n, m);
  }
  return out;
}

namespace {

struct Ctx {
  DoubleCycle dc;
  TransitionGraph g;
  AttractorAnalysis an;
};

Ctx make_ctx(Kind kind, int n, int m) {
  Ctx c;
  c.dc = build_canonical(kind, n, m);
  c.g = build_graph(c.dc.net);
  c.an = analyze(c.g);
  return c;
}

Config cfg(const DoubleCycle& dc, const std::string& wl, const std::string& wr) {
  return parse_config(dc, "(" + wl + "," + wr + ")");
}

VerificationCase vcase(std::string id, const DoubleCycle& dc, bool pass,
                       std::string measured, std::string expected) {
  VerificationCase c;
  c.id = std::move(id);
  c.n = dc.n;
  c.m = dc.m;
  c.kind = to_string(dc.kind);
  c.measured = std::move(measured);
  c.expected = std::move(expected);
  c.pass = pass;
  return c;
}

std::string attractor_summary(const AttractorAnalysis& an, const DoubleCycle& dc) {
  std::ostringstream os;
  os << an.attractors.size() << " attractor(s):";
  for (const Attractor& a : an.attractors) {
    os << " {size " << a.size() << ", min " << format_config(dc, a.smallest()) << "}";
    if (os.tellp() > 90) {
      os << " ...";
      break;
    }
  }
  return os.str();
}

// starts to replay sequences from; exhaustive below the limit, seeded sample above
std::vector<Config> start_set(const DoubleCycle& dc, const VerifyLimits& lim) {
  std::vector<Config> out;
  const Config states = dc.state_mask() + 1;
  if (dc.size() <= lim.exhaustive_bits) {
    out.reserve(states);
    for (Config x = 0; x < states; ++x) out.push_back(x);
    return out;
  }
  std::mt19937_64 rng(lim.seed ^ (static_cast<std::uint64_t>(dc.n) << 32 | dc.m));
  std::uniform_int_distribution<Config> dist(0, states - 1);
  out.reserve(lim.sample_count);
  for (int i = 0; i < lim.sample_count; ++i) out.push_back(dist(rng));
  return out;
}

bool word_all(const Word& w, bool state) {
  const std::uint32_t full = (std::uint32_t{1} << w.len) - 1;
  return state ? w.bits == full : w.bits == 0;
}

bool one_in_both_cycles(const DoubleCycle& dc, Config x) {
  if (config_bit(x, 0)) return true;
  return !word_all(cycle_word(dc, x, Cycle::Left), false) &&
         !word_all(cycle_word(dc, x, Cycle::Right), false);
}

// Independent restatement of the copy entry conditions, used to pick the
// pairs the exhaustive replay must cover.
bool copy_cycle_admissible(const DoubleCycle& dc, Config x, Config target, Cycle c) {
  const int s = dc.cycle_size(c);
  auto xv = [&](int k) { return config_bit(x, dc.automaton(c, k)); };
  auto tv = [&](int k) { return config_bit(target, dc.automaton(c, k)); };
  bool alt_full = true;
  bool alt_core = true;
  for (int k = 1; k <= s - 1; ++k) {
    if (xv(k) == xv(k - 1)) {
      alt_full = false;
      if (k <= s - 2) alt_core = false;
    }
  }
  if (alt_full) return true;
  if (!alt_core) return false;
  if (xv(s - 1) == tv(s - 1)) return true;
  for (int p = 1; p <= s - 2; ++p) {
    if (xv(p) != tv(p)) return true;
  }
  return false;
}

bool copy_admissible(const DoubleCycle& dc, Config x, Config target) {
  return config_bit(x, 0) == config_bit(target, 0) &&
         copy_cycle_admissible(dc, x, target, Cycle::Left) &&
         copy_cycle_admissible(dc, x, target, Cycle::Right);
}

// The recurrent maximally expressive configuration with the given hub bit
// (independent restatement of the sequence module's landing table).
Config most_expressive_form(const DoubleCycle& dc, bool hub_one) {
  const int n = dc.n;
  const int m = dc.m;
  const char* u = hub_one ? "10" : "01";
  const bool n_odd = n % 2 == 1;
  const bool m_odd = m % 2 == 1;
  if (!n_odd && !m_odd) return cfg(dc, repeat_word(u, n / 2), repeat_word(u, m / 2));
  if (n_odd && !m_odd) {
    return cfg(dc, repeat_word(u, (n - 1) / 2, "0"), repeat_word(u, m / 2));
  }
  if (!n_odd && m_odd) {
    return cfg(dc, repeat_word(u, n / 2), repeat_word(u, (m - 1) / 2, "0"));
  }
  return cfg(dc, repeat_word(u, (n - 1) / 2, hub_one ? "0" : "1"),
             repeat_word(u, (m - 1) / 2, "0"));
}

// The irreversible pattern families of negative double-cycles: an odd cycle
// of size > 1 frozen at the alternating word ending in 1 (the other cycle
// free), plus the doubly-alternating-ending-in-0 configuration when both
// cycles are odd.
std::set<Config> irreversible_family(const DoubleCycle& dc) {
  std::set<Config> out;
  const int n = dc.n;
  const int m = dc.m;
  if (n % 2 == 1 && n > 1) {
    const Word want = word_from_string(repeat_word("10", (n - 1) / 2, "1"));
    for (Config x = 0; x <= dc.state_mask(); ++x) {
      if (cycle_word(dc, x, Cycle::Left) == want) out.insert(x);
    }
  }
  if (m % 2 == 1 && m > 1) {
    const Word want = word_from_string(repeat_word("10", (m - 1) / 2, "1"));
    for (Config x = 0; x <= dc.state_mask(); ++x) {
      if (cycle_word(dc, x, Cycle::Right) == want) out.insert(x);
    }
  }
  if (n % 2 == 1 && n > 1 && m % 2 == 1 && m > 1) {
    out.insert(cfg(dc, repeat_word("01", (n - 1) / 2, "0"),
                   repeat_word("01", (m - 1) / 2, "0")));
  }
  return out;
}

int alpha(int k) { return (k > 0 && k % 2 == 0) ? 1 : 0; }

VerificationReport positive_case(int n, int m, const VerifyLimits& lim) {
  VerificationReport rep;
  Ctx c = make_ctx(Kind::Positive, n, m);
  const Config ones = c.dc.state_mask();

  const bool two_stable = c.an.attractors.size() == 2 &&
                          c.an.attractors[0].members == std::vector<Config>{0} &&
                          c.an.attractors[1].members == std::vector<Config>{ones};
  rep.add(vcase("positive/stable-pair", c.dc, two_stable,
                attractor_summary(c.an, c.dc),
                "exactly {" + format_config(c.dc, 0) + "} and {" +
                    format_config(c.dc, ones) + "}"));

  const int time_bound = 2 * (n + m) - 5;
  const ConvergenceReport conv = convergence(c.g, c.an);
  rep.add(vcase("positive/convergence-time", c.dc,
                static_cast<int>(conv.network_time) <= time_bound,
                "network convergence time " + std::to_string(conv.network_time),
                "<= 2(n+m)-5 = " + std::to_string(time_bound)));

  if (n >= 2 && m >= 2 && c.dc.size() <= lim.exhaustive_bits) {
    const Word left_full = word_from_string(repeat_word("1", n));
    int fails = 0;
    std::size_t max_eff = 0;
    int starts = 0;
    for (Config x = 0; x <= ones; ++x) {
      if (x == ones) continue;  // no automaton at 0
      ++starts;
      const bool mirrored =
          config_bit(x, 0) && cycle_word(c.dc, x, Cycle::Left) == left_full;
      const int bound = mirrored ? n + 2 * m - 3 : 2 * n + m - 3;
      const seq::Trace t = seq::fix0(c.dc, x);
      max_eff = std::max(max_eff, t.effective());
      if (t.final_config != 0 || static_cast<int>(t.effective()) > bound) ++fails;
    }
    rep.add(vcase("positive/fix0-all-starts", c.dc, fails == 0,
                  std::to_string(starts) + " starts, max effective " +
                      std::to_string(max_eff) + ", " + std::to_string(fails) +
                      " failures",
                  "lands on " + format_config(c.dc, 0) +
                      " within 2n+m-3 (mirrored: n+2m-3)"));

    fails = 0;
    max_eff = 0;
    starts = 0;
    const int bound1 = 2 * (n + m) - 5;
    for (Config x = 0; x <= ones; ++x) {
      if (!one_in_both_cycles(c.dc, x)) continue;
      ++starts;
      const seq::Trace t = seq::fix1(c.dc, x);
      max_eff = std::max(max_eff, t.effective());
      if (t.final_config != ones || static_cast<int>(t.effective()) > bound1) ++fails;
    }
    rep.add(vcase("positive/fix1-all-starts", c.dc, fails == 0,
                  std::to_string(starts) + " starts, max effective " +
                      std::to_string(max_eff) + ", " + std::to_string(fails) +
                      " failures",
                  "lands on " + format_config(c.dc, ones) + " within 2(n+m)-5 = " +
                      std::to_string(bound1)));
  }
  return rep;
}

VerificationReport mixed_case(int n, int m, const VerifyLimits& lim) {
  VerificationReport rep;
  Ctx c = make_ctx(Kind::Mixed, n, m);

  const bool unique = c.an.attractors.size() == 1 &&
                      c.an.attractors[0].members == std::vector<Config>{0};
  rep.add(vcase("mixed/single-attractor", c.dc, unique,
                attractor_summary(c.an, c.dc),
                "exactly {" + format_config(c.dc, 0) + "}"));

  const int bound = 2 * n + m - 2;
  const ConvergenceReport conv = convergence(c.g, c.an);
  rep.add(vcase("mixed/convergence-time", c.dc,
                static_cast<int>(conv.network_time) <= bound,
                "network convergence time " + std::to_string(conv.network_time),
                "<= 2n+m-2 = " + std::to_string(bound)));

  if (n >= 2 && m >= 2) {
    int fails = 0;
    std::size_t max_eff = 0;
    const std::vector<Config> starts = start_set(c.dc, lim);
    for (Config x : starts) {
      const seq::Trace t = seq::simp(c.dc, x);
      max_eff = std::max(max_eff, t.effective());
      if (t.final_config != 0 || static_cast<int>(t.effective()) > bound) ++fails;
    }
    rep.add(vcase("mixed/simp-all-starts", c.dc, fails == 0,
                  std::to_string(starts.size()) + " starts, max effective " +
                      std::to_string(max_eff) + ", " + std::to_string(fails) +
                      " failures",
                  "lands on " + format_config(c.dc, 0) + " within " +
                      std::to_string(bound)));
  }
  return rep;
}

VerificationReport negative_case(int n, int m, const VerifyLimits& lim) {
  VerificationReport rep;
  Ctx c = make_ctx(Kind::Negative, n, m);
  const int bits = c.dc.size();

  rep.add(vcase("negative/single-attractor", c.dc, c.an.attractors.size() == 1,
                attractor_summary(c.an, c.dc), "exactly one attractor"));

  const std::int64_t space = std::int64_t{1} << bits;
  const std::int64_t i_sum = alpha(n - 1) * (std::int64_t{1} << (m - 1)) +
                             alpha(m - 1) * (std::int64_t{1} << (n - 1));
  const std::int64_t i_diff = alpha(n - 1) * (std::int64_t{1} << (m - 1)) -
                              alpha(m - 1) * (std::int64_t{1} << (n - 1));
  const std::int64_t actual =
      c.an.attractors.size() == 1 ? static_cast<std::int64_t>(c.an.attractors[0].size()) : -1;
  rep.add(vcase("negative/attractor-size", c.dc, actual == space - i_sum,
                "attractor size " + std::to_string(actual),
                "2^(n+m-1) - |I| = " + std::to_string(space - i_sum)));
  if (i_sum != i_diff) {
    const std::int64_t brute_i = space - actual;
    std::string which = brute_i == i_sum      ? "sum form"
                        : brute_i == i_diff   ? "difference form"
                                              : "neither form";
    rep.add(vcase("negative/size-formula-sign", c.dc, brute_i == i_sum,
                  "brute-force |I| = " + std::to_string(brute_i) + ", matches " + which,
                  "sum form " + std::to_string(i_sum) + " (difference form " +
                      std::to_string(i_diff) + ")"));
  }

  const std::set<Config> family = irreversible_family(c.dc);
  const std::vector<Config> tr = transient(c.an);
  const std::set<Config> tr_set(tr.begin(), tr.end());
  rep.add(vcase("negative/transient-family", c.dc, tr_set == family,
                "transient " + std::to_string(tr_set.size()) + ", predicted " +
                    std::to_string(family.size()) +
                    (tr_set == family ? ", identical" : ", mismatch"),
                "transient set equals the irreversible pattern families"));

  int irr_fails = 0;
  for (Config x : family) {
    if (!irreversibility_check(c.g, c.an, x)) ++irr_fails;
  }
  rep.add(vcase("negative/irreversibility", c.dc, irr_fails == 0,
                std::to_string(family.size()) + " members, " +
                    std::to_string(irr_fails) + " failures",
                "every family member is transient and unreachable"));

  const int simp_bound = 2 * n + m - 2;
  if (n >= 2 && m >= 2) {
    int fails = 0;
    std::size_t max_eff = 0;
    const std::vector<Config> starts = start_set(c.dc, lim);
    for (Config x : starts) {
      const seq::Trace t = seq::simp(c.dc, x);
      max_eff = std::max(max_eff, t.effective());
      if (t.final_config != 0 || static_cast<int>(t.effective()) > simp_bound) ++fails;
    }
    rep.add(vcase("negative/simp-all-starts", c.dc, fails == 0,
                  std::to_string(starts.size()) + " starts, max effective " +
                      std::to_string(max_eff) + ", " + std::to_string(fails) +
                      " failures",
                  "lands on " + format_config(c.dc, 0) + " within " +
                      std::to_string(simp_bound)));
  }

  if (n >= 2 && m >= 2 && n % 2 == 0 && m % 2 == 0) {
    const Config comp1_t = cfg(c.dc, repeat_word("10", n / 2), repeat_word("1", m));
    const Config alt = cfg(c.dc, repeat_word("10", n / 2), repeat_word("10", m / 2));
    const int b1 = (n - 1) * (n + m - 2);
    const int b2 = (m - 2) * (n + m - 2) + (2 * m - 1);
    const int b3 = (n + m) * (n + m) - 5 * (n - 1) - 3 * m;

    const seq::Trace t1 = seq::comp1(c.dc, 0);
    rep.add(vcase("negative/comp1-landing", c.dc,
                  t1.final_config == comp1_t && t1.certified &&
                      static_cast<int>(t1.effective()) <= b1 &&
                      c.an.recurrent_mask[comp1_t],
                  "landed " + format_config(c.dc, t1.final_config) + ", effective " +
                      std::to_string(t1.effective()),
                  format_config(c.dc, comp1_t) + " within " + std::to_string(b1)));

    const seq::Trace t2 = seq::comp2(c.dc, comp1_t);
    rep.add(vcase("negative/comp2-landing", c.dc,
                  t2.final_config == alt && t2.certified &&
                      static_cast<int>(t2.effective()) <= b2 &&
                      c.an.recurrent_mask[alt],
                  "landed " + format_config(c.dc, t2.final_config) + ", effective " +
                      std::to_string(t2.effective()),
                  format_config(c.dc, alt) + " within " + std::to_string(b2)));

    const seq::Trace t3 = seq::comp(c.dc, 0);
    rep.add(vcase("negative/comp-landing", c.dc,
                  t3.final_config == alt && t3.certified &&
                      static_cast<int>(t3.effective()) <= b3,
                  "landed " + format_config(c.dc, t3.final_config) + ", effective " +
                      std::to_string(t3.effective()),
                  format_config(c.dc, alt) + " within (n+m)^2-5(n-1)-3m = " +
                      std::to_string(b3)));

    // every configuration is reachable from the alternating form by copy_p
    const int stated = 3 * (n + m - 4) - 1;
    std::vector<Config> targets;
    if (bits <= lim.exhaustive_bits) {
      for (Config t = 0; t <= c.dc.state_mask(); ++t) targets.push_back(t);
    } else {
      targets = start_set(c.dc, lim);
    }
    int land_fails = 0;
    std::size_t max_eff = 0;
    for (Config t : targets) {
      const seq::Trace tt = seq::copy_p(c.dc, alt, t);
      max_eff = std::max(max_eff, tt.effective());
      if (tt.final_config != t) ++land_fails;
    }
    rep.add(vcase("negative/copy-p-lands-all-targets", c.dc, land_fails == 0,
                  std::to_string(targets.size()) + " targets, " +
                      std::to_string(land_fails) + " failures",
                  "copy_p reaches every configuration"));
    rep.add(vcase("negative/copy-p-update-bound", c.dc,
                  static_cast<int>(max_eff) <= stated,
                  "max effective " + std::to_string(max_eff),
                  "<= 3(n+m-4)-1 = " + std::to_string(stated)));
  }

  if (n >= 2 && m >= 2 && n % 2 == 0 && m % 2 == 0) {
    const Config e1 = most_expressive_form(c.dc, true);
    const seq::Trace tb1 = seq::comp_bit(c.dc, 0, true);
    rep.add(vcase("negative/comp-bit-landing", c.dc,
                  tb1.final_config == e1 && tb1.certified && c.an.recurrent_mask[e1],
                  "bit 1 landed " + format_config(c.dc, tb1.final_config),
                  format_config(c.dc, e1) + ", recurrent"));
  }

  if (n % 2 == 1 && n > 1 && m >= 2 && m % 2 == 0) {
    const Config x0 = cfg(c.dc, repeat_word("01", (n - 1) / 2, "0"),
                          repeat_word("01", m / 2));
    const Config x1 = cfg(c.dc, repeat_word("10", (n - 1) / 2, "0"),
                          repeat_word("10", m / 2));
    const seq::Trace fwd = seq::sigma_a(c.dc, x0);
    const seq::Trace bwd = seq::sigma_a_inv(c.dc, x1);
    rep.add(vcase("negative/sigma-a-round-trip", c.dc,
                  fwd.final_config == x1 && fwd.certified &&
                      bwd.final_config == x0 && bwd.certified &&
                      c.an.recurrent_mask[x0] && c.an.recurrent_mask[x1],
                  "forward landed " + format_config(c.dc, fwd.final_config) +
                      ", inverse landed " + format_config(c.dc, bwd.final_config),
                  format_config(c.dc, x1) + " and back to " + format_config(c.dc, x0)));
  }

  if (n % 2 == 1 && n > 1 && m % 2 == 1 && m > 1) {
    const Config x0 = cfg(c.dc, repeat_word("01", (n - 1) / 2, "1"),
                          repeat_word("01", (m - 1) / 2, "0"));
    const Config x1 = cfg(c.dc, repeat_word("10", (n - 1) / 2, "0"),
                          repeat_word("10", (m - 1) / 2, "0"));
    const seq::Trace fwd = seq::sigma_b(c.dc, x0);
    const seq::Trace bwd = seq::sigma_b_inv(c.dc, x1);
    rep.add(vcase("negative/sigma-b-round-trip", c.dc,
                  fwd.final_config == x1 && fwd.certified &&
                      bwd.final_config == x0 && bwd.certified &&
                      c.an.recurrent_mask[x0] && c.an.recurrent_mask[x1],
                  "forward landed " + format_config(c.dc, fwd.final_config) +
                      ", inverse landed " + format_config(c.dc, bwd.final_config),
                  format_config(c.dc, x1) + " and back to " + format_config(c.dc, x0)));
  }
  return rep;
}

template <class CaseFn>
VerificationReport run_cases(const std::vector<std::pair<int, int>>& sizes,
                             const VerifyLimits& lim, CaseFn&& fn) {
  std::vector<VerificationReport> slots(sizes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(sizes.size()); ++i) {
    slots[i] = fn(sizes[i].first, sizes[i].second, lim);
  }
  VerificationReport rep;
  for (VerificationReport& s : slots) rep.merge(std::move(s));
  return rep;
}

}  // namespace

VerificationReport verify_positive(const std::vector<std::pair<int, int>>& sizes,
                                   const VerifyLimits& lim) {
  return run_cases(sizes, lim, positive_case);
}

VerificationReport verify_mixed(const std::vector<std::pair<int, int>>& sizes,
                                const VerifyLimits& lim) {
  return run_cases(sizes, lim, mixed_case);
}

VerificationReport verify_negative(const std::vector<std::pair<int, int>>& sizes,
                                   const VerifyLimits& lim) {
  return run_cases(sizes, lim, negative_case);
}

VerificationReport verify_quadratic(const std::vector<int>& sizes) {
  VerificationReport rep;
  std::vector<std::pair<int, std::uint32_t>> growth;  // (n+m, hardest distance)
  for (int n : sizes) {
    if (n < 2 || n % 2 != 0) throw Error("quadratic sizes must be even and >= 2");
    Ctx c = make_ctx(Kind::Negative, n, n);
    const Config alt10 = cfg(c.dc, repeat_word("10", n / 2), repeat_word("10", n / 2));
    const Config alt01 = cfg(c.dc, repeat_word("01", n / 2), repeat_word("01", n / 2));
    const auto d10 = distance(c.g, 0, alt10);
    const auto d01 = distance(c.g, 0, alt01);
    if (!d10 || !d01) throw Error("alternating configuration unreachable");
    const std::uint32_t hard = std::max(*d10, *d01);
    const int bound = n * (n + 2) / 4;
    growth.emplace_back(2 * n, hard);
    rep.add(vcase("quadratic/lower-bound", c.dc,
                  static_cast<int>(hard) >= bound,
                  "distance to " + format_config(c.dc, alt10) + " = " +
                      std::to_string(*d10) + ", to " + format_config(c.dc, alt01) +
                      " = " + std::to_string(*d01),
                  "hardest alternating form >= n(n+2)/4 = " + std::to_string(bound)));
  }
  if (growth.size() >= 2) {
    bool super = true;
    std::ostringstream os;
    for (std::size_t i = 1; i < growth.size(); ++i) {
      const auto [s1, d1] = growth[i - 1];
      const auto [s2, d2] = growth[i];
      // D2/D1 > s2/s1, compared exactly
      if (static_cast<std::int64_t>(d2) * s1 <= static_cast<std::int64_t>(d1) * s2) {
        super = false;
      }
      os << (i > 1 ? ", " : "") << "D(" << s2 / 2 << ")/D(" << s1 / 2 << ") = "
         << d2 << "/" << d1;
    }
    VerificationCase c;
    c.id = "quadratic/superlinear-growth";
    c.kind = "negative";
    c.measured = os.str();
    c.expected = "distance ratios exceed the size ratios";
    c.pass = super;
    rep.add(c);
  }
  return rep;
}

VerificationReport verify_copy_exhaustive(int n, int m) {
  VerificationReport rep;
  Ctx c = make_ctx(Kind::Negative, n, m);
  const int stated = 2 * (n + m - 6);

  std::int64_t pairs = 0;
  int land_fails = 0;
  int precondition_disagreements = 0;
  std::size_t max_eff = 0;
  for (Config x = 0; x <= c.dc.state_mask(); ++x) {
    for (Config t = 0; t <= c.dc.state_mask(); ++t) {
      if (!copy_admissible(c.dc, x, t)) continue;
      ++pairs;
      try {
        const seq::Trace tr = seq::copy(c.dc, x, t);
        max_eff = std::max(max_eff, tr.effective());
        if (tr.final_config != t) ++land_fails;
      } catch (const seq::MacroPreconditionError&) {
        ++precondition_disagreements;
      }
    }
  }
  rep.add(vcase("copy/all-valid-pairs-land", c.dc,
                land_fails == 0 && precondition_disagreements == 0,
                std::to_string(pairs) + " admissible pairs, " +
                    std::to_string(land_fails) + " landing failures, " +
                    std::to_string(precondition_disagreements) +
                    " precondition disagreements",
                "every admissible pair lands on its target"));
  rep.add(vcase("copy/update-bound", c.dc, static_cast<int>(max_eff) <= stated,
                "max effective " + std::to_string(max_eff) +
                    " (double-switch walk worst case is 2(n+m-4) = " +
                    std::to_string(2 * (n + m - 4)) + ")",
                "<= 2(n+m-6) = " + std::to_string(stated)));
  return rep;
}

VerificationReport verify_canonicalization(int n, int m, int samples,
                                           std::uint64_t seed) {
  VerificationReport rep;
  std::mt19937_64 rng(seed);
  int mismatches = 0;
  int kind_errors = 0;
  for (int s = 0; s < samples; ++s) {
    CycleSigns signs;
    signs.left.resize(n);
    signs.right.resize(m);
    for (int& v : signs.left) v = (rng() & 1) ? 1 : -1;
    for (int& v : signs.right) v = (rng() & 1) ? 1 : -1;

    const NetworkSpec original = network_from_signs(signs);
    const CanonicalForm canon = canonicalize(signs);
    if (canon.canonical.kind != classify(signs) || canon.relabel.flips(0)) {
      ++kind_errors;
      continue;
    }
    const TransitionGraph g1 = build_graph(original);
    const TransitionGraph g2 = build_graph(canon.canonical.net);

    using Edge = std::tuple<Config, Config, int>;
    std::vector<Edge> relabeled;
    std::vector<Edge> target;
    for (Config x = 0; x < g1.state_count; ++x) {
      for (std::uint32_t e = g1.offsets[x]; e < g1.offsets[x + 1]; ++e) {
        relabeled.emplace_back(canon.relabel.apply(x),
                               canon.relabel.apply(g1.targets[e]), g1.updated[e]);
      }
      for (std::uint32_t e = g2.offsets[x]; e < g2.offsets[x + 1]; ++e) {
        target.emplace_back(x, g2.targets[e], g2.updated[e]);
      }
    }
    std::sort(relabeled.begin(), relabeled.end());
    std::sort(target.begin(), target.end());
    if (relabeled != target) ++mismatches;
  }
  VerificationCase c;
  c.id = "canonicalization/relabel-isomorphism";
  c.n = n;
  c.m = m;
  c.kind = "-";
  c.measured = std::to_string(samples) + " sign assignments, " +
               std::to_string(mismatches) + " edge-set mismatches, " +
               std::to_string(kind_errors) + " kind/gauge errors";
  c.expected = "relabeled edge set equals the canonical edge set";
  c.pass = mismatches == 0 && kind_errors == 0;
  rep.add(c);
  return rep;
}

namespace {

NetworkSpec random_network(std::mt19937_64& rng, int max_n) {
  std::uniform_int_distribution<int> size_dist(1, max_n);
  const int count = size_dist(rng);
  NetworkSpec net;
  net.count = count;
  net.functions.resize(count);
  const bool dag = rng() % 4 == 0;
  for (int i = 0; i < count; ++i) {
    auto src = [&] {
      if (!dag) return static_cast<int>(rng() % count);
      return i == 0 ? 0 : static_cast<int>(rng() % i);
    };
    if (dag && i == 0) {
      // constant: a source conjoined with its own negation
      net.functions[0] = LocalFunction::and_gate(0, false, 0, true);
      continue;
    }
    switch (rng() % 10) {
      case 0: case 1: case 2: case 3:
        net.functions[i] = LocalFunction::identity(src());
        break;
      case 4: case 5: case 6:
        net.functions[i] = LocalFunction::negation(src());
        break;
      default:
        net.functions[i] =
            LocalFunction::and_gate(src(), rng() & 1, src(), rng() & 1);
        break;
    }
  }
  return net;
}

}  // namespace

VerificationReport verify_cycle_theorems(int samples, int max_n, std::uint64_t seed) {
  if (max_n > 10) throw Error("cycle-theorem sampling is capped at 10 automata");
  std::mt19937_64 rng(seed);
  int acyclic_hits = 0, bistable_hits = 0, oscillation_hits = 0;
  int v_acyclic = 0, v_positive = 0, v_negative = 0;

  for (int s = 0; s < samples; ++s) {
    const NetworkSpec net = random_network(rng, max_n);
    const std::vector<SignedArc> arcs = interaction_graph(net);
    const AttractorAnalysis an = analyze(build_graph(net));

    int stable = 0, oscillations = 0;
    for (const Attractor& a : an.attractors) {
      (a.size() == 1 ? stable : oscillations) += 1;
    }
    const bool has_pos = positive_cycle_exists(arcs);
    const bool has_neg = negative_cycle_exists(arcs);

    if (!has_pos && !has_neg) {  // no cycle at all
      ++acyclic_hits;
      if (!(an.attractors.size() == 1 && stable == 1)) ++v_acyclic;
    }
    if (stable >= 2) {
      ++bistable_hits;
      if (!has_pos) ++v_positive;
    }
    if (oscillations >= 1) {
      ++oscillation_hits;
      if (!has_neg) ++v_negative;
    }
  }

  VerificationReport rep;
  auto add = [&](const char* id, int hits, int violations, const char* expected) {
    VerificationCase c;
    c.id = id;
    c.kind = "-";
    c.measured = "antecedent in " + std::to_string(hits) + " of " +
                 std::to_string(samples) + " networks, " +
                 std::to_string(violations) + " violations";
    c.expected = expected;
    c.pass = violations == 0;
    rep.add(c);
  };
  add("cycle-theorems/acyclic-unique-stable", acyclic_hits, v_acyclic,
      "acyclic networks have exactly one attractor, a stable configuration");
  add("cycle-theorems/bistable-positive-cycle", bistable_hits, v_positive,
      "two stable configurations imply a positive cycle");
  add("cycle-theorems/oscillation-negative-cycle", oscillation_hits, v_negative,
      "a stable oscillation implies a negative cycle");
  return rep;
}

VerificationReport verify_all(const VerifyAllOptions& opt) {
  VerificationReport rep;
  rep.merge(verify_positive(size_pairs(2, 2, opt.max_bits), opt.limits));
  rep.merge(verify_mixed(size_pairs(2, 2, opt.max_bits), opt.limits));
  rep.merge(verify_negative(size_pairs(1, 1, opt.max_bits), opt.limits));
  rep.merge(verify_quadratic(opt.quadratic_sizes));
  rep.merge(verify_copy_exhaustive(4, 4));
  rep.merge(verify_canonicalization(3, 3, opt.canonicalization_samples,
                                    opt.limits.seed));
  rep.merge(verify_cycle_theorems(opt.theorem_samples, opt.theorem_max_n,
                                  opt.limits.seed));
  return rep;
}

void write_report_text(std::ostream& os, const VerificationReport& report) {
  for (const VerificationCase& c : report.cases) {
    os << (c.pass ? "PASS " : "FAIL ") << c.id;
    if (c.n > 0) os << " (n=" << c.n << ", m=" << c.m << ", " << c.kind << ")";
    os << "\n      measured: " << c.measured << "\n      expected: " << c.expected
       << "\n";
  }
  os << report.passed() << " passed, " << report.failed() << " failed\n";
}

namespace detail {

VerificationCase convergence_bound_case(Kind kind, int n, int m, int bound) {
  Ctx c = make_ctx(kind, n, m);
  const ConvergenceReport conv = convergence(c.g, c.an);
  return vcase("detail/convergence-bound", c.dc,
               static_cast<int>(conv.network_time) <= bound,
               "network convergence time " + std::to_string(conv.network_time),
               "<= " + std::to_string(bound));
}

}  // namespace detail

}  // namespace badc
