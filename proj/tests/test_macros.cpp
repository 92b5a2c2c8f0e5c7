#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "badc/dynamics.hpp"
#include "badc/seqdsl.hpp"
#include "badc/verify.hpp"

using namespace badc;

namespace {

Config cfg(const DoubleCycle& dc, const std::string& wl, const std::string& wr) {
  return parse_config(dc, "(" + wl + "," + wr + ")");
}

}  // namespace

TEST_CASE("copy transforms expressive starts into their targets") {
  const DoubleCycle dc = build_canonical(Kind::Negative, 4, 4);
  const Config x = cfg(dc, "0101", "0101");
  const Config target = cfg(dc, "0110", "0011");
  const seq::Trace t = seq::copy(dc, x, target);
  CHECK(t.final_config == target);
  CHECK(t.effective() == 4);
  CHECK(t.certified);

  // nothing differs: zero effective updates
  const seq::Trace idle = seq::copy(dc, x, x);
  CHECK(idle.final_config == x);
  CHECK(idle.effective() == 0);
}

TEST_CASE("copy_p flips the hub before copying") {
  const DoubleCycle dc = build_canonical(Kind::Negative, 4, 4);
  const Config x = cfg(dc, "1010", "1010");
  const seq::Trace t = seq::copy_p(dc, x, 0);
  CHECK(t.final_config == 0);
  CHECK(t.effective() == 11);

  const seq::Trace same_hub = seq::copy_p(dc, x, cfg(dc, "1100", "1010"));
  CHECK(same_hub.final_config == cfg(dc, "1100", "1010"));
}

TEST_CASE("copy preconditions") {
  const DoubleCycle dc = build_canonical(Kind::Negative, 4, 4);
  CHECK_THROWS_AS((void)seq::copy(dc, cfg(dc, "0101", "0101"), cfg(dc, "1010", "1010")),
                  seq::MacroPreconditionError);  // hub differs
  CHECK_THROWS_AS((void)seq::copy(dc, cfg(dc, "0011", "0101"), 0),
                  seq::MacroPreconditionError);  // left cycle not expressive enough
  CHECK_THROWS_AS((void)seq::copy_p(dc, cfg(dc, "0011", "0101"), 0),
                  seq::MacroPreconditionError);
  // boundary must change but no interior anchor exists
  CHECK_THROWS_AS((void)seq::copy_c(dc, cfg(dc, "0100", "0101"),
                                    cfg(dc, "0101", "0101"), Cycle::Left),
                  seq::MacroPreconditionError);
}

TEST_CASE("fix1") {
  const DoubleCycle dc = build_canonical(Kind::Positive, 3, 3);
  const seq::Trace t = seq::fix1(dc, cfg(dc, "011", "010"));
  CHECK(t.final_config == dc.state_mask());
  CHECK(t.certified);
  CHECK_THROWS_AS((void)seq::fix1(dc, cfg(dc, "000", "011")),
                  seq::MacroPreconditionError);  // no 1 in the left cycle
}

TEST_CASE("fix0") {
  const DoubleCycle dc = build_canonical(Kind::Positive, 3, 3);
  const seq::Trace idle = seq::fix0(dc, 0);
  CHECK(idle.final_config == 0);
  CHECK(idle.effective() == 0);

  const seq::Trace t = seq::fix0(dc, cfg(dc, "110", "101"));
  CHECK(t.final_config == 0);
  CHECK(t.effective() == 3);
  CHECK(t.effective() <= 2 * 3 + 3 - 3);

  // zero only in the right cycle: the mirrored variant runs and says so
  const DoubleCycle wide = build_canonical(Kind::Positive, 2, 3);
  const seq::Trace m = seq::fix0(wide, cfg(wide, "11", "100"));
  CHECK(m.final_config == 0);
  CHECK(static_cast<int>(m.effective()) <= 2 + 2 * 3 - 3);
  REQUIRE_FALSE(m.notes.empty());
  CHECK(m.notes[0].find("mirrored") != std::string::npos);

  CHECK_THROWS_AS((void)seq::fix0(dc, dc.state_mask()), seq::MacroPreconditionError);
  const DoubleCycle neg = build_canonical(Kind::Negative, 3, 3);
  CHECK_THROWS_AS((void)seq::fix0(neg, 0), seq::MacroPreconditionError);
}

TEST_CASE("simp") {
  const DoubleCycle mix = build_canonical(Kind::Mixed, 3, 3);
  for (Config x = 0; x <= mix.state_mask(); ++x) {
    const seq::Trace t = seq::simp(mix, x);
    CHECK(t.final_config == 0);
    CHECK(static_cast<int>(t.effective()) <= 2 * 3 + 3 - 2);
  }

  const DoubleCycle neg = build_canonical(Kind::Negative, 2, 2);
  const seq::Trace t = seq::simp(neg, cfg(neg, "11", "10"));
  CHECK(t.final_config == 0);
  CHECK(t.attempted() == 4);
  CHECK(t.effective() == 2);

  CHECK(seq::simp(neg, 0).effective() == 0);
  const DoubleCycle pos = build_canonical(Kind::Positive, 2, 2);
  CHECK_THROWS_AS((void)seq::simp(pos, 0), seq::MacroPreconditionError);
}

TEST_CASE("comp1 and comp2 land on the alternating staircase") {
  const DoubleCycle dc = build_canonical(Kind::Negative, 4, 2);
  const seq::Trace t1 = seq::comp1(dc, 0);
  CHECK(t1.final_config == cfg(dc, "1010", "11"));
  CHECK(t1.certified);
  CHECK(static_cast<int>(t1.effective()) <= (4 - 1) * (4 + 2 - 2));

  const seq::Trace t2 = seq::comp2(dc, cfg(dc, "1010", "11"));
  CHECK(t2.final_config == cfg(dc, "1010", "10"));
  CHECK(t2.certified);
  CHECK(static_cast<int>(t2.effective()) <= (2 - 2) * (4 + 2 - 2) + (2 * 2 - 1));
}

TEST_CASE("comp") {
  const DoubleCycle small = build_canonical(Kind::Negative, 2, 2);
  const seq::Trace t = seq::comp(small, 0);
  CHECK(t.final_config == cfg(small, "10", "10"));
  CHECK(t.effective() == 5);
  CHECK(t.certified);

  // odd sizes execute but stay uncertified
  const DoubleCycle odd = build_canonical(Kind::Negative, 3, 2);
  const seq::Trace u = seq::comp(odd, 0);
  CHECK_FALSE(u.certified);
  REQUIRE_FALSE(u.notes.empty());
  CHECK(u.notes[0].find("uncertified") != std::string::npos);

  const DoubleCycle pos = build_canonical(Kind::Positive, 2, 2);
  CHECK_THROWS_AS((void)seq::comp(pos, 0), seq::MacroPreconditionError);
}

TEST_CASE("comp_bit") {
  const DoubleCycle even = build_canonical(Kind::Negative, 4, 2);
  const seq::Trace b1 = seq::comp_bit(even, 0, true);
  CHECK(b1.final_config == cfg(even, "1010", "10"));
  CHECK(b1.certified);
  const seq::Trace b0 = seq::comp_bit(even, 0, false);
  CHECK_FALSE(b0.certified);  // hub bit 0 unreachable from the even/even landing

  const DoubleCycle both_odd = build_canonical(Kind::Negative, 3, 3);
  const seq::Trace odd1 = seq::comp_bit(both_odd, 0, true);
  CHECK(odd1.final_config == cfg(both_odd, "100", "100"));
  const DoubleCycle right_odd = build_canonical(Kind::Negative, 2, 3);
  const seq::Trace mirror = seq::comp_bit(right_odd, 0, true);
  CHECK(mirror.final_config == cfg(right_odd, "10", "100"));
}

TEST_CASE("sigma sequences replay the proof forms") {
  const DoubleCycle a = build_canonical(Kind::Negative, 3, 2);
  const Config x0a = cfg(a, "010", "01");
  const Config x1a = cfg(a, "100", "10");
  const seq::Trace fwd = seq::sigma_a(a, x0a);
  CHECK(fwd.final_config == x1a);
  CHECK(fwd.certified);
  const seq::Trace bwd = seq::sigma_a_inv(a, x1a);
  CHECK(bwd.final_config == x0a);
  CHECK(bwd.certified);

  const DoubleCycle b = build_canonical(Kind::Negative, 3, 3);
  const Config x0b = cfg(b, "011", "010");
  const Config x1b = cfg(b, "100", "100");
  CHECK(seq::sigma_b(b, x0b).final_config == x1b);
  CHECK(seq::sigma_b_inv(b, x1b).final_config == x0b);

  // round trips
  seq::Program round = seq::parse("sigma_a; sigma_a_inv");
  CHECK(seq::exec(a, x0a, round).final_config == x0a);
  seq::Program round_b = seq::parse("sigma_b; sigma_b_inv");
  CHECK(seq::exec(b, x0b, round_b).final_config == x0b);

  // wrong form still executes, flagged uncertified
  const seq::Trace off = seq::sigma_a(a, 0);
  CHECK_FALSE(off.certified);
}

TEST_CASE("copy over every admissible pair lands on its target") {
  const VerificationReport rep = verify_copy_exhaustive(4, 4);
  REQUIRE(rep.cases.size() == 2);
  CHECK(rep.cases[0].id == "copy/all-valid-pairs-land");
  CHECK(rep.cases[0].pass);
  // the double-switch walk reaches 2(n+m-4) effective updates, which exceeds
  // the stated 2(n+m-6); the landing claim itself holds everywhere
  CHECK(rep.cases[1].measured.find("max effective 8") != std::string::npos);
}

TEST_CASE("copy exhaustive at n=m=6 stays within the walk bound" *
          doctest::timeout(120)) {
  const VerificationReport rep = verify_copy_exhaustive(6, 6);
  CHECK(rep.cases[0].pass);
  CHECK(rep.cases[1].measured.find("max effective 16") != std::string::npos);
}

TEST_CASE("macros expand lazily against the live configuration") {
  // fix1 picks its propagation anchors after earlier updates have run
  const DoubleCycle dc = build_canonical(Kind::Positive, 4, 4);
  for (Config x = 0; x <= dc.state_mask(); ++x) {
    const bool valid_fix1 =
        config_bit(x, 0) || ((cycle_word(dc, x, Cycle::Left).bits >> 1) != 0 &&
                             (cycle_word(dc, x, Cycle::Right).bits >> 1) != 0);
    if (!valid_fix1) continue;
    CHECK(seq::fix1(dc, x).final_config == dc.state_mask());
  }
}
