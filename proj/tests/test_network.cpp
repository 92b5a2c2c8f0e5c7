#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "badc/double_cycle.hpp"
#include "badc/network.hpp"
#include "oracle.hpp"

using namespace badc;

namespace {

int popcount_diff(Config a, Config b) { return __builtin_popcount(a ^ b); }

}  // namespace

TEST_CASE("eval_local") {
  const DoubleCycle neg = build_canonical(Kind::Negative, 2, 2);
  CHECK(eval_local(neg.net, parse_config(neg, "(00,00)"), 0));

  NetworkSpec net;
  net.count = 2;
  net.functions = {LocalFunction::identity(1), LocalFunction::identity(0)};
  CHECK(eval_local(net, 0b10, 0));
  CHECK_FALSE(eval_local(net, 0b01, 0));

  const DoubleCycle pos = build_canonical(Kind::Positive, 2, 1);
  CHECK(eval_local(pos.net, parse_config(pos, "(11,1)"), 1));

  CHECK_THROWS_AS((void)eval_local(net, 0, 5), std::out_of_range);
}

TEST_CASE("async_step") {
  for (Kind k : {Kind::Positive}) {
    const DoubleCycle dc = build_canonical(k, 3, 2);
    for (int i = 0; i < dc.size(); ++i) CHECK(async_step(dc.net, 0, i) == 0);
  }

  const DoubleCycle neg = build_canonical(Kind::Negative, 2, 2);
  CHECK(async_step(neg.net, parse_config(neg, "(00,00)"), 0) ==
        parse_config(neg, "(10,10)"));

  const DoubleCycle pos = build_canonical(Kind::Positive, 4, 2);
  CHECK(async_step(pos.net, parse_config(pos, "(1000,10)"), 1) ==
        parse_config(pos, "(1100,10)"));
}

TEST_CASE("async_step moves at most one bit and is idempotent off self-loops") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const NetworkSpec net = oracle::random_network(rng, 6);
    const Config states = Config{1} << net.count;
    for (int probe = 0; probe < 20; ++probe) {
      const Config x = static_cast<Config>(rng() % states);
      const int i = static_cast<int>(rng() % net.count);
      CHECK(popcount_diff(x, async_step(net, x, i)) <= 1);
    }
  }
  // hub included: no canonical function with n,m >= 2 reads its own automaton
  for (Kind k : {Kind::Positive, Kind::Mixed, Kind::Negative}) {
    const DoubleCycle dc = build_canonical(k, 3, 2);
    for (Config x = 0; x <= dc.state_mask(); ++x) {
      for (int i = 0; i < dc.size(); ++i) {
        const Config once = async_step(dc.net, x, i);
        CHECK(async_step(dc.net, once, i) == once);
      }
    }
  }
}

TEST_CASE("interaction_sign") {
  const DoubleCycle pos = build_canonical(Kind::Positive, 2, 2);
  // hub = AND(left, right); the left input acts only while the right is 1
  CHECK(interaction_sign(pos.net, 0b110, 1, 0) == 1);
  CHECK(interaction_sign(pos.net, 0b010, 1, 0) == 0);

  NetworkSpec loop;
  loop.count = 2;
  loop.functions = {LocalFunction::negation(1), LocalFunction::negation(0)};
  for (Config x = 0; x < 4; ++x) {
    CHECK(interaction_sign(loop, x, 1, 0) == -1);
    CHECK(interaction_sign(loop, x, 0, 1) == -1);
  }
}

TEST_CASE("interaction_graph on canonical forms") {
  const DoubleCycle pos = build_canonical(Kind::Positive, 2, 2);
  CHECK(interaction_graph(pos.net) ==
        std::vector<SignedArc>{{0, 1, 1}, {0, 2, 1}, {1, 0, 1}, {2, 0, 1}});

  const DoubleCycle neg = build_canonical(Kind::Negative, 2, 2);
  CHECK(interaction_graph(neg.net) ==
        std::vector<SignedArc>{{0, 1, 1}, {0, 2, 1}, {1, 0, -1}, {2, 0, -1}});

  NetworkSpec self;
  self.count = 1;
  self.functions = {LocalFunction::identity(0)};
  CHECK(interaction_graph(self) == std::vector<SignedArc>{{0, 0, 1}});
}

TEST_CASE("interaction_graph agrees with per-configuration signs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const NetworkSpec net = oracle::random_network(rng, 5);
    const std::vector<SignedArc> arcs = interaction_graph(net);
    const Config states = Config{1} << net.count;
    // stored arcs never contradict the pointwise sign, and every pair that is
    // missing has sign zero everywhere
    for (int j = 0; j < net.count; ++j) {
      for (int i = 0; i < net.count; ++i) {
        const SignedArc* found = nullptr;
        for (const SignedArc& a : arcs) {
          if (a.from == j && a.to == i) found = &a;
        }
        bool nonzero_seen = false;
        for (Config x = 0; x < states; ++x) {
          const int s = interaction_sign(net, x, j, i);
          if (s != 0) {
            nonzero_seen = true;
            REQUIRE(found != nullptr);
            CHECK(s == found->sign);
          }
        }
        if (found) CHECK(nonzero_seen);
      }
    }
  }
}

TEST_CASE("stored arc signs hold for every configuration at N = 12") {
  const DoubleCycle dc = build_canonical(Kind::Negative, 7, 6);
  REQUIRE(dc.size() == 12);
  const std::vector<SignedArc> arcs = interaction_graph(dc.net);
  const Config states = Config{1} << dc.size();
  for (const SignedArc& a : arcs) {
    for (Config x = 0; x < states; ++x) {
      const int s = interaction_sign(dc.net, x, a.from, a.to);
      CHECK((s == 0 || s == a.sign));
    }
  }
}

TEST_CASE("interaction_graph enforces the enumeration cap") {
  NetworkSpec big;
  big.count = 5;
  big.functions.assign(5, LocalFunction::identity(0));
  CHECK_THROWS_AS((void)interaction_graph(big, 3), CapExceeded);
}

TEST_CASE("cycle sign detection") {
  const DoubleCycle pos = build_canonical(Kind::Positive, 2, 2);
  CHECK(positive_cycle_exists(interaction_graph(pos.net)));
  CHECK_FALSE(negative_cycle_exists(interaction_graph(pos.net)));

  const DoubleCycle mixed = build_canonical(Kind::Mixed, 2, 2);
  CHECK(positive_cycle_exists(interaction_graph(mixed.net)));
  CHECK(negative_cycle_exists(interaction_graph(mixed.net)));

  const std::vector<SignedArc> chain{{0, 1, 1}, {1, 2, 1}};
  CHECK_FALSE(positive_cycle_exists(chain));
  CHECK_FALSE(negative_cycle_exists(chain));

  const std::vector<SignedArc> self_neg{{0, 0, -1}};
  CHECK_FALSE(positive_cycle_exists(self_neg));
  CHECK(negative_cycle_exists(self_neg));
}

TEST_CASE("validation errors") {
  NetworkSpec bad;
  bad.count = 2;
  bad.functions = {LocalFunction::identity(3), LocalFunction::identity(0)};
  CHECK_THROWS_AS(bad.validate(), Error);
  NetworkSpec empty;
  CHECK_THROWS_AS(empty.validate(), Error);
}
