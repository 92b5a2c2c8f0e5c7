#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>
#include <sstream>

#include "badc/double_cycle.hpp"
#include "badc/dynamics.hpp"
#include "oracle.hpp"

using namespace badc;

TEST_CASE("build_graph basics") {
  const DoubleCycle pos = build_canonical(Kind::Positive, 2, 2);
  const TransitionGraph g = build_graph(pos.net);
  CHECK(g.state_count == 8);
  CHECK(g.out_degree(parse_config(pos, "(00,00)")) == 0);
  CHECK(g.out_degree(parse_config(pos, "(11,11)")) == 0);

  NetworkSpec self;
  self.count = 1;
  self.functions = {LocalFunction::identity(0)};
  CHECK(build_graph(self).edge_count() == 0);

  const DoubleCycle neg = build_canonical(Kind::Negative, 2, 2);
  const TransitionGraph gn = build_graph(neg.net);
  for (Config x = 0; x < gn.state_count; ++x) CHECK(gn.out_degree(x) >= 1);

  NetworkSpec big;
  big.count = 6;
  big.functions.assign(6, LocalFunction::identity(0));
  CHECK_THROWS_AS((void)build_graph(big, 5), CapExceeded);
}

TEST_CASE("parallel build equals the serial reference") {
  std::mt19937_64 rng(3);
  for (Kind k : {Kind::Positive, Kind::Mixed, Kind::Negative}) {
    const DoubleCycle dc = build_canonical(k, 4, 3);
    CHECK(build_graph(dc.net) == build_graph_serial(dc.net));
  }
  for (int trial = 0; trial < 20; ++trial) {
    const NetworkSpec net = oracle::random_network(rng, 7);
    CHECK(build_graph(net) == build_graph_serial(net));
  }
}

TEST_CASE("stored edges are exactly the effective steps") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const NetworkSpec net = oracle::random_network(rng, 6);
    const TransitionGraph g = build_graph(net);
    std::size_t effective = 0;
    for (Config x = 0; x < g.state_count; ++x) {
      CHECK(g.out_degree(x) <= static_cast<std::uint32_t>(net.count));
      for (std::uint32_t e = g.offsets[x]; e < g.offsets[x + 1]; ++e) {
        CHECK(async_step(net, x, g.updated[e]) == g.targets[e]);
        CHECK(g.targets[e] != x);
      }
      for (int i = 0; i < net.count; ++i) {
        if (async_step(net, x, i) != x) ++effective;
      }
    }
    CHECK(effective == g.edge_count());
  }
}

TEST_CASE("attractors of canonical double-cycles") {
  for (int n = 2; n <= 5; ++n) {
    for (int m = 2; m <= 5; ++m) {
      const DoubleCycle pos = build_canonical(Kind::Positive, n, m);
      const auto apos = attractors(build_graph(pos.net));
      REQUIRE(apos.size() == 2);
      CHECK(apos[0].members == std::vector<Config>{0});
      CHECK(apos[1].members == std::vector<Config>{pos.state_mask()});

      const DoubleCycle mix = build_canonical(Kind::Mixed, n, m);
      const auto amix = attractors(build_graph(mix.net));
      REQUIRE(amix.size() == 1);
      CHECK(amix[0].members == std::vector<Config>{0});
    }
  }
  const DoubleCycle neg = build_canonical(Kind::Negative, 2, 2);
  const auto aneg = attractors(build_graph(neg.net));
  REQUIRE(aneg.size() == 1);
  CHECK(aneg[0].size() == 8);
  CHECK(aneg[0].kind() == AttractorKind::StableOscillation);
}

TEST_CASE("attractors agree with the brute reachability oracle") {
  std::mt19937_64 rng(17);
  auto check_net = [](const NetworkSpec& net) {
    const auto got = attractors(build_graph(net));
    const auto want = oracle::attractors(net);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(std::set<Config>(got[i].members.begin(), got[i].members.end()) ==
            want[i]);
    }
  };
  for (Kind k : {Kind::Positive, Kind::Mixed, Kind::Negative}) {
    check_net(build_canonical(k, 3, 2).net);
    check_net(build_canonical(k, 2, 3).net);
    check_net(build_canonical(k, 3, 3).net);
  }
  for (int trial = 0; trial < 25; ++trial) {
    check_net(oracle::random_network(rng, 5));
  }
}

TEST_CASE("recurrent and transient sets") {
  const DoubleCycle neg32 = build_canonical(Kind::Negative, 3, 2);
  const AttractorAnalysis an = analyze(build_graph(neg32.net));
  CHECK(transient(an) == std::vector<Config>{parse_config(neg32, "(101,10)"),
                                             parse_config(neg32, "(101,11)")});

  const DoubleCycle pos = build_canonical(Kind::Positive, 3, 3);
  const AttractorAnalysis anp = analyze(build_graph(pos.net));
  CHECK(recurrent(anp) == std::vector<Config>{0, pos.state_mask()});
  CHECK(transient(anp).size() == (1u << pos.size()) - 2);

  const DoubleCycle neg22 = build_canonical(Kind::Negative, 2, 2);
  CHECK(transient(analyze(build_graph(neg22.net))).empty());

  // the two sets partition the space
  for (int trial = 0; trial < 10; ++trial) {
    std::mt19937_64 rng(trial);
    const NetworkSpec net = oracle::random_network(rng, 6);
    const AttractorAnalysis a = analyze(build_graph(net));
    CHECK(recurrent(a).size() + transient(a).size() == (Config{1} << net.count));
  }
}

TEST_CASE("attractor members never escape") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const NetworkSpec net = oracle::random_network(rng, 6);
    const TransitionGraph g = build_graph(net);
    for (const Attractor& a : attractors(g)) {
      const std::set<Config> inside(a.members.begin(), a.members.end());
      for (Config x : a.members) {
        for (std::uint32_t e = g.offsets[x]; e < g.offsets[x + 1]; ++e) {
          CHECK(inside.count(g.targets[e]) == 1);
        }
      }
    }
  }
}

TEST_CASE("reachability and distances") {
  const DoubleCycle neg22 = build_canonical(Kind::Negative, 2, 2);
  const TransitionGraph g22 = build_graph(neg22.net);
  for (Config x = 0; x < g22.state_count; ++x) {
    CHECK(distance(g22, x, x) == 0);
    for (Config y = 0; y < g22.state_count; ++y) CHECK(reachable(g22, x, y));
  }

  const DoubleCycle neg32 = build_canonical(Kind::Negative, 3, 2);
  const TransitionGraph g32 = build_graph(neg32.net);
  const AttractorAnalysis an32 = analyze(build_graph(neg32.net));
  for (const char* text : {"(101,10)", "(101,11)"}) {
    const Config x = parse_config(neg32, text);
    for (Config y = 0; y < g32.state_count; ++y) {
      if (!an32.recurrent_mask[y]) continue;
      CHECK_FALSE(reachable(g32, y, x));
    }
  }
  // (101,10) has no predecessor at all
  CHECK(g32.out_degree(parse_config(neg32, "(101,10)")) > 0);
  for (Config y = 0; y < g32.state_count; ++y) {
    if (y == parse_config(neg32, "(101,10)")) continue;
    CHECK_FALSE(reachable(g32, y, parse_config(neg32, "(101,10)")));
  }
}

TEST_CASE("distance agrees with the map-based oracle") {
  std::mt19937_64 rng(29);
  auto check_net = [](const NetworkSpec& net) {
    const TransitionGraph g = build_graph(net);
    for (Config x = 0; x < g.state_count; ++x) {
      for (Config y = 0; y < g.state_count; ++y) {
        const auto got = distance(g, x, y);
        const auto want = oracle::bfs_distance(net, x, y);
        CHECK(got.has_value() == want.has_value());
        if (got && want) CHECK(*got == static_cast<std::uint32_t>(*want));
      }
    }
  };
  check_net(build_canonical(Kind::Negative, 3, 2).net);
  check_net(build_canonical(Kind::Mixed, 3, 2).net);
  check_net(build_canonical(Kind::Positive, 2, 3).net);
  for (int trial = 0; trial < 6; ++trial) {
    check_net(oracle::random_network(rng, 5));
  }
}

TEST_CASE("distance is a quasi-metric at desk scale") {
  const DoubleCycle dc = build_canonical(Kind::Negative, 3, 2);
  const TransitionGraph g = build_graph(dc.net);
  for (Config x = 0; x < g.state_count; ++x) {
    for (Config y = 0; y < g.state_count; ++y) {
      const auto dxy = distance(g, x, y);
      if (dxy) CHECK((*dxy == 0) == (x == y));
      for (Config z = 0; z < g.state_count; ++z) {
        const auto dxz = distance(g, x, z);
        const auto dzy = distance(g, z, y);
        if (dxz && dzy && dxy) CHECK(*dxy <= *dxz + *dzy);
      }
    }
  }
}

TEST_CASE("convergence") {
  const DoubleCycle pos = build_canonical(Kind::Positive, 2, 2);
  const TransitionGraph gp = build_graph(pos.net);
  const AttractorAnalysis ap = analyze(gp);
  const ConvergenceReport cp = convergence(gp, ap);
  CHECK(cp.network_time <= 3);  // 2(n+m)-5
  for (Config x = 0; x < gp.state_count; ++x) {
    CHECK((cp.per_config[x] == 0) == static_cast<bool>(ap.recurrent_mask[x]));
    // shortest distance to any recurrent configuration, per the BFS oracle
    std::uint32_t best = UINT32_MAX;
    for (Config y = 0; y < gp.state_count; ++y) {
      if (!ap.recurrent_mask[y]) continue;
      const auto d = oracle::bfs_distance(pos.net, x, y);
      if (d) best = std::min(best, static_cast<std::uint32_t>(*d));
    }
    CHECK(cp.per_config[x] == best);
  }

  const DoubleCycle mix = build_canonical(Kind::Mixed, 3, 3);
  CHECK(convergence(build_graph(mix.net)).network_time <= 7);  // 2n+m-2

  const DoubleCycle neg = build_canonical(Kind::Negative, 4, 2);
  CHECK(convergence(build_graph(neg.net)).network_time == 0);
}

TEST_CASE("irreversibility") {
  const DoubleCycle neg32 = build_canonical(Kind::Negative, 3, 2);
  const TransitionGraph g32 = build_graph(neg32.net);
  CHECK(irreversibility_check(g32, parse_config(neg32, "(101,11)")));
  CHECK(irreversibility_check(g32, parse_config(neg32, "(101,10)")));
  CHECK_FALSE(irreversibility_check(g32, parse_config(neg32, "(000,00)")));

  const DoubleCycle neg33 = build_canonical(Kind::Negative, 3, 3);
  const TransitionGraph g33 = build_graph(neg33.net);
  CHECK(irreversibility_check(g33, parse_config(neg33, "(010,010)")));

  const DoubleCycle neg22 = build_canonical(Kind::Negative, 2, 2);
  const TransitionGraph g22 = build_graph(neg22.net);
  for (Config x = 0; x < g22.state_count; ++x) {
    CHECK_FALSE(irreversibility_check(g22, x));
  }
}

TEST_CASE("DOT export") {
  const DoubleCycle neg = build_canonical(Kind::Negative, 2, 2);
  const TransitionGraph g = build_graph(neg.net);
  const AttractorAnalysis an = analyze(g);
  auto label = [&](Config x) { return format_config(neg, x); };

  std::ostringstream a, b;
  write_dot(a, g, an, label);
  write_dot(b, g, an, label);
  CHECK(a.str() == b.str());

  const std::string dot = a.str();
  std::size_t nodes = 0, rings = 0, edges = 0, at = 0;
  while ((at = dot.find("label=", at)) != std::string::npos) {
    ++nodes;
    ++at;
  }
  at = 0;
  while ((at = dot.find("peripheries=2", at)) != std::string::npos) {
    ++rings;
    ++at;
  }
  at = 0;
  while ((at = dot.find("->", at)) != std::string::npos) {
    ++edges;
    ++at;
  }
  CHECK(nodes == 8 + g.edge_count());  // node labels plus edge labels
  CHECK(rings == 8);
  CHECK(edges == g.edge_count());
}
