#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "badc/double_cycle.hpp"

namespace badc {

struct VerificationCase {
  std::string id;
  int n = 0;
  int m = 0;
  std::string kind;
  std::string measured;
  std::string expected;
  bool pass = false;
};

struct VerificationReport {
  std::vector<VerificationCase> cases;

  int passed() const;
  int failed() const;
  bool all_passed() const { return failed() == 0; }
  void add(VerificationCase c) { cases.push_back(std::move(c)); }
  void merge(VerificationReport other);
  // cases whose id starts with the given prefix
  VerificationReport filter(std::string_view id_prefix) const;
};

struct VerifyLimits {
  int exhaustive_bits = 9;  // all-starts / all-targets sequence replays
  int sample_count = 512;   // sampled starts above the exhaustive limit
  std::uint64_t seed = 1;
};

// All (n, m) with the given minimums and n + m - 1 <= max_bits.
std::vector<std::pair<int, int>> size_pairs(int min_n, int min_m, int max_bits);
std::vector<std::pair<int, int>> even_size_pairs(int max_bits);

// Positive double-cycles: the two stable configurations, the network
// convergence-time bound 2(n+m)-5, and fix0/fix1 landings and effective
// counts from every valid start.
VerificationReport verify_positive(const std::vector<std::pair<int, int>>& sizes,
                                   const VerifyLimits& lim = {});

// Mixed double-cycles: the unique stable configuration, the convergence-time
// bound 2n+m-2, and simp landings within that bound from every start.
VerificationReport verify_mixed(const std::vector<std::pair<int, int>>& sizes,
                                const VerifyLimits& lim = {});

// Negative double-cycles: single attractor of size 2^(n+m-1) - |I| with the
// sum-form |I| (both sign readings are reported where they differ), transient
// set equal to the irreversible pattern families, simp/comp/copy_p replays
// within their bounds, and the sigma round trips on odd cycles.
VerificationReport verify_negative(const std::vector<std::pair<int, int>>& sizes,
                                   const VerifyLimits& lim = {});

// Exact distances from the all-zeros configuration to the two alternating
// configurations of negative even double-cycles, against the propagation
// lower bound and a superlinearity check across sizes.
VerificationReport verify_quadratic(const std::vector<int>& sizes);

// copy over every (start, target) pair meeting its entry conditions: lands on
// the target within 2(n+m-6) effective updates.
VerificationReport verify_copy_exhaustive(int n, int m);

// Seeded random sign assignments: the canonicalization relabeling is an exact
// transition-graph isomorphism (edge-set equality after relabeling).
VerificationReport verify_canonicalization(int n, int m, int samples,
                                           std::uint64_t seed);

// Seeded random networks from the supported function family: acyclic implies
// a unique stable configuration; two stable configurations imply a positive
// cycle; a stable oscillation implies a negative cycle.
VerificationReport verify_cycle_theorems(int samples, int max_n, std::uint64_t seed);

struct VerifyAllOptions {
  int max_bits = 13;
  VerifyLimits limits;
  std::vector<int> quadratic_sizes = {2, 4, 6};
  int theorem_samples = 200;
  int theorem_max_n = 8;
  int canonicalization_samples = 50;
};

VerificationReport verify_all(const VerifyAllOptions& opt = {});

void write_report_text(std::ostream& os, const VerificationReport& report);

namespace detail {
// Measured network convergence time against an arbitrary bound; lets tests
// exercise the harness failure path with a corrupted bound.
VerificationCase convergence_bound_case(Kind kind, int n, int m, int bound);
}  // namespace detail

}  // namespace badc
