#include "doctest.h"
#include "osd/dsl.hpp"
#include "osd/error.hpp"
#include "osd/oracle.hpp"

#include <cmath>

using namespace osd;

namespace {
BalancedPair bp(Word t, Word u) { return BalancedPair::canonical(std::move(t), std::move(u)); }
}  // namespace

TEST_CASE("Fibonacci discrepancy density") {
  SubstitutionRule rule = parse_rule("a -> ab; b -> a");
  InflationData d = pf_data(rule);
  PairTrajectory t = iterate_pair_density(bp({0, 1}, {1, 0}), rule, d, 20);
  REQUIRE(t.steps.size() == 21);
  CHECK(t.steps[0].density == 1.0);
  CHECK(t.lengths_exact);
  // the discrepant length stays put while the total grows by lambda
  for (const auto& s : t.steps) CHECK(s.discrepancy_length == doctest::Approx(t.steps[0].discrepancy_length));
  DecayEstimate e = estimate_decay(t);
  CHECK(e.estimated_log_lambda_dc == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(e.slope == doctest::Approx(-std::log((1 + std::sqrt(5.0)) / 2)));
  CHECK(e.r_squared > 0.999);
}

TEST_CASE("coincidence seed has zero density") {
  SubstitutionRule rule = parse_rule("a -> ab; b -> a");
  InflationData d = pf_data(rule);
  PairTrajectory t = iterate_pair_density(bp({0}, {0}), rule, d, 10);
  for (const auto& s : t.steps) CHECK(s.density == 0.0);
  CHECK_THROWS_AS(estimate_decay(t), InsufficientData);
}

TEST_CASE("Tribonacci estimate") {
  SubstitutionRule rule = parse_rule("a -> ab; b -> ac; c -> a");
  InflationData d = pf_data(rule);
  PairTrajectory t = iterate_pair_density(bp({0, 1}, {1, 0}), rule, d, 30);
  CHECK(t.lengths_exact);
  DecayEstimate e = estimate_decay(t);
  CHECK(e.estimated_log_lambda_dc == doctest::Approx(std::log(1.395337)).epsilon(0.02));
}

TEST_CASE("short trajectories are rejected") {
  SubstitutionRule rule = parse_rule("a -> ab; b -> a");
  InflationData d = pf_data(rule);
  PairTrajectory t = iterate_pair_density(bp({0, 1}, {1, 0}), rule, d, 8);
  CHECK_THROWS_AS(estimate_decay(t), InsufficientData);
  CHECK_NOTHROW(estimate_decay(t, 2));
  CHECK_THROWS_AS(iterate_pair_density(bp({0, 1}, {1, 0}), rule, d, 5, 1), CapExceeded);
}

TEST_CASE("return words") {
  SubstitutionRule fib = parse_rule("a -> ab; b -> a");
  CHECK(return_words(fib, 0, 50) == std::vector<Word>{{0, 1}, {0}});
  SubstitutionRule cl = parse_rule("a -> abab; b -> caab; c -> bcab");
  for (const Word& w : return_words(cl, 0, 200)) {
    CHECK(w.front() == 0);
    CHECK(std::count(w.begin(), w.end(), Letter{0}) == 1);
  }
}
