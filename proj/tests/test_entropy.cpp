#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "core/entropy.hpp"
#include "core/observables.hpp"
#include "core/rng.hpp"
#include "core/state.hpp"

using namespace eur;

namespace {

const double kLog2_3 = std::log2(3.0);

Vec basis_vector(int d, int k) {
  Vec e = Vec::Zero(d);
  e[k] = 1.0;
  return e;
}

}  // namespace

TEST_CASE("shannon_entropy on known distributions") {
  CHECK(shannon_entropy({{1.0, 0.0}}) == 0.0);
  CHECK(std::abs(shannon_entropy({{0.5, 0.5}}) - 1.0) < 1e-15);
  CHECK(std::abs(shannon_entropy({{0.5, 0.25, 0.25}}) - 1.5) < 1e-15);
  for (int d = 2; d <= 5; ++d) {
    std::vector<double> u(d, 1.0 / d);
    CHECK(std::abs(shannon_entropy({u}) - std::log2(double(d))) < 1e-14);
  }
  // 0*log(0) = 0, including denormal-sized leftovers.
  CHECK(shannon_entropy({{1.0, 0.0, 1e-16}}) == 0.0);
  CHECK_THROWS_AS(shannon_entropy({{1.2, -0.2}}), DomainError);
}

TEST_CASE("outcome_distribution matches Born probabilities") {
  ObservableSet set = make_mub_set(3, 4);
  SplitMix64 rng(5);
  for (int rep = 0; rep < 50; ++rep) {
    StateParams p;
    for (int k = 0; k < 2; ++k) {
      p.angles.push_back(rng.uniform(0.0, kPi / 2));
      p.phases.push_back(rng.uniform(0.0, 2 * kPi));
    }
    Vec psi = state_from_params(p);
    for (const auto& b : set.bases) {
      OutcomeDistribution dist = outcome_distribution(psi, b);
      REQUIRE(dist.probs.size() == 3);
      double sum = 0.0;
      for (int k = 0; k < 3; ++k) {
        double direct = std::norm(b.U.col(k).dot(psi));
        CHECK(std::abs(dist.probs[k] - direct) < 1e-15);
        sum += dist.probs[k];
      }
      CHECK(std::abs(sum - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("eigenstates are deterministic in their own basis and flat in unbiased ones") {
  for (int d : {2, 3, 5}) {
    ObservableSet set = make_mub_set(d, d + 1);
    for (int k = 0; k < d; ++k) {
      Vec e = basis_vector(d, k);  // eigenstate of M1 = identity
      EntropyProfile prof = entropy_profile(e, set);
      CHECK(prof.per_observable[0].second == 0.0);
      for (int b = 1; b <= d; ++b)
        CHECK(std::abs(prof.per_observable[b].second - std::log2(double(d))) < 1e-12);
      CHECK(std::abs(prof.total - d * std::log2(double(d))) < 1e-12);
    }
  }
}

TEST_CASE("entropy_profile carries labels and totals consistently") {
  ObservableSet set = make_spin_set("3/2", "x,y,z");
  Vec psi = basis_vector(4, 0);  // |S_x = +3/2> in the S_x eigenbasis ordering
  EntropyProfile prof = entropy_profile(psi, set);
  REQUIRE(prof.per_observable.size() == 3);
  CHECK(prof.per_observable[0].first == "S_x");
  CHECK(prof.per_observable[1].first == "S_y");
  CHECK(prof.per_observable[2].first == "S_z");
  double manual = 0.0;
  for (const auto& [label, h] : prof.per_observable) manual += h;
  CHECK(prof.total == manual);
  CHECK(entropy_sum(psi, set) == prof.total);
}

TEST_CASE("spin-1 null projection state has one bit per complementary axis") {
  // |S_z = 0> = (0,0,1) in the operative representation; measuring S_x or S_y
  // gives (0, 1/2, 1/2) and measuring S_z gives a deterministic outcome.
  ObservableSet set = make_spin_set("1", "x,y,z");
  Vec e2 = basis_vector(3, 2);
  EntropyProfile prof = entropy_profile(e2, set);
  CHECK(std::abs(prof.per_observable[0].second - 1.0) < 1e-12);
  CHECK(std::abs(prof.per_observable[1].second - 1.0) < 1e-12);
  CHECK(std::abs(prof.per_observable[2].second - 0.0) < 1e-12);
  CHECK(std::abs(prof.total - 2.0) < 1e-12);
}

TEST_CASE("unnormalized states are rejected rather than renormalized") {
  ObservableSet set = make_mub_set(3, 2);
  Vec bad = 0.9 * basis_vector(3, 0);
  CHECK_THROWS_AS(outcome_distribution(bad, set.bases[0]), NumericError);
  CHECK_THROWS_AS(entropy_sum(bad, set), NumericError);
  Vec wrong_dim = basis_vector(4, 0);
  CHECK_THROWS_AS(outcome_distribution(wrong_dim, set.bases[0]), DomainError);
}

TEST_CASE("entropy sums respect known analytic values on superpositions") {
  // (|1> - |2>)/sqrt(2) against the four d=3 MUBs attains the certified 4.
  ObservableSet set = make_mub_set(3, 4);
  Vec psi(3);
  psi << cxd(0, 0), cxd(1 / std::sqrt(2.0), 0), cxd(-1 / std::sqrt(2.0), 0);
  CHECK(std::abs(entropy_sum(psi, set) - 4.0) < 1e-12);
  // Every single basis state against the first three MUBs attains 2*log2(3).
  ObservableSet l3 = make_mub_set(3, 3);
  for (int k = 0; k < 3; ++k)
    CHECK(std::abs(entropy_sum(basis_vector(3, k), l3) - 2 * kLog2_3) < 1e-12);
}
