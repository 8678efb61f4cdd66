#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/bounds.hpp"
#include "core/observables.hpp"

using namespace eur;

namespace {

const double kC32 = std::sqrt(3.0 / 8.0);          // spin-3/2 and spin-2 max overlap
const double kC2_32 = 1.0 / (2.0 * std::sqrt(2.0));  // spin-3/2 second overlap

const LiteratureBound* find_bound(const BoundReport& rep, const std::string& name) {
  for (const auto& b : rep.literature)
    if (b.name == name) return &b;
  return nullptr;
}

}  // namespace

TEST_CASE("q_mu matches the closed form") {
  CHECK(std::abs(q_mu(1.0 / std::sqrt(2.0)) - 1.0) < 1e-14);
  CHECK(std::abs(q_mu(1.0 / std::sqrt(3.0)) - std::log2(3.0)) < 1e-14);
  CHECK(std::abs(q_mu(kC32) - std::log2(8.0 / 3.0)) < 1e-14);
  CHECK(q_mu(1.0) == 0.0);
  CHECK_THROWS_AS(q_mu(0.0), DomainError);
  CHECK_THROWS_AS(q_mu(1.1), DomainError);
}

TEST_CASE("q_cp and q_rpz at the frozen spin overlap spectra") {
  CHECK(std::abs(q_cp(kC32, kC2_32) - 1.587368657171153) < 1e-12);
  CHECK(std::abs(q_rpz(kC32, kC2_32) - 1.677385533128935) < 1e-12);
  CHECK(std::abs(q_cp(kC32, 0.5) - 1.478639802189474) < 1e-12);
  CHECK(std::abs(q_rpz(kC32, 0.5) - 1.526024766186966) < 1e-12);
  // Flat overlap spectrum (c2 = c) collapses both refinements to q_mu.
  double cflat = 1.0 / std::sqrt(3.0);
  CHECK(std::abs(q_cp(cflat, cflat) - q_mu(cflat)) < 1e-14);
  CHECK(std::abs(q_rpz(cflat, cflat) - q_mu(cflat)) < 1e-14);
  CHECK_THROWS_AS(q_cp(0.5, 0.7), DomainError);  // c2 > c
  CHECK_THROWS_AS(q_rpz(0.5, 0.0), DomainError);
}

TEST_CASE("q_ivanovic for complete MUB sets") {
  CHECK(std::abs(q_ivanovic(2) - 1.754887502163468) < 1e-12);
  CHECK(q_ivanovic(3) == 4.0);
  CHECK(std::abs(q_ivanovic(4) - 6.60964047443681) < 1e-12);
  CHECK(std::abs(q_ivanovic(5) - 9.509775004326936) < 1e-12);
  // Closed form (d+1)(log2(d+1) - 1).
  for (int d : {2, 3, 4, 5})
    CHECK(std::abs(q_ivanovic(d) - (d + 1) * (std::log2(d + 1.0) - 1.0)) < 1e-12);
  CHECK_THROWS_AS(q_ivanovic(1), DomainError);
}

TEST_CASE("q_sanchez requires even dimension") {
  CHECK(std::abs(q_sanchez(2) - 0.8774437510817343) < 1e-12);
  CHECK(std::abs(q_sanchez(4) - 5.304820237218406) < 1e-12);
  CHECK(std::abs(q_sanchez(6) - 11.08062972936508) < 1e-11);
  CHECK_THROWS_AS(q_sanchez(3), DomainError);
  CHECK_THROWS_AS(q_sanchez(5), DomainError);
}

TEST_CASE("q_bw and q_azarchs match their closed forms") {
  CHECK(q_bw(4, 4) == 4.0);
  CHECK(std::abs(q_bw(9, 3) - 3 * std::log2(3.0)) < 1e-12);
  CHECK_THROWS_AS(q_bw(1, 2), DomainError);
  CHECK_THROWS_AS(q_bw(4, 0), DomainError);

  CHECK(std::abs(q_azarchs(3, 3) - 2.54399071966485) < 1e-12);
  CHECK(std::abs(q_azarchs(4, 4) - 4.770580311769583) < 1e-12);
  CHECK(std::abs(q_azarchs(5, 3) - 3.298607020652744) < 1e-12);
  CHECK(std::abs(q_azarchs(5, 4) - 5.287712379549449) < 1e-12);
  CHECK(std::abs(q_azarchs(5, 5) - 7.369655941662062) < 1e-12);
  for (int L = 2; L <= 6; ++L)
    CHECK(std::abs(q_azarchs(5, L) + L * std::log2((5.0 + L - 1) / (5.0 * L))) < 1e-12);
  CHECK_THROWS_AS(q_azarchs(5, 0), DomainError);
}

TEST_CASE("compare_bounds for a spin pair lists MU, CP and RPZ") {
  ObservableSet set = make_spin_set("3/2", "x,z");
  BoundReport rep = compare_bounds(set, 1.7091578053305, "numerical");
  CHECK(rep.kind == "spin");
  CHECK(rep.dim == 4);
  CHECK(rep.count == 2);
  CHECK(rep.has_certified);
  REQUIRE(rep.literature.size() == 3);
  const auto* mu = find_bound(rep, "MU");
  const auto* cp = find_bound(rep, "CP");
  const auto* rpz = find_bound(rep, "RPZ");
  REQUIRE(mu);
  REQUIRE(cp);
  REQUIRE(rpz);
  CHECK(std::abs(mu->value - 1.415037499278844) < 1e-12);
  CHECK(std::abs(cp->value - 1.587368657171153) < 1e-12);
  CHECK(std::abs(rpz->value - 1.677385533128935) < 1e-12);
  CHECK(mu->applicable);
  CHECK(cp->applicable);
  CHECK(rpz->applicable);
  CHECK(rep.strongest == "RPZ");
  CHECK(rep.dominance_ok);
  CHECK_FALSE(mu->tight);
}

TEST_CASE("compare_bounds marks CP and RPZ non-applicable for spin-1") {
  ObservableSet set = make_spin_set("1", "x,y");
  BoundReport rep = compare_bounds(set, 1.0, "analytic");
  const auto* mu = find_bound(rep, "MU");
  const auto* cp = find_bound(rep, "CP");
  const auto* rpz = find_bound(rep, "RPZ");
  REQUIRE(mu);
  REQUIRE(cp);
  REQUIRE(rpz);
  CHECK(mu->applicable);
  CHECK(mu->tight);  // q_mu = 1 equals the certified minimum
  CHECK(std::abs(mu->value - 1.0) < 1e-12);
  // The CP/RPZ refinements assume an overlap structure the spin-1 pair does
  // not have; their raw values exceed the certified minimum of 1.
  CHECK_FALSE(cp->applicable);
  CHECK_FALSE(rpz->applicable);
  CHECK(cp->value > 1.0 + 1e-6);
  CHECK(rpz->value > 1.0 + 1e-6);
  CHECK(!cp->note.empty());
  CHECK(rep.strongest == "MU");
  CHECK(rep.dominance_ok);  // non-applicable bounds are excluded
}

TEST_CASE("compare_bounds for triples combines pair bounds pairwise") {
  ObservableSet set = make_spin_set("3/2", "x,y,z");
  BoundReport rep = compare_bounds(set, 6.0 - 1.5 * std::log2(3.0), "analytic");
  const auto* mu = find_bound(rep, "MU (pairwise)");
  REQUIRE(mu);
  // Three pairs with identical overlaps: (1/(L-1)) * 3 * q_mu = 1.5 * q_mu.
  CHECK(std::abs(mu->value - 1.5 * q_mu(kC32)) < 1e-12);
  CHECK(rep.dominance_ok);
}

TEST_CASE("compare_bounds for complete MUB sets includes the set-level bounds") {
  BoundReport rep = compare_bounds(make_mub_set(3, 4), 4.0, "analytic");
  const auto* ivan = find_bound(rep, "I");
  const auto* az = find_bound(rep, "A");
  const auto* bw = find_bound(rep, "BW");
  REQUIRE(ivan);
  REQUIRE(az);
  REQUIRE(bw);
  CHECK(ivan->value == 4.0);
  CHECK(ivan->tight);
  CHECK(std::abs(az->value - 4.0) < 1e-12);
  CHECK(az->tight);
  CHECK(std::abs(bw->value - 2 * std::log2(3.0)) < 1e-12);
  CHECK_FALSE(find_bound(rep, "S"));  // odd dimension
  CHECK(rep.dominance_ok);
  // Strongest applicable bound is the tight one.
  CHECK(std::abs(rep.strongest_value - 4.0) < 1e-12);

  BoundReport rep4 = compare_bounds(make_mub_set(4, 5), 7.0, "analytic");
  const auto* s4 = find_bound(rep4, "S");
  REQUIRE(s4);
  CHECK(std::abs(s4->value - 5.304820237218406) < 1e-12);
  CHECK(find_bound(rep4, "I"));
  CHECK(rep4.dominance_ok);
}

TEST_CASE("compare_bounds omits set-level complete-set bounds for partial sets") {
  BoundReport rep = compare_bounds(make_mub_set(4, 4), 5.0, "analytic");
  CHECK_FALSE(find_bound(rep, "I"));
  CHECK_FALSE(find_bound(rep, "S"));
  const auto* bw = find_bound(rep, "BW");
  REQUIRE(bw);
  CHECK(bw->value == 4.0);
  const auto* az = find_bound(rep, "A");
  REQUIRE(az);
  CHECK(std::abs(az->value - 4.770580311769583) < 1e-12);
  CHECK(rep.dominance_ok);
}

TEST_CASE("compare_bounds flags dominance violations") {
  // Deliberately understate the certified minimum: every bound above it must
  // trip the dominance flag.
  BoundReport rep = compare_bounds(make_mub_set(3, 4), 3.5, "numerical");
  CHECK_FALSE(rep.dominance_ok);
}

TEST_CASE("compare_bounds tracks claimed reference values separately") {
  ObservableSet set = make_spin_set("2", "x,y,z");
  BoundReport rep = compare_bounds(set, 3.0, "numerical", 3.12);
  CHECK(rep.has_claimed);
  CHECK(rep.claimed == 3.12);
  CHECK(rep.has_certified);
  CHECK(rep.certified_min == 3.0);
  BoundReport plain = compare_bounds(set);
  CHECK_FALSE(plain.has_certified);
  CHECK_FALSE(plain.has_claimed);
  CHECK(plain.dominance_ok);  // nothing to dominate
}

TEST_CASE("single-observable sets have no pair bounds") {
  BoundReport rep = compare_bounds(make_mub_set(3, 1), 0.0, "analytic");
  CHECK_FALSE(find_bound(rep, "MU"));
  CHECK_FALSE(find_bound(rep, "MU (pairwise)"));
  CHECK(rep.dominance_ok);
}
