#include "doctest.h"

#include "support/properties.hpp"

namespace {

constexpr int kCases = 1000;

void run_suite(props::Outcome (*suite)(int)) {
  const auto o = suite(kCases);
  CHECK(o.cases == kCases);
  CHECK_MESSAGE(o.failures == 0, o.first_failure);
}

}  // namespace

TEST_CASE("powers lie in [0,1] and sum to one") { run_suite(props::powers_sum_to_one); }
TEST_CASE("agent and clique similarity identities") { run_suite(props::similarity_identities); }
TEST_CASE("rating conditions are equivalent") { run_suite(props::rating_equivalences); }
TEST_CASE("closed-form consistency equals the distance form") { run_suite(props::consistency_closed_form); }
TEST_CASE("min-form conflict equals the definitional form") { run_suite(props::conflict_min_form); }
TEST_CASE("non-consistency equals the pairwise double sum") { run_suite(props::nonconsistency_pairwise); }
TEST_CASE("conflict symmetry and boundary conditions") { run_suite(props::conflict_symmetry_and_bounds); }
TEST_CASE("uniform weights reduce to the unweighted model") { run_suite(props::unweighted_degeneration); }
TEST_CASE("engine measures equal the oracle") { run_suite(props::oracle_measures); }
TEST_CASE("engine feasible and optimal sets equal the oracle") { run_suite(props::oracle_strategy_sets); }

TEST_CASE("a broken property is reported") {
  props::Outcome o;
  o.check(true, "holds", 0);
  o.check(false, "fails", 7);
  o.check(false, "fails again", 9);
  CHECK(o.failures == 2);
  CHECK(o.first_failure == "fails (case 7)");
}
