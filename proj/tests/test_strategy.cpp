#include "doctest.h"

#include "support/cases.hpp"
#include "support/fixtures.hpp"
#include "support/golden.hpp"
#include "tristrat/consistency.hpp"
#include "tristrat/nonconsistency.hpp"
#include "tristrat/strategy.hpp"

using namespace tristrat;
using fixtures::q;

namespace {

std::vector<std::string> names(const SituationTable& t, const FeasibleSet& fs) {
  std::vector<std::string> out;
  for (const auto& s : fs.strategies) out.push_back(t.format(s.strategy));
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Usage;
}

}  // namespace

TEST_CASE("strategy enumeration") {
  CHECK(enumerate_strategies(5).size() == 31);
  CHECK(enumerate_strategies(5, 3).size() == 10);
  CHECK(enumerate_strategies(9).size() == 511);
  CHECK(enumerate_strategies(9, 5).size() == 126);
  CHECK(enumerate_strategies(11, 6).size() == 462);
  CHECK(enumerate_strategies(1).size() == 1);

  auto all = enumerate_strategies(6);
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(canonical_less(all[i - 1], all[i]));
  CHECK(all.front() == Strategy::of({0}));
  CHECK(all.back() == Strategy::first(6));

  CHECK(kind_of([] { enumerate_strategies(0); }) == ErrorKind::Validation);
  CHECK(kind_of([] { enumerate_strategies(5, 6); }) == ErrorKind::Validation);
  CHECK(kind_of([] { enumerate_strategies(5, 0); }) == ErrorKind::Validation);
  CHECK(kind_of([] { enumerate_strategies(25); }) == ErrorKind::Capacity);
  CHECK(kind_of([] { enumerate_strategies(65, 1, true); }) == ErrorKind::Capacity);
  CHECK(enumerate_strategies(30, 1).size() == 30);
  CHECK(enumerate_strategies(40, 2, true).size() == 780);
}

TEST_CASE("clique gate") {
  CHECK(clique_gate(Clique::of({0, 1, 2}), 6, q("0.5")));
  CHECK_FALSE(clique_gate(Clique::of({0, 1}), 6, q("0.5")));
  CHECK(clique_gate(Clique{}, 6, Rational(0)));

  auto me = fixtures::load("middle_east");
  auto kind = kind_of([&] {
    feasible_c(me.table, me.theta, me.omega, fixtures::clique(me.table, "p1,p2"), cases::middle_east());
  });
  CHECK(kind == ErrorKind::Gate);
}

TEST_CASE("Middle East feasible and optimal strategies") {
  auto me = fixtures::load("middle_east");
  const auto params = cases::middle_east();
  const Clique g = fixtures::clique(me.table, cases::kMiddleEastClique);

  auto fc = feasible_c(me.table, me.theta, me.omega, g, params);
  CHECK(names(me.table, fc) ==
        std::vector<std::string>{"{t1}", "{t4}", "{t1,t4}", "{t1,t5}", "{t1,t2,t4}", "{t1,t4,t5}"});
  auto oc = optimal_c(fc, 5, params);
  REQUIRE(oc.strategies.size() == 1);
  CHECK(me.table.format(oc.strategies[0]) == "{t1,t4,t5}");
  CHECK(*oc.extremal_degree == Rational(269, 364));
  CHECK(names(me.table, fc.of_order(3)) == std::vector<std::string>{"{t1,t2,t4}", "{t1,t4,t5}"});
  CHECK(me.table.format(optimal_c(fc.of_order(3), 5, params).strategies.at(0)) == "{t1,t4,t5}");

  auto fn = feasible_n(me.table, me.theta, me.omega, g, params);
  CHECK(names(me.table, fn) == std::vector<std::string>{"{t1}", "{t4}", "{t1,t4}", "{t1,t3,t4}"});
  auto on = optimal_n(fn, 5, params);
  REQUIRE(on.strategies.size() == 1);
  CHECK(me.table.format(on.strategies[0]) == "{t1,t3,t4}");
  CHECK(abs(*on.extremal_degree - q("0.2694")) <= q("0.00005"));

  for (const auto& s : fc.strategies) {
    CHECK(s.degree == cm_strategy(me.table, me.theta, me.omega, g, s.strategy, params));
  }
  for (const auto& s : fn.strategies) {
    CHECK(s.degree == nm_strategy(me.table, me.theta, me.omega, g, s.strategy));
  }
}

TEST_CASE("order option scans only that cardinality") {
  auto me = fixtures::load("middle_east");
  const auto params = cases::middle_east();
  const Clique g = fixtures::clique(me.table, cases::kMiddleEastClique);
  EngineOptions options;
  options.order = 3;
  auto direct = feasible_c(me.table, me.theta, me.omega, g, params, options);
  CHECK(direct.strategies == feasible_c(me.table, me.theta, me.omega, g, params).of_order(3).strategies);
}

TEST_CASE("NBA case") {
  auto nba = fixtures::load("nba");
  const auto params = cases::nba();
  const Clique g = fixtures::clique(nba.table, cases::kNbaClique);

  auto fc = feasible_c(nba.table, nba.theta, nba.omega, g, params);
  auto fn = feasible_n(nba.table, nba.theta, nba.omega, g, params);
  CHECK(fc.size() == 19);
  CHECK(fc.of_order(5).size() == 1);
  CHECK(fn.size() == 33);
  CHECK(fn.of_order(5).size() == 4);
  CHECK(sorted(names(nba.table, fc)) == sorted(golden::kNbaFsC));
  CHECK(sorted(names(nba.table, fc.of_order(5))) == sorted(golden::kNbaFsC5));
  CHECK(sorted(names(nba.table, fn)) == sorted(golden::kNbaFsN));
  CHECK(sorted(names(nba.table, fn.of_order(5))) == sorted(golden::kNbaFsN5));

  const std::vector<std::string> expected = {"{t1,t2,t3,t7,t9}"};
  CHECK(fixtures::format_all(nba.table, optimal_c(fc, 9, params).strategies) == expected);
  CHECK(fixtures::format_all(nba.table, optimal_n(fn, 9, params).strategies) == expected);
  CHECK(fixtures::format_all(nba.table, optimal_c(fc.of_order(5), 9, params).strategies) == expected);
  CHECK(fixtures::format_all(nba.table, optimal_n(fn.of_order(5), 9, params).strategies) == expected);
}

TEST_CASE("Gansu case") {
  auto gs = fixtures::load("gansu");
  const auto params = cases::gansu();
  const Clique g = fixtures::clique(gs.table, cases::kGansuClique);

  CHECK(enumerate_strategies(11).size() == 2047);
  auto fc = feasible_c(gs.table, gs.theta, gs.omega, g, params);
  auto fn = feasible_n(gs.table, gs.theta, gs.omega, g, params);
  CHECK(fc.size() == 48);
  CHECK(fc.of_order(6).size() == 3);
  CHECK(fn.size() == 53);
  CHECK(fn.of_order(6).size() == 3);
  CHECK(sorted(names(gs.table, fc)) == sorted(golden::kGansuFsC));
  CHECK(sorted(names(gs.table, fc.of_order(6))) == sorted(golden::kGansuFsC6));
  CHECK(sorted(names(gs.table, fn)) == sorted(golden::kGansuFsN));
  CHECK(sorted(names(gs.table, fn.of_order(6))) == sorted(golden::kGansuFsN6));
  CHECK(fixtures::format_all(gs.table, optimal_c(fc, 11, params).strategies) ==
        std::vector<std::string>{"{t3,t4,t5,t6,t8,t9}"});
  CHECK(fixtures::format_all(gs.table, optimal_n(fn, 11, params).strategies) ==
        std::vector<std::string>{"{t2,t3,t4,t5,t8,t9}"});
}

TEST_CASE("optimal selection edge cases") {
  auto nba = fixtures::load("nba");
  const Clique g = fixtures::clique(nba.table, cases::kNbaClique);
  ParamValues v = cases::nba().values();
  v.lambda = q("0.95");
  auto fc = feasible_c(nba.table, nba.theta, nba.omega, g, ParamSet(v));
  auto oc = optimal_c(fc, 9, ParamSet(v));
  CHECK(oc.empty());
  CHECK_FALSE(oc.extremal_degree.has_value());

  v.lambda = Rational(1);
  CHECK(feasible_c(nba.table, nba.theta, nba.omega, g, ParamSet(v)).size() > 0);
  auto fn = feasible_n(nba.table, nba.theta, nba.omega, g, cases::nba());
  CHECK(kind_of([&] { optimal_c(fn, 9, cases::nba()); }) == ErrorKind::Usage);
  CHECK(kind_of([&] { optimal_n(fc, 9, cases::nba()); }) == ErrorKind::Usage);

  SituationTable twin({"a", "b"}, {"x", "y"}, {Rating::Positive, Rating::Positive, Rating::Positive, Rating::Positive});
  auto w = WeightVector::uniform(Axis::Agents, twin.agents());
  auto o = WeightVector::uniform(Axis::Issues, twin.issues());
  auto all = feasible_c(twin, w, o, twin.all_agents(), ParamSet());
  CHECK(all.size() == 3);
  CHECK(optimal_c(all, 2, ParamSet()).strategies.size() == 3);
}

TEST_CASE("zero-weight strategies are skipped") {
  SituationTable t({"a", "b"}, {"x", "y"}, {Rating::Positive, Rating::Negative, Rating::Positive, Rating::Positive});
  auto theta = WeightVector::uniform(Axis::Agents, t.agents());
  WeightVector omega(Axis::Issues, t.issues(), {0, 1});
  auto fs = feasible_c(t, theta, omega, t.all_agents(), ParamSet());
  CHECK(names(t, fs) == std::vector<std::string>{"{y}", "{x,y}"});
}

TEST_CASE("results do not depend on the worker count") {
  auto gs = fixtures::load("gansu");
  const auto params = cases::gansu();
  const Clique g = fixtures::clique(gs.table, cases::kGansuClique);
  EngineOptions one;
  one.workers = 1;
  const auto base_c = feasible_c(gs.table, gs.theta, gs.omega, g, params, one).strategies;
  const auto base_n = feasible_n(gs.table, gs.theta, gs.omega, g, params, one).strategies;
  for (unsigned workers : {2u, 3u, 8u}) {
    EngineOptions many;
    many.workers = workers;
    CHECK(feasible_c(gs.table, gs.theta, gs.omega, g, params, many).strategies == base_c);
    CHECK(feasible_n(gs.table, gs.theta, gs.omega, g, params, many).strategies == base_n);
    many.order = 6;
    CHECK(feasible_c(gs.table, gs.theta, gs.omega, g, params, many).strategies ==
          feasible_c(gs.table, gs.theta, gs.omega, g, params, one).of_order(6).strategies);
  }
}

TEST_CASE("wide tables need an order or an override") {
  std::vector<std::string> issues;
  std::vector<Rating> ratings;
  for (int t = 0; t < 30; ++t) issues.push_back("t" + std::to_string(t + 1));
  for (int p = 0; p < 2; ++p) {
    for (int t = 0; t < 30; ++t) ratings.push_back((t + p) % 3 == 0 ? Rating::Negative : Rating::Positive);
  }
  SituationTable t({"a", "b"}, issues, ratings);
  auto theta = WeightVector::uniform(Axis::Agents, t.agents());
  auto omega = WeightVector::uniform(Axis::Issues, t.issues());
  CHECK(kind_of([&] { feasible_c(t, theta, omega, t.all_agents(), ParamSet()); }) == ErrorKind::Capacity);
  EngineOptions options;
  options.order = 2;
  auto fs = feasible_c(t, theta, omega, t.all_agents(), ParamSet(), options);
  CHECK(fs.size() == 435);
  for (const auto& s : fs.strategies) CHECK(s.strategy.size() == 2);
}
