#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tristrat/cli/app.hpp"
#include "tristrat/cli/config.hpp"
#include "tristrat/cli/report.hpp"

using namespace tristrat;
using namespace tristrat::cli;

namespace {

const std::filesystem::path kData = TRISTRAT_DATA_DIR;

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "tristrat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int status = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return Run{status, out.str(), err.str()};
}

RunConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in, "/base", "test.conf");
}

std::string conf(const char* name) { return (kData / name).string(); }

}  // namespace

TEST_CASE("config parsing") {
  auto c = parse(
      "# comment\n"
      "table = t.csv   # trailing comment\n"
      "\n"
      "clique = p1,p2\n"
      "clique = p3\n"
      "mu = 0.3\n"
      "nu = -3/10\n"
      "order = 4\n"
      "kind = n\n"
      "focus = t5\n"
      "sweep.lambda = 0.5:0.95:0.05\n");
  CHECK(c.table->string() == "/base/t.csv");
  CHECK(c.cliques == std::vector<std::string>{"p1,p2", "p3"});
  CHECK(c.values.mu == Rational(3, 10));
  CHECK(c.values.nu == Rational(-3, 10));
  CHECK(c.values.order == 4);
  CHECK(*c.kind == MeasureKind::NonConsistency);
  CHECK(*c.focus == "t5");
  CHECK(c.sweeps.at(SweepParam::Lambda).points().size() == 10);
  CHECK(c.values.tau == Rational(1, 2));
}

TEST_CASE("config errors name the line") {
  auto message = [](const std::string& text) {
    try {
      parse(text);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("mu = 0.3\nbogus = 1\n") == "test.conf:2: unknown key 'bogus'");
  CHECK(message("mu 0.3\n") == "test.conf:1: expected 'key = value'");
  CHECK(message("order = 2x\n").rfind("test.conf:1: expected an integer", 0) == 0);
  CHECK(message("sweep.mu = 0:1\n").rfind("test.conf:1: sweep.mu needs start:stop:step", 0) == 0);
  CHECK(message("sweep.mu = 0:1:0.3\n").rfind("test.conf:1: sweep mu: step does not divide", 0) == 0);
  CHECK(message("sweep.gamma = 0:1:0.5\n") == "test.conf:1: unknown sweep parameter 'sweep.gamma'");
  CHECK(message("kind = x\n").rfind("test.conf:1: kind must be", 0) == 0);
}

TEST_CASE("parameter ranges are enforced when inputs load") {
  auto c = load_config(conf("nba.conf"));
  c.values.lambda = Rational(2, 5);
  CHECK_THROWS_AS(load_inputs(c), Error);
  c = load_config(conf("nba.conf"));
  c.values.order = 10;
  CHECK_THROWS_AS(load_inputs(c), Error);
}

TEST_CASE("degrees round-trip through JSON") {
  for (const char* text : {"0", "1", "-3/10", "269/364", "123456789012345678901234567890/7"}) {
    const Rational r = Rational::parse(text);
    const Json j = degree_json(r);
    CHECK(degree_from_json(Json::parse(j.dump())) == r);
  }
  CHECK(degree_json(Rational(2, 3))["decimal"] == "0.666667");
}

TEST_CASE("strategies report content") {
  auto in = load_inputs(load_config(conf("nba.conf")));
  auto r = run_strategies(in, StrategyRequest{});
  const auto& doc = r.json;
  CHECK(doc["command"] == "strategies");
  CHECK(doc["counts"]["strategies"] == "511");
  CHECK(doc["counts"]["order_strategies"] == "126");
  const auto& res = doc["results"][0];
  CHECK(res["consistency"]["feasible_count"] == 19);
  CHECK(res["consistency"]["order_feasible_count"] == 1);
  CHECK(res["nonconsistency"]["feasible_count"] == 33);
  CHECK(res["nonconsistency"]["order_feasible_count"] == 4);
  CHECK(res["consistency"]["optimal"]["strategies"][0] == Json::array({"t1", "t2", "t3", "t7", "t9"}));
  CHECK(res["consistency"]["feasible"].size() == 19);

  auto optimal_only = run_strategies(in, StrategyRequest{MeasureKind::Consistency, 5, true, {}});
  CHECK_FALSE(optimal_only.json["results"][0]["consistency"].contains("feasible"));
  CHECK_FALSE(optimal_only.json["results"][0].contains("nonconsistency"));
}

TEST_CASE("machine output does not depend on the worker count") {
  auto in = load_inputs(load_config(conf("nba.conf")));
  std::string first;
  for (unsigned workers : {1u, 2u, 8u}) {
    StrategyRequest req;
    req.engine.workers = workers;
    const std::string dump = run_strategies(in, req).json.dump(2);
    if (first.empty()) first = dump;
    CHECK(dump == first);
  }
  CHECK(first.find("worker") == std::string::npos);
}

TEST_CASE("zero-length sweep equals a strategies run") {
  auto config = load_config(conf("nba.conf"));
  config.sweeps.insert_or_assign(SweepParam::Lambda,
                                 SweepAxis{SweepParam::Lambda, config.values.lambda, config.values.lambda, Rational(0)});
  auto in = load_inputs(config);
  auto sweep = run_sweep(in, config.sweeps, std::nullopt, {});
  auto strat = run_strategies(in, StrategyRequest{MeasureKind::Consistency, std::nullopt, true, {}});
  const auto& cell = sweep.json["results"][0]["cells"][0];
  const auto& direct = strat.json["results"][0]["consistency"];
  CHECK(sweep.json["results"][0]["cells"].size() == 1);
  CHECK(cell["feasible_count"] == direct["feasible_count"]);
  CHECK(cell["order_feasible_count"] == direct["order_feasible_count"]);
  CHECK(cell["optimal"] == direct["optimal"]);
  CHECK(cell["order_optimal"] == direct["order_optimal"]);
}

TEST_CASE("uniform weights with a zero band make the baseline agree") {
  auto config = load_config(conf("nba_baseline.conf"));
  config.agent_weights.reset();
  config.issue_weights.reset();
  config.values.mu = Rational(0);
  config.values.nu = Rational(0);
  auto r = run_baseline(load_inputs(config), {});
  for (const auto& entry : r.json["results"]) {
    CHECK(entry["weighted_ratings"] == entry["unweighted_ratings"]);
    CHECK(entry["diverging_issues"].empty());
  }
}

TEST_CASE("baseline report reproduces the comparison rows") {
  auto r = run_baseline(load_inputs(load_config(conf("nba_baseline.conf"))), {});
  const auto& rows = r.json["results"];
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]["dominant"]["strategy"] == Json::array({"t1", "t2", "t7"}));
  CHECK(rows[1]["dominant"]["strategy"] == Json::array({"t1", "t2", "t9"}));
  CHECK(rows[2]["dominant"]["strategy"] == Json::array({"t2", "t3", "t9"}));
  CHECK(rows[0]["weighted_feasible"].size() == 10);
  CHECK(rows[0]["diverging_issues"] == Json::array({"t4", "t8", "t9"}));
}

TEST_CASE("command line front end") {
  auto ok = invoke({"analyze", "--config", conf("middle_east.conf")});
  CHECK(ok.status == kOk);
  CHECK(ok.out.find("rating vector 0+-0+") != std::string::npos);

  CHECK(invoke({"strategies", "--config", conf("nba.conf"), "--clique", "p1,p2"}).status == kGate);
  CHECK(invoke({"strategies", "--table", (kData / "wide/table.csv").string()}).status == kCapacity);
  CHECK(invoke({"analyze", "--config", conf("nba.conf"), "--clique", "p1,p99"}).status == kInvalid);
  CHECK(invoke({"strategies"}).status == kInvalid);
  CHECK(invoke({}).status == kInvalid);
  CHECK(invoke({"--help"}).status == kOk);

  auto json_out = invoke({"strategies", "--config", conf("middle_east.conf"), "--json", "-"});
  CHECK(json_out.status == kOk);
  auto doc = Json::parse(json_out.out);
  CHECK(doc["results"][0]["consistency"]["optimal"]["degree"]["num"] == "269");
  CHECK(doc["results"][0]["consistency"]["optimal"]["degree"]["den"] == "364");

  const auto path = std::filesystem::temp_directory_path() / "tristrat_test_cli.json";
  auto to_file = invoke({"sweep", "--config", conf("nba_sweep_tau.conf"), "--json", path.string()});
  CHECK(to_file.status == kOk);
  std::ifstream in(path);
  auto sweep_doc = Json::parse(in);
  CHECK(sweep_doc["results"][0]["cells"].size() == 10);
  CHECK(sweep_doc["results"][0]["kind"] == "non-consistency");
  std::filesystem::remove(path);

  auto checked = invoke({"strategies", "--config", conf("middle_east.conf"), "--oracle-check"});
  CHECK(checked.status == kOk);
  CHECK(checked.err.find(" 0 mismatched") != std::string::npos);
}
