#include "tristrat/cli/app.hpp"

#include <fstream>
#include <new>
#include <ostream>

#include "CLI11.hpp"
#include "tristrat/cli/report.hpp"
#include "tristrat/consistency.hpp"
#include "tristrat/nonconsistency.hpp"
#include "tristrat_oracle/oracle.hpp"

namespace tristrat::cli {

namespace {

struct Flags {
  std::string config;
  std::string table;
  std::string agent_weights;
  std::string issue_weights;
  std::vector<std::string> cliques;
  std::string kind;
  std::optional<int> order;
  bool optimal_only = false;
  std::string json;
  bool allow_large = false;
  bool oracle_check = false;
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Capacity: return kCapacity;
    case ErrorKind::Gate: return kGate;
    default: return kInvalid;
  }
}

RunConfig resolve(const Flags& f) {
  RunConfig config = f.config.empty() ? RunConfig{} : load_config(f.config);
  if (!f.table.empty()) config.table = f.table;
  if (!f.agent_weights.empty()) config.agent_weights = f.agent_weights;
  if (!f.issue_weights.empty()) config.issue_weights = f.issue_weights;
  if (!f.cliques.empty()) config.cliques = f.cliques;
  if (!f.kind.empty()) config.kind = parse_kind(f.kind);
  return config;
}

// Recomputes the report's quantities with the reference oracle; returns the
// number of mismatches and writes one line per comparison group.
std::size_t oracle_check(const Inputs& in, const StrategyRequest& request, std::ostream& out) {
  using namespace tristrat::oracle;
  if (in.table.issue_count() > kMaxOracleIssues) {
    fail(ErrorKind::Capacity, "--oracle-check supports at most " + std::to_string(kMaxOracleIssues) + " issues");
  }
  ParamValues v = in.params.values();
  if (request.order) v.order = *request.order;
  const ParamSet params(v);
  std::size_t compared = 0;
  std::size_t mismatched = 0;
  auto note = [&](bool equal) {
    ++compared;
    if (!equal) ++mismatched;
  };
  for (auto g : in.cliques) {
    for (std::size_t t = 0; t < in.table.issue_count(); ++t) {
      note(oracle_rating(in.table, in.theta, g, t, params) == overall_rating(in.table, in.theta, g, t, params));
      note(oracle_cm_issue(in.table, in.theta, g, t, params) == cm_issue(in.table, in.theta, g, t, params));
      note(oracle_nm_issue(in.table, in.theta, g, t) == nm_issue(in.table, in.theta, g, t));
    }
    for (auto kind : {MeasureKind::Consistency, MeasureKind::NonConsistency}) {
      if (request.kind && *request.kind != kind) continue;
      const auto ok = kind == MeasureKind::Consistency ? Kind::Consistency : Kind::NonConsistency;
      const FeasibleSet fs = feasible(kind, in.table, in.theta, in.omega, g, params, request.engine);
      std::vector<Strategy> members;
      for (const auto& s : fs.strategies) {
        members.push_back(s.strategy);
        const Rational expected = kind == MeasureKind::Consistency
                                      ? oracle_cm(in.table, in.theta, in.omega, g, s.strategy, params)
                                      : oracle_nm(in.table, in.theta, in.omega, g, s.strategy);
        note(expected == s.degree);
      }
      const auto expected = oracle_select(in.table, in.theta, in.omega, g, params, ok, params.order());
      note(members == expected.feasible);
      const std::size_t n = in.table.issue_count();
      note(optimal(fs, n, params).strategies == expected.optimal);
      note(optimal(fs.of_order(params.order()), n, params).strategies == expected.optimal_order);
    }
  }
  out << "oracle check: " << compared << " comparisons, " << mismatched << " mismatched\n";
  return mismatched;
}

void emit(const Report& report, const Flags& f, std::ostream& out) {
  if (f.json != "-") out << report.text;
  if (f.json.empty()) return;
  const std::string body = report.json.dump(2) + "\n";
  if (f.json == "-") {
    out << body;
    return;
  }
  std::ofstream file(f.json, std::ios::binary);
  if (!file) fail(ErrorKind::Validation, "cannot write '" + f.json + "'");
  file << body;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted three-way conflict analysis over three-valued situation tables", "tristrat"};
  app.require_subcommand(1);
  Flags f;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", f.config, "key = value run file");
    sub->add_option("--table", f.table, "situation table CSV");
    sub->add_option("--agent-weights", f.agent_weights, "agent weights CSV (id,weight)");
    sub->add_option("--issue-weights", f.issue_weights, "issue weights CSV (id,weight)");
    sub->add_option("--clique", f.cliques, "comma-separated agent ids; repeatable");
    sub->add_option("--kind", f.kind, "measure: c (consistency) or n (non-consistency)")
        ->check(CLI::IsMember({"c", "n"}));
    sub->add_option("--json", f.json, "write the JSON document to this path ('-' for stdout)");
    sub->add_flag("--max-issues-override", f.allow_large, "allow full scans of up to 64 issues");
  };

  auto* analyze = app.add_subcommand("analyze", "powers, ratings, degrees and trisections per clique");
  common(analyze);
  analyze->add_flag("--oracle-check", f.oracle_check)->group("");
  auto* strategies = app.add_subcommand("strategies", "feasible and optimal strategies");
  common(strategies);
  strategies->add_option("--order", f.order, "L for the L-order variants")->check(CLI::PositiveNumber);
  strategies->add_flag("--optimal", f.optimal_only, "print only the optimal sets");
  strategies->add_flag("--oracle-check", f.oracle_check)->group("");
  auto* sweep = app.add_subcommand("sweep", "parameter sweep over sweep.<param> config entries");
  common(sweep);
  auto* baseline = app.add_subcommand("baseline-xu", "unweighted baseline next to the weighted model");
  common(baseline);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    app.exit(e, msg, err);
    return e.get_exit_code() == 0 ? kOk : kInvalid;
  }

  try {
    const RunConfig config = resolve(f);
    const Inputs inputs = load_inputs(config);
    EngineOptions engine;
    engine.allow_large = f.allow_large;
    int status = kOk;
    if (*analyze) {
      emit(run_analyze(inputs), f, out);
      if (f.oracle_check && oracle_check(inputs, StrategyRequest{std::nullopt, {}, false, engine}, err) > 0) {
        status = kOracleMismatch;
      }
    } else if (*strategies) {
      const StrategyRequest request{config.kind, f.order, f.optimal_only, engine};
      emit(run_strategies(inputs, request), f, out);
      if (f.oracle_check && oracle_check(inputs, request, err) > 0) status = kOracleMismatch;
    } else if (*sweep) {
      emit(run_sweep(inputs, config.sweeps, config.kind, engine), f, out);
    } else if (*baseline) {
      emit(run_baseline(inputs, engine), f, out);
    }
    return status;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::bad_alloc&) {
    err << "error: out of memory; narrow the scan with --order\n";
    return kCapacity;
  }
}

}  // namespace tristrat::cli
