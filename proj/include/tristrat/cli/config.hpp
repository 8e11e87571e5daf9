#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tristrat/model.hpp"
#include "tristrat/sensitivity.hpp"
#include "tristrat/strategy.hpp"

namespace tristrat::cli {

/// Contents of a `key = value` run file. Paths are resolved against the
/// directory of the file they came from. Parameters not set keep the
/// ParamValues defaults.
struct RunConfig {
  std::optional<std::filesystem::path> table;
  std::optional<std::filesystem::path> agent_weights;
  std::optional<std::filesystem::path> issue_weights;
  ParamValues values;
  /// Each entry is a comma-separated list of agent ids.
  std::vector<std::string> cliques;
  std::optional<std::string> focus;
  std::optional<MeasureKind> kind;
  /// Keyed by parameter, in SweepParam order.
  std::map<SweepParam, SweepAxis> sweeps;
};

/// Keys: table, agent_weights, issue_weights, mu, nu, lambda, tau, gamma_p,
/// gamma_t, order, alpha_c, beta_c, alpha_n, beta_n, alpha_pair, beta_pair,
/// clique (repeatable), focus, kind (c|n), sweep.<mu|nu|lambda|tau> =
/// start:stop:step. Blank lines and `#` comments are ignored.
RunConfig parse_config(std::istream& in, const std::filesystem::path& base_dir,
                       const std::string& source_name = "<config>");
RunConfig load_config(const std::filesystem::path& path);

MeasureKind parse_kind(const std::string& text);
SweepAxis parse_axis(SweepParam param, const std::string& spec);

/// Everything a command needs, validated: weights aligned to the table,
/// cliques resolved to index sets, focus resolved to an issue index.
struct Inputs {
  SituationTable table;
  WeightVector theta;
  WeightVector omega;
  ParamSet params;
  std::vector<Clique> cliques;
  std::optional<std::size_t> focus;
};

/// Missing cliques default to all agents; missing weight files to uniform.
Inputs load_inputs(const RunConfig& config);

}  // namespace tristrat::cli
