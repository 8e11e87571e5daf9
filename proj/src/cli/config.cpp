#include "tristrat/cli/config.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "tristrat/table_io.hpp"

namespace tristrat::cli {

namespace {

std::string trim(const std::string& s) {
  const char* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

[[noreturn]] void config_error(const std::string& source, std::size_t line, const std::string& message) {
  fail(ErrorKind::Parse, source + ":" + std::to_string(line) + ": " + message);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) fail(ErrorKind::Parse, "expected an integer, got '" + text + "'");
  return value;
}

std::optional<SweepParam> sweep_param(const std::string& name) {
  if (name == "mu") return SweepParam::Mu;
  if (name == "nu") return SweepParam::Nu;
  if (name == "lambda") return SweepParam::Lambda;
  if (name == "tau") return SweepParam::Tau;
  return std::nullopt;
}

Rational* param_slot(ParamValues& v, const std::string& key) {
  if (key == "mu") return &v.mu;
  if (key == "nu") return &v.nu;
  if (key == "lambda") return &v.lambda;
  if (key == "tau") return &v.tau;
  if (key == "gamma_p") return &v.gamma_p;
  if (key == "gamma_t") return &v.gamma_t;
  if (key == "alpha_c") return &v.alpha_c;
  if (key == "beta_c") return &v.beta_c;
  if (key == "alpha_n") return &v.alpha_n;
  if (key == "beta_n") return &v.beta_n;
  if (key == "alpha_pair") return &v.alpha_pair;
  if (key == "beta_pair") return &v.beta_pair;
  return nullptr;
}

}  // namespace

MeasureKind parse_kind(const std::string& text) {
  if (text == "c") return MeasureKind::Consistency;
  if (text == "n") return MeasureKind::NonConsistency;
  fail(ErrorKind::Usage, "kind must be 'c' or 'n', got '" + text + "'");
}

SweepAxis parse_axis(SweepParam param, const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3) {
    fail(ErrorKind::Parse, std::string("sweep.") + to_string(param) + " needs start:stop:step, got '" + spec + "'");
  }
  SweepAxis axis{param, Rational::parse(parts[0]), Rational::parse(parts[1]), Rational::parse(parts[2])};
  axis.points();
  return axis;
}

RunConfig parse_config(std::istream& in, const std::filesystem::path& base_dir, const std::string& source_name) {
  RunConfig config;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) config_error(source_name, number, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (value.empty()) config_error(source_name, number, "empty value for '" + key + "'");
    try {
      if (key == "table") {
        config.table = base_dir / value;
      } else if (key == "agent_weights") {
        config.agent_weights = base_dir / value;
      } else if (key == "issue_weights") {
        config.issue_weights = base_dir / value;
      } else if (key == "clique") {
        config.cliques.push_back(value);
      } else if (key == "focus") {
        config.focus = value;
      } else if (key == "kind") {
        config.kind = parse_kind(value);
      } else if (key == "order") {
        config.values.order = parse_int(value);
      } else if (key.rfind("sweep.", 0) == 0) {
        const auto param = sweep_param(key.substr(6));
        if (!param) config_error(source_name, number, "unknown sweep parameter '" + key + "'");
        config.sweeps.insert_or_assign(*param, parse_axis(*param, value));
      } else if (Rational* slot = param_slot(config.values, key)) {
        *slot = Rational::parse(value);
      } else {
        config_error(source_name, number, "unknown key '" + key + "'");
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Parse && std::string(e.what()).rfind(source_name + ":", 0) == 0) throw;
      throw Error(e.kind(), source_name + ":" + std::to_string(number) + ": " + e.what());
    }
  }
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Validation, "cannot open '" + path.string() + "'");
  return parse_config(in, path.parent_path(), path.string());
}

Inputs load_inputs(const RunConfig& config) {
  if (!config.table) fail(ErrorKind::Usage, "no table given (use --table or 'table =' in the config)");
  SituationTable table = load_situation_table(*config.table);
  WeightVector theta = config.agent_weights
                           ? load_weights(*config.agent_weights, Axis::Agents).aligned_to(table)
                           : WeightVector::uniform(Axis::Agents, table.agents());
  WeightVector omega = config.issue_weights
                           ? load_weights(*config.issue_weights, Axis::Issues).aligned_to(table)
                           : WeightVector::uniform(Axis::Issues, table.issues());
  ParamSet params(config.values);
  params.check_order(table.issue_count());

  std::vector<Clique> cliques;
  for (const auto& spec : config.cliques) {
    std::vector<std::string> ids;
    for (auto& id : split(spec, ',')) {
      if (!id.empty()) ids.push_back(id);
    }
    const Clique g = table.clique_of(ids);
    if (g.empty()) fail(ErrorKind::Validation, "clique '" + spec + "' is empty");
    cliques.push_back(g);
  }
  if (cliques.empty()) cliques.push_back(table.all_agents());

  std::optional<std::size_t> focus;
  if (config.focus) {
    const Strategy s = table.strategy_of({*config.focus});
    focus = s.indices().front();
  }
  return Inputs{std::move(table), std::move(theta), std::move(omega), std::move(params), std::move(cliques), focus};
}

}  // namespace tristrat::cli
