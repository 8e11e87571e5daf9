#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tristrat/table_io.hpp"

namespace fixtures {

struct Case {
  tristrat::SituationTable table;
  tristrat::WeightVector theta;
  tristrat::WeightVector omega;
};

inline std::filesystem::path data_dir() { return TRISTRAT_DATA_DIR; }

inline Case load(const std::string& name) {
  const auto dir = data_dir() / name;
  auto table = tristrat::load_situation_table(dir / "table.csv");
  auto theta = tristrat::load_weights(dir / "agent_weights.csv", tristrat::Axis::Agents).aligned_to(table);
  auto omega = tristrat::load_weights(dir / "issue_weights.csv", tristrat::Axis::Issues).aligned_to(table);
  return Case{std::move(table), std::move(theta), std::move(omega)};
}

inline tristrat::Rational q(const std::string& literal) { return tristrat::Rational::parse(literal); }

inline std::vector<std::string> split_ids(std::string text) {
  std::vector<std::string> ids;
  for (char& c : text) {
    if (c == '{' || c == '}') c = ' ';
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string id = text.substr(start, comma - start);
    id.erase(0, id.find_first_not_of(' '));
    id.erase(id.find_last_not_of(' ') + 1);
    if (!id.empty()) ids.push_back(id);
    start = comma + 1;
  }
  return ids;
}

/// "{t1,t4}" or "t1,t4".
inline tristrat::Strategy strategy(const tristrat::SituationTable& t, const std::string& text) {
  return t.strategy_of(split_ids(text));
}

/// "p1,p3" or "{p1,p3}".
inline tristrat::Clique clique(const tristrat::SituationTable& t, const std::string& text) {
  return t.clique_of(split_ids(text));
}

inline std::vector<std::string> format_all(const tristrat::SituationTable& t,
                                           const std::vector<tristrat::Strategy>& strategies) {
  std::vector<std::string> out;
  for (auto s : strategies) out.push_back(t.format(s));
  return out;
}

}  // namespace fixtures
