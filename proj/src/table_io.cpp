#include "tristrat/table_io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace tristrat {

namespace {

std::string trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    auto comma = line.find(',', start);
    cells.push_back(trim(std::string_view(line).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return cells;
}

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (number == 1 && raw.rfind("\xEF\xBB\xBF", 0) == 0) raw.erase(0, 3);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (trim(raw).empty()) continue;
    lines.push_back({number, raw});
  }
  return lines;
}

[[noreturn]] void parse_error(const std::string& source, std::size_t line, std::size_t column,
                              const std::string& message) {
  std::ostringstream os;
  os << source << ":" << line;
  if (column > 0) os << ": column " << column;
  os << ": " << message;
  fail(ErrorKind::Parse, os.str());
}

std::optional<Rating> parse_rating(const std::string& token) {
  if (token == "+" || token == "+1" || token == "1") return Rating::Positive;
  if (token == "0") return Rating::Neutral;
  if (token == "-" || token == "-1" || token == "\xE2\x88\x92" || token == "\xE2\x88\x92" "1") {
    return Rating::Negative;
  }
  return std::nullopt;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Validation, "cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

SituationTable load_situation_table(std::istream& in, const std::string& source_name) {
  const auto lines = read_lines(in);
  if (lines.empty()) fail(ErrorKind::Parse, source_name + ": empty table");

  const auto header = split_csv(lines.front().text);
  if (header.size() < 2) {
    parse_error(source_name, lines.front().number, 0, "header needs an agent column and at least one issue");
  }
  std::vector<std::string> issues(header.begin() + 1, header.end());
  for (std::size_t c = 0; c < issues.size(); ++c) {
    if (issues[c].empty()) parse_error(source_name, lines.front().number, c + 2, "empty issue id");
    for (std::size_t k = 0; k < c; ++k) {
      if (issues[k] == issues[c]) {
        parse_error(source_name, lines.front().number, c + 2, "duplicate issue id '" + issues[c] + "'");
      }
    }
  }

  std::vector<std::string> agents;
  std::vector<Rating> ratings;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto& line = lines[r];
    const auto cells = split_csv(line.text);
    if (cells.size() != header.size()) {
      parse_error(source_name, line.number, 0,
                  "row has " + std::to_string(cells.size()) + " cells, header has " +
                      std::to_string(header.size()));
    }
    if (cells[0].empty()) parse_error(source_name, line.number, 1, "empty agent id");
    for (const auto& seen : agents) {
      if (seen == cells[0]) parse_error(source_name, line.number, 1, "duplicate agent id '" + cells[0] + "'");
    }
    agents.push_back(cells[0]);
    for (std::size_t c = 1; c < cells.size(); ++c) {
      auto rating = parse_rating(cells[c]);
      if (!rating) parse_error(source_name, line.number, c + 1, "unknown rating token '" + cells[c] + "'");
      ratings.push_back(*rating);
    }
  }
  if (agents.empty()) fail(ErrorKind::Parse, source_name + ": table has no agent rows");
  return SituationTable(std::move(agents), std::move(issues), std::move(ratings));
}

WeightVector load_weights(std::istream& in, Axis axis, const std::string& source_name) {
  const auto lines = read_lines(in);
  std::vector<std::string> ids;
  std::vector<Rational> weights;
  for (std::size_t r = 0; r < lines.size(); ++r) {
    const auto cells = split_csv(lines[r].text);
    if (cells.size() != 2) parse_error(source_name, lines[r].number, 0, "expected 'id,weight'");
    if (r == 0 && cells[0] == "id" && cells[1] == "weight") continue;
    if (cells[0].empty()) parse_error(source_name, lines[r].number, 1, "empty id");
    Rational w;
    try {
      w = Rational::parse(cells[1]);
    } catch (const Error& e) {
      parse_error(source_name, lines[r].number, 2, e.what());
    }
    if (w.sign() < 0) {
      fail(ErrorKind::Validation, source_name + ":" + std::to_string(lines[r].number) +
                                      ": negative weight for '" + cells[0] + "'");
    }
    ids.push_back(cells[0]);
    weights.push_back(std::move(w));
  }
  if (ids.empty()) fail(ErrorKind::Validation, source_name + ": no weights");
  try {
    return WeightVector(axis, std::move(ids), std::move(weights));
  } catch (const Error& e) {
    throw Error(e.kind(), source_name + ": " + e.what());
  }
}

SituationTable load_situation_table(const std::filesystem::path& path) {
  auto in = open(path);
  return load_situation_table(in, path.string());
}

WeightVector load_weights(const std::filesystem::path& path, Axis axis) {
  auto in = open(path);
  return load_weights(in, axis, path.string());
}

std::string serialize_table(const SituationTable& table) {
  std::string out = "agent";
  for (const auto& issue : table.issues()) out += "," + issue;
  out += '\n';
  for (std::size_t p = 0; p < table.agent_count(); ++p) {
    out += table.agents()[p];
    for (std::size_t t = 0; t < table.issue_count(); ++t) {
      out += ',';
      out += to_symbol(table.rating(p, t));
    }
    out += '\n';
  }
  return out;
}

std::string serialize_weights(const WeightVector& weights) {
  std::string out;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    out += weights.ids()[i] + "," + weights[i].to_string() + "\n";
  }
  return out;
}

}  // namespace tristrat
