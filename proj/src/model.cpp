#include "tristrat/model.hpp"

#include <algorithm>
#include <unordered_set>

namespace tristrat {

Rating rating_from_int(int value) {
  switch (value) {
    case -1: return Rating::Negative;
    case 0: return Rating::Neutral;
    case 1: return Rating::Positive;
    default: fail(ErrorKind::Validation, "rating must be -1, 0 or +1, got " + std::to_string(value));
  }
}

char to_symbol(Rating r) {
  switch (r) {
    case Rating::Negative: return '-';
    case Rating::Neutral: return '0';
    case Rating::Positive: return '+';
  }
  return '?';
}

const char* to_string(Axis axis) { return axis == Axis::Agents ? "agents" : "issues"; }

namespace {

void check_ids(const std::vector<std::string>& ids, const char* what) {
  if (ids.empty()) fail(ErrorKind::Validation, std::string("no ") + what);
  if (ids.size() > kMaxAxisSize) {
    fail(ErrorKind::Capacity, std::string("more than 64 ") + what + " are not supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& id : ids) {
    if (id.empty()) fail(ErrorKind::Validation, std::string("empty identifier among ") + what);
    if (!seen.insert(id).second) {
      fail(ErrorKind::Validation, std::string("duplicate identifier '") + id + "' among " + what);
    }
  }
}

std::optional<std::size_t> find_id(const std::vector<std::string>& ids, std::string_view id) {
  auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ids.begin());
}

template <Axis A>
std::string format_set(IndexSet<A> s, const std::vector<std::string>& ids) {
  std::string out = "{";
  bool first = true;
  for (auto i : s.indices()) {
    if (!first) out += ',';
    out += ids[i];
    first = false;
  }
  return out + "}";
}

}  // namespace

SituationTable::SituationTable(std::vector<std::string> agents, std::vector<std::string> issues,
                               std::vector<Rating> ratings)
    : agents_(std::move(agents)), issues_(std::move(issues)), ratings_(std::move(ratings)) {
  check_ids(agents_, "agents");
  check_ids(issues_, "issues");
  if (ratings_.size() != agents_.size() * issues_.size()) {
    fail(ErrorKind::Validation, "rating matrix does not match agents x issues");
  }
  for (Rating r : ratings_) rating_from_int(value_of(r));
}

std::optional<std::size_t> SituationTable::find_agent(std::string_view id) const {
  return find_id(agents_, id);
}

std::optional<std::size_t> SituationTable::find_issue(std::string_view id) const {
  return find_id(issues_, id);
}

std::size_t SituationTable::agent_index(std::string_view id) const {
  auto i = find_agent(id);
  if (!i) fail(ErrorKind::Validation, "unknown agent '" + std::string(id) + "'");
  return *i;
}

std::size_t SituationTable::issue_index(std::string_view id) const {
  auto i = find_issue(id);
  if (!i) fail(ErrorKind::Validation, "unknown issue '" + std::string(id) + "'");
  return *i;
}

Clique SituationTable::clique_of(const std::vector<std::string>& ids) const {
  Clique g;
  for (const auto& id : ids) {
    auto i = agent_index(id);
    if (g.contains(i)) fail(ErrorKind::Validation, "agent '" + id + "' listed twice");
    g.insert(i);
  }
  return g;
}

Strategy SituationTable::strategy_of(const std::vector<std::string>& ids) const {
  Strategy j;
  for (const auto& id : ids) {
    auto i = issue_index(id);
    if (j.contains(i)) fail(ErrorKind::Validation, "issue '" + id + "' listed twice");
    j.insert(i);
  }
  return j;
}

void SituationTable::check_agent(std::size_t index) const {
  if (index >= agent_count()) fail(ErrorKind::Validation, "agent index out of range");
}

void SituationTable::check_issue(std::size_t index) const {
  if (index >= issue_count()) fail(ErrorKind::Validation, "issue index out of range");
}

void SituationTable::check_clique(Clique g) const {
  if (g.empty()) fail(ErrorKind::EmptySet, "clique is empty");
  if (!g.is_subset_of(all_agents())) fail(ErrorKind::Validation, "clique references unknown agents");
}

void SituationTable::check_strategy(Strategy j) const {
  if (j.empty()) fail(ErrorKind::EmptySet, "strategy is empty");
  if (!j.is_subset_of(all_issues())) fail(ErrorKind::Validation, "strategy references unknown issues");
}

std::string SituationTable::format(Clique g) const { return format_set(g, agents_); }
std::string SituationTable::format(Strategy j) const { return format_set(j, issues_); }

WeightVector::WeightVector(Axis axis, std::vector<std::string> ids, std::vector<Rational> weights)
    : axis_(axis), ids_(std::move(ids)), weights_(std::move(weights)) {
  check_ids(ids_, to_string(axis_));
  if (ids_.size() != weights_.size()) fail(ErrorKind::Validation, "weight count does not match ids");
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i].sign() < 0) {
      fail(ErrorKind::Validation, "negative weight for '" + ids_[i] + "'");
    }
    total_ += weights_[i];
  }
  if (total_.is_zero()) fail(ErrorKind::Validation, "weights sum to zero");
}

WeightVector WeightVector::uniform(Axis axis, std::vector<std::string> ids) {
  std::vector<Rational> ones(ids.size(), Rational(1));
  return WeightVector(axis, std::move(ids), std::move(ones));
}

WeightVector WeightVector::aligned_to(const SituationTable& table) const {
  const auto& expected = axis_ == Axis::Agents ? table.agents() : table.issues();
  for (const auto& id : ids_) {
    if (!find_id(expected, id)) {
      fail(ErrorKind::Validation, "weight given for unknown " + std::string(to_string(axis_)) +
                                      " id '" + id + "'");
    }
  }
  std::vector<Rational> ordered;
  ordered.reserve(expected.size());
  for (const auto& id : expected) {
    auto i = find_id(ids_, id);
    if (!i) fail(ErrorKind::Validation, "missing weight for '" + id + "'");
    ordered.push_back(weights_[*i]);
  }
  return WeightVector(axis_, expected, std::move(ordered));
}

void WeightVector::check_axis(Axis a) const {
  if (a != axis_) {
    fail(ErrorKind::Usage, std::string("weight vector over ") + to_string(axis_) +
                               " used for a subset of " + to_string(a));
  }
}

const Rational& WeightVector::at(std::size_t i) const {
  if (i >= weights_.size()) fail(ErrorKind::Validation, "subset index beyond weight vector");
  return weights_[i];
}

Rational issue_average(const WeightVector& omega, Strategy j, const std::vector<Rational>& per_issue) {
  if (j.empty()) fail(ErrorKind::EmptySet, "strategy is empty");
  if (j.extent() > per_issue.size()) fail(ErrorKind::Validation, "strategy references unknown issues");
  const Rational mass = omega.mass(j);
  if (mass.is_zero()) fail(ErrorKind::ZeroMass, "strategy has zero total issue weight");
  Rational sum;
  for (auto t : j.indices()) sum += omega[t] * per_issue[t];
  return sum / mass;
}

Coalitions coalitions(const SituationTable& table, Clique g, std::size_t issue) {
  table.check_clique(g);
  table.check_issue(issue);
  Coalitions out;
  for (auto p : g.indices()) {
    switch (table.rating(p, issue)) {
      case Rating::Positive: out.positive.insert(p); break;
      case Rating::Neutral: out.neutral.insert(p); break;
      case Rating::Negative: out.negative.insert(p); break;
    }
  }
  return out;
}

Powers powers(const SituationTable& table, const WeightVector& theta, Clique g, std::size_t issue) {
  const Coalitions c = coalitions(table, g, issue);
  return Powers{conditional_weight(theta, c.positive, g), conditional_weight(theta, c.neutral, g),
                conditional_weight(theta, c.negative, g)};
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::Validation, "parameter out of range: " + what);
}

}  // namespace

ParamSet::ParamSet(ParamValues values) : v_(std::move(values)) {
  const Rational zero(0), one(1), half(1, 2), minus_one(-1);
  require(zero <= v_.mu && v_.mu <= one, "mu must lie in [0,1]");
  require(minus_one <= v_.nu && v_.nu <= zero, "nu must lie in [-1,0]");
  require(half <= v_.lambda && v_.lambda <= one, "lambda must lie in [0.5,1]");
  require(zero <= v_.tau && v_.tau <= half, "tau must lie in [0,0.5]");
  require(zero <= v_.gamma_p && v_.gamma_p <= one, "gamma_p must lie in [0,1]");
  require(zero <= v_.gamma_t && v_.gamma_t <= one, "gamma_t must lie in [0,1]");
  require(v_.order >= 1, "order must be at least 1");
  require(half <= v_.beta_c && v_.beta_c <= v_.alpha_c && v_.alpha_c <= one,
          "need 0.5 <= beta_c <= alpha_c <= 1");
  require(zero <= v_.beta_n && v_.beta_n <= v_.alpha_n && v_.alpha_n <= one,
          "need 0 <= beta_n <= alpha_n <= 1");
  require(zero <= v_.beta_pair && v_.beta_pair <= v_.alpha_pair && v_.alpha_pair <= one,
          "need 0 <= beta_pair <= alpha_pair <= 1");
}

void ParamSet::check_order(std::size_t issue_count) const {
  if (static_cast<std::size_t>(v_.order) > issue_count) {
    fail(ErrorKind::Validation, "order " + std::to_string(v_.order) + " exceeds the " +
                                    std::to_string(issue_count) + " issues");
  }
}

}  // namespace tristrat
