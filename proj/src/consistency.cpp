#include "tristrat/consistency.hpp"

#include <cstdlib>
#include <stdexcept>

namespace tristrat {

namespace {

Rating rate_difference(const Rational& diff, const ParamSet& params) {
  if (diff > params.mu()) return Rating::Positive;
  if (diff < params.nu()) return Rating::Negative;
  return Rating::Neutral;
}

const Rational& check_cm_range(const Rational& cm) {
  if (cm < Rational(1, 2) || cm > Rational(1)) {
    throw std::logic_error("consistency degree " + cm.to_string() + " outside [1/2, 1]");
  }
  return cm;
}

template <class Degree>
IssueTrisection trisect(std::size_t issue_count, Degree&& state_of) {
  IssueTrisection out;
  for (std::size_t t = 0; t < issue_count; ++t) {
    switch (state_of(t)) {
      case CliqueState::Alliance: out.alliance.insert(t); break;
      case CliqueState::Neutral: out.neutral.insert(t); break;
      case CliqueState::Conflict: out.conflict.insert(t); break;
    }
  }
  return out;
}

}  // namespace

const char* to_string(CliqueState state) {
  switch (state) {
    case CliqueState::Alliance: return "alliance";
    case CliqueState::Neutral: return "neutral";
    case CliqueState::Conflict: return "conflict";
  }
  return "?";
}

Rational sa_agent(const SituationTable& table, std::size_t p, std::size_t t, Sign sign) {
  table.check_agent(p);
  table.check_issue(t);
  const int r = table.value(p, t);
  return Rational(sign == Sign::Positive ? 1 + r : 1 - r, 2);
}

Rational sa_clique(const SituationTable& table, const WeightVector& theta, Clique g, std::size_t t,
                   Sign sign) {
  table.check_clique(g);
  const Rational mass = theta.mass(g);
  if (mass.is_zero()) fail(ErrorKind::ZeroMass, "clique has zero total agent weight");
  Rational sum;
  for (auto p : g.indices()) sum += theta[p] * sa_agent(table, p, t, sign);
  return sum / mass;
}

Rating overall_rating(const SituationTable& table, const WeightVector& theta, Clique g, std::size_t t,
                      const ParamSet& params) {
  const Rational diff = sa_clique(table, theta, g, t, Sign::Positive) - sa_clique(table, theta, g, t, Sign::Negative);
  return rate_difference(diff, params);
}

Rating overall_rating(const Powers& powers, const ParamSet& params) {
  return rate_difference(powers.positive - powers.negative, params);
}

Rational cm_from_powers(const Powers& powers, Rating overall) {
  const Rational half(1, 2);
  switch (overall) {
    case Rating::Positive: return powers.positive + half * powers.neutral;
    case Rating::Neutral: return half * powers.positive + powers.neutral + half * powers.negative;
    case Rating::Negative: return powers.negative + half * powers.neutral;
  }
  return {};
}

Rational cm_issue(const SituationTable& table, const WeightVector& theta, Clique g, std::size_t t,
                  const ParamSet& params) {
  const Powers pw = powers(table, theta, g, t);
  return check_cm_range(cm_from_powers(pw, overall_rating(pw, params)));
}

Rational cm_issue_definitional(const SituationTable& table, const WeightVector& theta, Clique g,
                               std::size_t t, const ParamSet& params) {
  const int overall = value_of(overall_rating(table, theta, g, t, params));
  Rational distance;
  for (auto p : g.indices()) {
    distance += conditional_weight(theta, Clique::of({p}), g) * Rational(std::abs(table.value(p, t) - overall));
  }
  return Rational(1) - Rational(1, 2) * distance;
}

Rational cm_strategy(const SituationTable& table, const WeightVector& theta, const WeightVector& omega,
                     Clique g, Strategy j, const ParamSet& params) {
  table.check_strategy(j);
  return ConsistencyProfile(table, theta, g, params).cm(omega, j);
}

CliqueState classify_clique_c(const Rational& degree, const ParamSet& params) {
  if (degree >= params.alpha_c()) return CliqueState::Alliance;
  if (degree <= params.beta_c()) return CliqueState::Conflict;
  return CliqueState::Neutral;
}

IssueTrisection issue_trisection_c(const SituationTable& table, const WeightVector& theta, Clique g,
                                   const ParamSet& params) {
  return ConsistencyProfile(table, theta, g, params).trisection(params);
}

ConsistencyProfile::ConsistencyProfile(const SituationTable& table, const WeightVector& theta, Clique g,
                                       const ParamSet& params)
    : clique_(g) {
  table.check_clique(g);
  const std::size_t n = table.issue_count();
  powers_.reserve(n);
  ratings_.reserve(n);
  degrees_.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    powers_.push_back(tristrat::powers(table, theta, g, t));
    ratings_.push_back(overall_rating(powers_.back(), params));
    degrees_.push_back(check_cm_range(cm_from_powers(powers_.back(), ratings_.back())));
  }
}

Rational ConsistencyProfile::cm(const WeightVector& omega, Strategy j) const {
  return check_cm_range(issue_average(omega, j, degrees_));
}

IssueTrisection ConsistencyProfile::trisection(const ParamSet& params) const {
  return trisect(degrees_.size(), [&](std::size_t t) { return classify_clique_c(degrees_[t], params); });
}

}  // namespace tristrat
