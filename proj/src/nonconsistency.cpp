#include "tristrat/nonconsistency.hpp"

#include <cstdlib>

namespace tristrat {

namespace {

// Returns (θ(p|pq), θ(q|pq)).
std::pair<Rational, Rational> pair_shares(const WeightVector& theta, std::size_t p, std::size_t q) {
  const Clique pq = Clique::of({p, q});
  if (theta.mass(pq).is_zero()) fail(ErrorKind::ZeroMass, "agent pair has zero total weight");
  if (p == q) return {Rational(1), Rational(1)};
  return {conditional_weight(theta, Clique::of({p}), pq), conditional_weight(theta, Clique::of({q}), pq)};
}

Rational rating_gap(const SituationTable& table, std::size_t p, std::size_t q, std::size_t t) {
  table.check_agent(p);
  table.check_agent(q);
  table.check_issue(t);
  return Rational(std::abs(table.value(p, t) - table.value(q, t)));
}

Rational pair_sum(std::size_t clique_size, const std::vector<std::size_t>& members, auto&& degree) {
  Rational sum;
  for (auto p : members) {
    for (auto q : members) sum += degree(p, q);
  }
  return sum / Rational(static_cast<std::int64_t>(clique_size * clique_size));
}

}  // namespace

Rational pair_conflict(const SituationTable& table, const WeightVector& theta, std::size_t p,
                       std::size_t q, std::size_t t) {
  const Rational gap = rating_gap(table, p, q, t);
  const auto [sp, sq] = pair_shares(theta, p, q);
  if (gap.is_zero()) return gap;
  return gap * min(sp, sq);
}

Rational pair_conflict_definitional(const SituationTable& table, const WeightVector& theta,
                                    std::size_t p, std::size_t q, std::size_t t) {
  const Rational gap = rating_gap(table, p, q, t);
  const auto [sp, sq] = pair_shares(theta, p, q);
  return gap * (Rational(1) - abs(sp - sq)) / Rational(2);
}

Rational pair_conflict_set(const SituationTable& table, const WeightVector& theta,
                           const WeightVector& omega, std::size_t p, std::size_t q, Strategy j) {
  table.check_strategy(j);
  std::vector<Rational> per_issue(table.issue_count());
  for (auto t : j.indices()) per_issue[t] = pair_conflict(table, theta, p, q, t);
  return issue_average(omega, j, per_issue);
}

PairConflictMatrix::PairConflictMatrix(std::size_t size, std::optional<std::size_t> issue, Strategy strategy)
    : size_(size), issue_(issue), strategy_(strategy), entries_(size * size) {}

PairConflictMatrix PairConflictMatrix::for_issue(const SituationTable& table, const WeightVector& theta,
                                                 std::size_t t) {
  table.check_issue(t);
  PairConflictMatrix m(table.agent_count(), t, Strategy::of({t}));
  for (std::size_t p = 0; p < m.size_; ++p) {
    for (std::size_t q = p; q < m.size_; ++q) {
      m.entries_[p * m.size_ + q] = pair_conflict(table, theta, p, q, t);
      m.entries_[q * m.size_ + p] = m.entries_[p * m.size_ + q];
    }
  }
  return m;
}

PairConflictMatrix PairConflictMatrix::for_strategy(const SituationTable& table, const WeightVector& theta,
                                                    const WeightVector& omega, Strategy j) {
  table.check_strategy(j);
  PairConflictMatrix m(table.agent_count(), std::nullopt, j);
  for (std::size_t p = 0; p < m.size_; ++p) {
    for (std::size_t q = p; q < m.size_; ++q) {
      m.entries_[p * m.size_ + q] = pair_conflict_set(table, theta, omega, p, q, j);
      m.entries_[q * m.size_ + p] = m.entries_[p * m.size_ + q];
    }
  }
  return m;
}

PairTrisection pair_trisection(const PairConflictMatrix& matrix, const Rational& alpha_pair,
                               const Rational& beta_pair) {
  if (beta_pair.sign() < 0 || beta_pair > alpha_pair || alpha_pair > Rational(1)) {
    fail(ErrorKind::Validation, "parameter out of range: need 0 <= beta_pair <= alpha_pair <= 1");
  }
  PairTrisection out;
  for (std::size_t p = 0; p < matrix.size(); ++p) {
    for (std::size_t q = p; q < matrix.size(); ++q) {
      const Rational& d = matrix.at(p, q);
      if (d <= beta_pair) {
        out.alliance.push_back({p, q});
      } else if (d >= alpha_pair) {
        out.conflict.push_back({p, q});
      } else {
        out.neutral.push_back({p, q});
      }
    }
  }
  return out;
}

Rational nm_issue(const SituationTable& table, const WeightVector& theta, Clique g, std::size_t t) {
  table.check_clique(g);
  return pair_sum(g.size(), g.indices(), [&](std::size_t p, std::size_t q) { return pair_conflict(table, theta, p, q, t); });
}

Rational nm_strategy(const SituationTable& table, const WeightVector& theta, const WeightVector& omega,
                     Clique g, Strategy j) {
  table.check_strategy(j);
  return NonConsistencyProfile(table, theta, g).nm(omega, j);
}

Rational nm_strategy_pairwise(const SituationTable& table, const WeightVector& theta,
                              const WeightVector& omega, Clique g, Strategy j) {
  table.check_clique(g);
  table.check_strategy(j);
  return pair_sum(g.size(), g.indices(),
                  [&](std::size_t p, std::size_t q) { return pair_conflict_set(table, theta, omega, p, q, j); });
}

CliqueState classify_clique_n(const Rational& degree, const ParamSet& params) {
  if (degree <= params.beta_n()) return CliqueState::Alliance;
  if (degree >= params.alpha_n()) return CliqueState::Conflict;
  return CliqueState::Neutral;
}

IssueTrisection issue_trisection_n(const SituationTable& table, const WeightVector& theta, Clique g,
                                   const ParamSet& params) {
  return NonConsistencyProfile(table, theta, g).trisection(params);
}

NonConsistencyProfile::NonConsistencyProfile(const SituationTable& table, const WeightVector& theta, Clique g)
    : clique_(g) {
  table.check_clique(g);
  degrees_.reserve(table.issue_count());
  for (std::size_t t = 0; t < table.issue_count(); ++t) degrees_.push_back(nm_issue(table, theta, g, t));
}

Rational NonConsistencyProfile::nm(const WeightVector& omega, Strategy j) const {
  return issue_average(omega, j, degrees_);
}

IssueTrisection NonConsistencyProfile::trisection(const ParamSet& params) const {
  IssueTrisection out;
  for (std::size_t t = 0; t < degrees_.size(); ++t) {
    switch (classify_clique_n(degrees_[t], params)) {
      case CliqueState::Alliance: out.alliance.insert(t); break;
      case CliqueState::Neutral: out.neutral.insert(t); break;
      case CliqueState::Conflict: out.conflict.insert(t); break;
    }
  }
  return out;
}

}  // namespace tristrat
