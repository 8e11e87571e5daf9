#pragma once

#include <optional>
#include <vector>

#include "tristrat/consistency.hpp"
#include "tristrat/model.hpp"

namespace tristrat {

/// Weighted conflict degree between two agents on one issue:
/// |r(p,t) − r(q,t)| · min(θ(p|pq), θ(q|pq)). Zero-mass error when both
/// agents weigh nothing.
Rational pair_conflict(const SituationTable& table, const WeightVector& theta, std::size_t p,
                       std::size_t q, std::size_t t);

/// Same degree as |r(p,t) − r(q,t)| · (1 − |θ(p|pq) − θ(q|pq)|) / 2.
Rational pair_conflict_definitional(const SituationTable& table, const WeightVector& theta,
                                    std::size_t p, std::size_t q, std::size_t t);

/// ω-weighted mean of pair_conflict over the issues of `j`.
Rational pair_conflict_set(const SituationTable& table, const WeightVector& theta,
                           const WeightVector& omega, std::size_t p, std::size_t q, Strategy j);

/// Symmetric m×m conflict degrees over all agents, for one issue or one strategy.
class PairConflictMatrix {
 public:
  static PairConflictMatrix for_issue(const SituationTable& table, const WeightVector& theta,
                                      std::size_t t);
  static PairConflictMatrix for_strategy(const SituationTable& table, const WeightVector& theta,
                                         const WeightVector& omega, Strategy j);

  std::size_t size() const { return size_; }
  const std::optional<std::size_t>& issue() const { return issue_; }
  Strategy strategy() const { return strategy_; }
  const Rational& at(std::size_t p, std::size_t q) const { return entries_[p * size_ + q]; }

 private:
  PairConflictMatrix(std::size_t size, std::optional<std::size_t> issue, Strategy strategy);

  std::size_t size_;
  std::optional<std::size_t> issue_;
  Strategy strategy_;
  std::vector<Rational> entries_;
};

/// Unordered agent pair with first ≤ second; reflexive pairs included.
struct AgentPair {
  std::size_t first;
  std::size_t second;

  friend bool operator==(const AgentPair&, const AgentPair&) = default;
};

/// Alliance iff degree ≤ β_pair, conflict iff degree ≥ α_pair.
struct PairTrisection {
  std::vector<AgentPair> alliance;
  std::vector<AgentPair> neutral;
  std::vector<AgentPair> conflict;
};

PairTrisection pair_trisection(const PairConflictMatrix& matrix, const Rational& alpha_pair,
                               const Rational& beta_pair);

/// Mean of pair_conflict over the ordered pairs of G×G, diagonal included.
Rational nm_issue(const SituationTable& table, const WeightVector& theta, Clique g, std::size_t t);

/// ω-weighted mean of nm_issue over `j`.
Rational nm_strategy(const SituationTable& table, const WeightVector& theta, const WeightVector& omega,
                     Clique g, Strategy j);

/// Mean of pair_conflict_set over the ordered pairs of G×G.
Rational nm_strategy_pairwise(const SituationTable& table, const WeightVector& theta,
                              const WeightVector& omega, Clique g, Strategy j);

/// Alliance iff degree ≤ β_n, conflict iff degree ≥ α_n.
CliqueState classify_clique_n(const Rational& degree, const ParamSet& params);

IssueTrisection issue_trisection_n(const SituationTable& table, const WeightVector& theta, Clique g,
                                   const ParamSet& params);

/// Per-issue non-consistency degrees for one clique.
class NonConsistencyProfile {
 public:
  NonConsistencyProfile(const SituationTable& table, const WeightVector& theta, Clique g);

  Clique clique() const { return clique_; }
  const std::vector<Rational>& degrees() const { return degrees_; }

  Rational nm(const WeightVector& omega, Strategy j) const;
  IssueTrisection trisection(const ParamSet& params) const;

 private:
  Clique clique_;
  std::vector<Rational> degrees_;
};

}  // namespace tristrat
