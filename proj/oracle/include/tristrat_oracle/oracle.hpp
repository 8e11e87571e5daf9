#pragma once

#include <string>
#include <vector>

#include "tristrat/model.hpp"

// Naive transcriptions of the measures for cross-checking the engine. Every
// call recomputes from raw weights and ratings; nothing is cached and no
// closed form is used.
namespace tristrat::oracle {

/// Largest issue count the oracle will enumerate.
inline constexpr std::size_t kMaxOracleIssues = 12;

enum class Kind { Consistency, NonConsistency };

/// 1 − |r(p,t) − r(ideal,t)| / 2 with the ideal agent rating ±1 everywhere.
Rational oracle_sa_agent(const SituationTable& table, std::size_t p, std::size_t t, int ideal);

Rating oracle_rating(const SituationTable& table, const WeightVector& theta, Clique g, std::size_t t,
                     const ParamSet& params);

Rational oracle_cm_issue(const SituationTable& table, const WeightVector& theta, Clique g, std::size_t t,
                         const ParamSet& params);

Rational oracle_cm(const SituationTable& table, const WeightVector& theta, const WeightVector& omega,
                   Clique g, Strategy j, const ParamSet& params);

/// |r(p,t) − r(q,t)| · (1 − |θ(p)/(θ(p)+θ(q)) − θ(q)/(θ(p)+θ(q))|) / 2.
Rational oracle_ca(const SituationTable& table, const WeightVector& theta, std::size_t p, std::size_t q,
                   std::size_t t);

Rational oracle_nm_issue(const SituationTable& table, const WeightVector& theta, Clique g, std::size_t t);

Rational oracle_nm(const SituationTable& table, const WeightVector& theta, const WeightVector& omega,
                   Clique g, Strategy j);

/// Strategies passing the kind's threshold, in canonical order. Gate error
/// when the clique fails γ_P.
std::vector<Strategy> oracle_feasible(const SituationTable& table, const WeightVector& theta,
                                      const WeightVector& omega, Clique g, const ParamSet& params, Kind kind);

/// Extremal members of oracle_feasible restricted by γ_T (and by `order`
/// when positive).
std::vector<Strategy> oracle_optimal(const SituationTable& table, const WeightVector& theta,
                                     const WeightVector& omega, Clique g, const ParamSet& params, Kind kind,
                                     int order = 0);

struct OracleSelection {
  std::vector<Strategy> feasible;
  std::vector<Strategy> optimal;
  /// Empty unless an order was requested.
  std::vector<Strategy> optimal_order;
};

/// oracle_feasible and both oracle_optimal variants from one enumeration;
/// `order` ≤ 0 skips the L-order set.
OracleSelection oracle_select(const SituationTable& table, const WeightVector& theta, const WeightVector& omega,
                              Clique g, const ParamSet& params, Kind kind, int order);

struct OracleReport {
  std::string quantity;
  Rational engine;
  Rational oracle;
  bool equal;
};

OracleReport compare(std::string quantity, const Rational& engine, const Rational& oracle);

}  // namespace tristrat::oracle
