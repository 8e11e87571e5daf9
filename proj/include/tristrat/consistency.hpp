#pragma once

#include <string>
#include <vector>

#include "tristrat/model.hpp"

namespace tristrat {

enum class Sign { Positive, Negative };

enum class CliqueState { Alliance, Neutral, Conflict };

const char* to_string(CliqueState state);

/// Alliance / neutral / conflict split of the issues. The parts are
/// disjoint and cover every issue; any of them may be empty.
struct IssueTrisection {
  Strategy alliance;
  Strategy neutral;
  Strategy conflict;
};

/// Similarity of agent `p` to the positive or negative ideal agent on `t`:
/// (1 ± r(p,t)) / 2.
Rational sa_agent(const SituationTable& table, std::size_t p, std::size_t t, Sign sign);

/// θ-weighted mean of sa_agent over the clique.
Rational sa_clique(const SituationTable& table, const WeightVector& theta, Clique g, std::size_t t,
                   Sign sign);

/// Overall rating from the similarity difference SA⁺ − SA⁻ against the
/// closed neutral band [ν, μ].
Rating overall_rating(const SituationTable& table, const WeightVector& theta, Clique g, std::size_t t,
                      const ParamSet& params);

/// Same rating computed from the power difference ρ⁺ − ρ⁻.
Rating overall_rating(const Powers& powers, const ParamSet& params);

/// Closed form of the single-issue consistency degree, read off the powers.
Rational cm_from_powers(const Powers& powers, Rating overall);

/// Single-issue consistency degree via the power closed form. Always in [1/2, 1].
Rational cm_issue(const SituationTable& table, const WeightVector& theta, Clique g, std::size_t t,
                  const ParamSet& params);

/// Single-issue consistency degree as 1 − ½·Σ θ(p|G)·|r(p,t) − R(G,t)|.
Rational cm_issue_definitional(const SituationTable& table, const WeightVector& theta, Clique g,
                               std::size_t t, const ParamSet& params);

Rational cm_strategy(const SituationTable& table, const WeightVector& theta, const WeightVector& omega,
                     Clique g, Strategy j, const ParamSet& params);

/// Alliance iff degree ≥ α_c, conflict iff degree ≤ β_c.
CliqueState classify_clique_c(const Rational& degree, const ParamSet& params);

IssueTrisection issue_trisection_c(const SituationTable& table, const WeightVector& theta, Clique g,
                                   const ParamSet& params);

/// Per-issue powers, overall ratings and consistency degrees for one clique
/// under one parameter set. Computed once, then reused for every strategy.
class ConsistencyProfile {
 public:
  ConsistencyProfile(const SituationTable& table, const WeightVector& theta, Clique g,
                     const ParamSet& params);

  Clique clique() const { return clique_; }
  const std::vector<Powers>& powers() const { return powers_; }
  /// Overall rating per issue (the clique's rating vector).
  const std::vector<Rating>& ratings() const { return ratings_; }
  const std::vector<Rational>& degrees() const { return degrees_; }

  Rational cm(const WeightVector& omega, Strategy j) const;
  IssueTrisection trisection(const ParamSet& params) const;

 private:
  Clique clique_;
  std::vector<Powers> powers_;
  std::vector<Rating> ratings_;
  std::vector<Rational> degrees_;
};

}  // namespace tristrat
