#pragma once

#include <optional>
#include <vector>

#include "tristrat/consistency.hpp"
#include "tristrat/model.hpp"

namespace tristrat {

/// Unweighted similarity to an ideal agent: 1 − Σ|r(p,t) − r(p±,t)| / (2·#G).
Rational xu_similarity(const SituationTable& table, Clique g, std::size_t t, Sign sign);

/// Sign of 𝕊⁺ − 𝕊⁻.
Rating xu_rating(const SituationTable& table, Clique g, std::size_t t);

/// 1 − Σ|r(p,t) − R^Xu(G,t)| / (2·#G).
Rational xu_cm(const SituationTable& table, Clique g, std::size_t t);

/// Unweighted mean of the per-issue degrees over `j`.
Rational xu_cm(const SituationTable& table, Clique g, Strategy j);

/// Issues by descending degree; equal degrees keep ascending issue index.
struct XuRanking {
  Clique clique;
  std::vector<std::size_t> issues;
  std::vector<Rational> degrees;
};

XuRanking xu_ranking(const SituationTable& table, Clique g);

struct XuDominant {
  Strategy strategy;
  Rational degree;
  /// Issues outside the chosen top-L that tie with its last-ranked degree;
  /// swapping any of them in gives another valid top-L set with the same degree.
  Strategy alternates;
};

/// Top-L issues of the ranking when their mean degree is at least λ. Gate
/// error when the clique fails γ_P.
std::optional<XuDominant> xu_feasible_L(const SituationTable& table, Clique g, const ParamSet& params);

}  // namespace tristrat
