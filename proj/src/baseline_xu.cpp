#include "tristrat/baseline_xu.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "tristrat/strategy.hpp"

namespace tristrat {

namespace {

Rational one_minus_mean_distance(const SituationTable& table, Clique g, std::size_t t, int anchor) {
  table.check_clique(g);
  table.check_issue(t);
  std::int64_t distance = 0;
  for (auto p : g.indices()) distance += std::abs(table.value(p, t) - anchor);
  return Rational(1) - Rational(distance, 2 * static_cast<std::int64_t>(g.size()));
}

}  // namespace

Rational xu_similarity(const SituationTable& table, Clique g, std::size_t t, Sign sign) {
  return one_minus_mean_distance(table, g, t, sign == Sign::Positive ? 1 : -1);
}

Rating xu_rating(const SituationTable& table, Clique g, std::size_t t) {
  const Rational pos = xu_similarity(table, g, t, Sign::Positive);
  const Rational neg = xu_similarity(table, g, t, Sign::Negative);
  if (pos > neg) return Rating::Positive;
  if (pos < neg) return Rating::Negative;
  return Rating::Neutral;
}

Rational xu_cm(const SituationTable& table, Clique g, std::size_t t) {
  return one_minus_mean_distance(table, g, t, value_of(xu_rating(table, g, t)));
}

Rational xu_cm(const SituationTable& table, Clique g, Strategy j) {
  table.check_strategy(j);
  Rational sum;
  for (auto t : j.indices()) sum += xu_cm(table, g, t);
  return sum / Rational(static_cast<std::int64_t>(j.size()));
}

XuRanking xu_ranking(const SituationTable& table, Clique g) {
  const std::size_t n = table.issue_count();
  std::vector<Rational> per_issue;
  for (std::size_t t = 0; t < n; ++t) per_issue.push_back(xu_cm(table, g, t));
  XuRanking out{g, std::vector<std::size_t>(n), {}};
  std::iota(out.issues.begin(), out.issues.end(), std::size_t{0});
  std::stable_sort(out.issues.begin(), out.issues.end(),
                   [&](std::size_t a, std::size_t b) { return per_issue[a] > per_issue[b]; });
  for (auto t : out.issues) out.degrees.push_back(per_issue[t]);
  return out;
}

std::optional<XuDominant> xu_feasible_L(const SituationTable& table, Clique g, const ParamSet& params) {
  table.check_clique(g);
  params.check_order(table.issue_count());
  if (!clique_gate(g, table.agent_count(), params.gamma_p())) {
    fail(ErrorKind::Gate, "clique " + table.format(g) + " is below gamma_p = " + params.gamma_p().to_display());
  }
  const XuRanking ranking = xu_ranking(table, g);
  const auto order = static_cast<std::size_t>(params.order());
  Strategy top;
  for (std::size_t k = 0; k < order; ++k) top.insert(ranking.issues[k]);
  const Rational degree = xu_cm(table, g, top);
  if (degree < params.lambda()) return std::nullopt;

  Strategy alternates;
  const Rational& cutoff = ranking.degrees[order - 1];
  for (std::size_t k = order; k < ranking.issues.size(); ++k) {
    if (ranking.degrees[k] == cutoff) alternates.insert(ranking.issues[k]);
  }
  return XuDominant{top, degree, alternates};
}

}  // namespace tristrat
