#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tristrat/consistency.hpp"
#include "tristrat/model.hpp"

namespace tristrat {

/// Largest issue count enumerated without an explicit override (2^24 subsets).
inline constexpr std::size_t kDefaultIssueCap = 24;

enum class MeasureKind { Consistency, NonConsistency };

const char* to_string(MeasureKind kind);

struct EngineOptions {
  /// Lifts the issue-count cap; the 64-issue representation limit remains.
  bool allow_large = false;
  /// Restricts the scan to strategies of this size; the result is then the
  /// L-order feasible set directly.
  std::optional<int> order;
  /// 0 resolves through resolve_worker_count().
  unsigned workers = 0;
};

/// TRISTRAT_THREADS when set to a positive integer, else the hardware
/// concurrency (at least 1).
unsigned resolve_worker_count();

/// Visits every nonempty subset of n issues, or only those of size `order`,
/// by cardinality then bitmask value. Capacity error when n exceeds the cap
/// and neither `order` nor `allow_large` bounds the enumeration.
void for_each_strategy(std::size_t n, std::optional<int> order, bool allow_large,
                       const std::function<void(Strategy)>& visit);

std::vector<Strategy> enumerate_strategies(std::size_t n, std::optional<int> order = std::nullopt,
                                           bool allow_large = false);

/// #(g) / m ≥ γ_P, compared exactly.
bool clique_gate(Clique g, std::size_t agent_count, const Rational& gamma_p);

struct ScoredStrategy {
  Strategy strategy;
  Rational degree;

  friend bool operator==(const ScoredStrategy&, const ScoredStrategy&) = default;
};

/// Strategies meeting the kind's threshold, in canonical order.
struct FeasibleSet {
  MeasureKind kind;
  Clique clique;
  ParamSet params;
  std::vector<ScoredStrategy> strategies;

  /// Members with exactly `order` issues.
  FeasibleSet of_order(int order) const;
  std::size_t size() const { return strategies.size(); }
};

/// Every member shares `extremal_degree`; both are empty when no feasible
/// strategy covers a γ_T fraction of the issues.
struct OptimalSet {
  MeasureKind kind;
  std::vector<Strategy> strategies;
  std::optional<Rational> extremal_degree;

  bool empty() const { return strategies.empty(); }
};

/// All strategies with CM ≥ λ. Gate error when the clique fails γ_P.
/// Strategies whose issues all weigh zero have no degree and are skipped.
FeasibleSet feasible_c(const SituationTable& table, const WeightVector& theta, const WeightVector& omega,
                       Clique g, const ParamSet& params, const EngineOptions& options = {});

/// All strategies with NM ≤ τ. Gate error when the clique fails γ_P.
FeasibleSet feasible_n(const SituationTable& table, const WeightVector& theta, const WeightVector& omega,
                       Clique g, const ParamSet& params, const EngineOptions& options = {});

FeasibleSet feasible(MeasureKind kind, const SituationTable& table, const WeightVector& theta,
                     const WeightVector& omega, Clique g, const ParamSet& params,
                     const EngineOptions& options = {});

/// Maximal-CM members among those with #(J)/n ≥ γ_T. Usage error for a
/// non-consistency set.
OptimalSet optimal_c(const FeasibleSet& fs, std::size_t issue_count, const ParamSet& params);

/// Minimal-NM members among those with #(J)/n ≥ γ_T. Usage error for a
/// consistency set.
OptimalSet optimal_n(const FeasibleSet& fs, std::size_t issue_count, const ParamSet& params);

OptimalSet optimal(const FeasibleSet& fs, std::size_t issue_count, const ParamSet& params);

}  // namespace tristrat
