#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "tristrat/cli/config.hpp"
#include "tristrat/strategy.hpp"

namespace tristrat::cli {

using Json = nlohmann::ordered_json;

/// Human text and the machine document of one command run. The document
/// never depends on the worker count.
struct Report {
  std::string text;
  Json json;
};

/// {"num": "...", "den": "...", "decimal": "..."}; num/den are exact
/// decimal integer strings, decimal is rounded to 6 places.
Json degree_json(const Rational& value);
Rational degree_from_json(const Json& value);

struct StrategyRequest {
  /// Both kinds when unset.
  std::optional<MeasureKind> kind;
  /// Overrides the configured L. When the table is too wide for a full
  /// scan, only L-order strategies are computed.
  std::optional<int> order;
  bool optimal_only = false;
  EngineOptions engine;
};

Report run_analyze(const Inputs& inputs);
Report run_strategies(const Inputs& inputs, const StrategyRequest& request);
/// (μ, ν) grid when sweep.mu or sweep.nu is present (an absent axis stays at
/// its base value), otherwise one scalar sweep over λ or τ. `kind` must
/// agree with the swept parameter.
Report run_sweep(const Inputs& inputs, const std::map<SweepParam, SweepAxis>& sweeps,
                 std::optional<MeasureKind> kind, const EngineOptions& engine);
/// Unweighted ratings, degrees and dominant strategy per clique, next to
/// the weighted ratings and consistency-feasible listing.
Report run_baseline(const Inputs& inputs, const EngineOptions& engine);

}  // namespace tristrat::cli
