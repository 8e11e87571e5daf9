#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tristrat/strategy.hpp"

namespace tristrat {

enum class SweepParam { Mu, Nu, Lambda, Tau };

const char* to_string(SweepParam param);

/// Inclusive lattice start, start + step, ..., stop. The step must divide
/// stop − start exactly and point from start towards stop; a zero step is
/// allowed only when start == stop.
struct SweepAxis {
  SweepParam param;
  Rational start;
  Rational stop;
  Rational step;

  std::vector<Rational> points() const;
};

/// Feasible counts and optimal sets for one measure kind at one cell.
struct KindSummary {
  std::size_t feasible = 0;
  std::size_t feasible_order = 0;
  OptimalSet optimal;
  OptimalSet optimal_order;
};

struct SweepCell {
  /// Parameter values, one per grid axis.
  std::vector<Rational> coords;
  std::optional<Rating> rating;
  std::optional<Rational> cm;
  std::optional<KindSummary> consistency;
  std::optional<KindSummary> nonconsistency;
};

/// Cells in lattice order: the first axis varies slowest.
struct SweepGrid {
  std::vector<SweepAxis> axes;
  std::vector<SweepCell> cells;
};

/// Feasible counts and optimal sets of one kind under `params`, as every
/// sweep cell reports them.
KindSummary summarize(MeasureKind kind, const SituationTable& table, const WeightVector& theta,
                      const WeightVector& omega, Clique g, const ParamSet& params,
                      const EngineOptions& options = {});

/// Rating and CM on `focus` plus consistency counts/optima at each (μ, ν).
SweepGrid sweep_mu_nu(const SituationTable& table, const WeightVector& theta, const WeightVector& omega,
                      Clique g, std::size_t focus, const ParamSet& base, const SweepAxis& mu,
                      const SweepAxis& nu, const EngineOptions& options = {});

/// Counts/optima of `kind` along a λ axis (consistency) or τ axis
/// (non-consistency). Usage error on any other pairing.
SweepGrid sweep_scalar(const SituationTable& table, const WeightVector& theta, const WeightVector& omega,
                       Clique g, MeasureKind kind, const ParamSet& base, const SweepAxis& axis,
                       const EngineOptions& options = {});

}  // namespace tristrat
