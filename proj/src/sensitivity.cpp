#include "tristrat/sensitivity.hpp"

#include "parallel.hpp"

namespace tristrat {

namespace {

ParamSet with_value(const ParamSet& base, SweepParam param, const Rational& value) {
  ParamValues v = base.values();
  switch (param) {
    case SweepParam::Mu: v.mu = value; break;
    case SweepParam::Nu: v.nu = value; break;
    case SweepParam::Lambda: v.lambda = value; break;
    case SweepParam::Tau: v.tau = value; break;
  }
  return ParamSet(v);
}

// Evaluates fill(cell) for every lattice point; cells stay in lattice order.
template <class Fill>
std::vector<SweepCell> evaluate(std::vector<std::vector<Rational>> coords, const EngineOptions& options,
                                Fill&& fill) {
  std::vector<SweepCell> cells(coords.size());
  for (std::size_t i = 0; i < cells.size(); ++i) cells[i].coords = std::move(coords[i]);
  const unsigned workers = options.workers ? options.workers : resolve_worker_count();
  detail::parallel_chunks(cells.size(), workers, [&](std::size_t i) { fill(cells[i]); });
  return cells;
}

}  // namespace

const char* to_string(SweepParam param) {
  switch (param) {
    case SweepParam::Mu: return "mu";
    case SweepParam::Nu: return "nu";
    case SweepParam::Lambda: return "lambda";
    case SweepParam::Tau: return "tau";
  }
  return "?";
}

std::vector<Rational> SweepAxis::points() const {
  const std::string name = to_string(param);
  if (step.is_zero()) {
    if (start != stop) fail(ErrorKind::Validation, "sweep " + name + ": zero step needs start == stop");
    return {start};
  }
  const Rational span = (stop - start) / step;
  if (span.sign() < 0) fail(ErrorKind::Validation, "sweep " + name + ": step points away from stop");
  if (span.denominator() != 1) {
    fail(ErrorKind::Validation, "sweep " + name + ": step does not divide the range exactly");
  }
  const BigInt count = span.numerator() + 1;
  if (count > 100000) fail(ErrorKind::Capacity, "sweep " + name + ": too many lattice points");
  std::vector<Rational> out;
  for (long long k = 0; k < count.convert_to<long long>(); ++k) out.push_back(start + step * Rational(k));
  return out;
}

KindSummary summarize(MeasureKind kind, const SituationTable& table, const WeightVector& theta,
                      const WeightVector& omega, Clique g, const ParamSet& params, const EngineOptions& options) {
  params.check_order(table.issue_count());
  EngineOptions full = options;
  full.order.reset();
  const FeasibleSet fs = feasible(kind, table, theta, omega, g, params, full);
  const FeasibleSet fs_order = fs.of_order(params.order());
  return KindSummary{fs.size(), fs_order.size(), optimal(fs, table.issue_count(), params),
                     optimal(fs_order, table.issue_count(), params)};
}

SweepGrid sweep_mu_nu(const SituationTable& table, const WeightVector& theta, const WeightVector& omega,
                      Clique g, std::size_t focus, const ParamSet& base, const SweepAxis& mu,
                      const SweepAxis& nu, const EngineOptions& options) {
  if (mu.param != SweepParam::Mu || nu.param != SweepParam::Nu) {
    fail(ErrorKind::Usage, "a (mu, nu) sweep needs a mu axis and a nu axis");
  }
  table.check_issue(focus);
  std::vector<std::vector<Rational>> coords;
  for (const auto& m : mu.points()) {
    for (const auto& n : nu.points()) coords.push_back({m, n});
  }
  EngineOptions inner = options;
  inner.workers = 1;
  auto cells = evaluate(std::move(coords), options, [&](SweepCell& cell) {
    const ParamSet params = with_value(with_value(base, SweepParam::Mu, cell.coords[0]), SweepParam::Nu, cell.coords[1]);
    const Powers pw = powers(table, theta, g, focus);
    cell.rating = overall_rating(pw, params);
    cell.cm = cm_issue(table, theta, g, focus, params);
    cell.consistency = summarize(MeasureKind::Consistency, table, theta, omega, g, params, inner);
  });
  return SweepGrid{{mu, nu}, std::move(cells)};
}

SweepGrid sweep_scalar(const SituationTable& table, const WeightVector& theta, const WeightVector& omega,
                       Clique g, MeasureKind kind, const ParamSet& base, const SweepAxis& axis,
                       const EngineOptions& options) {
  const SweepParam expected = kind == MeasureKind::Consistency ? SweepParam::Lambda : SweepParam::Tau;
  if (axis.param != expected) {
    fail(ErrorKind::Usage, std::string("a ") + to_string(kind) + " sweep runs over " + to_string(expected) +
                               ", not " + to_string(axis.param));
  }
  std::vector<std::vector<Rational>> coords;
  for (const auto& v : axis.points()) coords.push_back({v});
  EngineOptions inner = options;
  inner.workers = 1;
  auto cells = evaluate(std::move(coords), options, [&](SweepCell& cell) {
    const ParamSet params = with_value(base, axis.param, cell.coords[0]);
    auto summary = summarize(kind, table, theta, omega, g, params, inner);
    (kind == MeasureKind::Consistency ? cell.consistency : cell.nonconsistency) = std::move(summary);
  });
  return SweepGrid{{axis}, std::move(cells)};
}

}  // namespace tristrat
