#pragma once

#include <random>
#include <string>
#include <vector>

#include "tristrat/model.hpp"

// Seeded generators for the randomized suites.
namespace gen {

struct Instance {
  tristrat::SituationTable table;
  tristrat::WeightVector theta;
  tristrat::WeightVector omega;
  tristrat::Clique clique;
};

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline tristrat::Rating rating(std::mt19937_64& rng) {
  return static_cast<tristrat::Rating>(uniform_int(rng, -1, 1));
}

/// Positive weights with small denominators; `allow_zero` lets some entries be 0
/// while keeping the total positive.
inline std::vector<tristrat::Rational> weights(std::mt19937_64& rng, std::size_t count, bool allow_zero = false) {
  std::vector<tristrat::Rational> out;
  for (std::size_t i = 0; i < count; ++i) {
    const int lo = allow_zero ? 0 : 1;
    out.emplace_back(uniform_int(rng, lo, 20), uniform_int(rng, 1, 12));
  }
  if (allow_zero) {
    bool any = false;
    for (const auto& w : out) any = any || !w.is_zero();
    if (!any) out[0] = tristrat::Rational(1);
  }
  return out;
}

inline std::vector<std::string> ids(char prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(std::string(1, prefix) + std::to_string(i + 1));
  return out;
}

inline tristrat::SituationTable table(std::mt19937_64& rng, std::size_t m, std::size_t n) {
  std::vector<tristrat::Rating> cells;
  for (std::size_t i = 0; i < m * n; ++i) cells.push_back(rating(rng));
  return tristrat::SituationTable(ids('p', m), ids('t', n), std::move(cells));
}

/// Nonempty subset of [0, size).
template <tristrat::Axis A>
tristrat::IndexSet<A> subset(std::mt19937_64& rng, std::size_t size) {
  const std::uint64_t full = size == 64 ? ~0ULL : ((1ULL << size) - 1);
  std::uint64_t bits = 0;
  while (bits == 0) bits = std::uniform_int_distribution<std::uint64_t>(0, full)(rng);
  return tristrat::IndexSet<A>(bits);
}

/// Table with m, n in [1, max_m] x [1, max_n]; weights strictly positive.
inline Instance instance(std::mt19937_64& rng, std::size_t max_m = 8, std::size_t max_n = 8) {
  const auto m = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(max_m)));
  const auto n = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(max_n)));
  auto t = table(rng, m, n);
  tristrat::WeightVector theta(tristrat::Axis::Agents, t.agents(), weights(rng, m));
  tristrat::WeightVector omega(tristrat::Axis::Issues, t.issues(), weights(rng, n));
  auto g = subset<tristrat::Axis::Agents>(rng, m);
  return Instance{std::move(t), std::move(theta), std::move(omega), g};
}

/// Rational on a grid of `steps` points in [lo, hi].
inline tristrat::Rational grid_value(std::mt19937_64& rng, const tristrat::Rational& lo, const tristrat::Rational& hi,
                                     int steps = 20) {
  return lo + (hi - lo) * tristrat::Rational(uniform_int(rng, 0, steps), steps);
}

/// Valid parameter set with random thresholds and order within [1, n].
inline tristrat::ParamSet params(std::mt19937_64& rng, std::size_t n) {
  using tristrat::Rational;
  tristrat::ParamValues v;
  v.mu = grid_value(rng, Rational(0), Rational(1));
  v.nu = grid_value(rng, Rational(-1), Rational(0));
  v.lambda = grid_value(rng, Rational(1, 2), Rational(1));
  v.tau = grid_value(rng, Rational(0), Rational(1, 2));
  v.gamma_t = grid_value(rng, Rational(0), Rational(1), 4);
  v.order = uniform_int(rng, 1, static_cast<int>(n));
  v.beta_c = grid_value(rng, Rational(1, 2), Rational(1));
  v.alpha_c = grid_value(rng, v.beta_c, Rational(1));
  v.beta_n = grid_value(rng, Rational(0), Rational(1));
  v.alpha_n = grid_value(rng, v.beta_n, Rational(1));
  return tristrat::ParamSet(v);
}

}  // namespace gen
